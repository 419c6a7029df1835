"""End-to-end smoke tests for the python bindings."""

import pytest

import attrcalc


@pytest.fixture()
def emerald():
    return attrcalc.UniverseSchema(
        "emerald",
        "http://www.math-it.org/xml/2002/emerald.xsd",
        [
            attrcalc.AttributeDef("headShape", ["round", "square", "octagon"]),
            attrcalc.AttributeDef("bodyShape", ["round", "square", "octagon"]),
            attrcalc.AttributeDef("isSmiling", ["true", "false"]),
            attrcalc.AttributeDef("holding", ["sword", "balloon", "flag"]),
            attrcalc.AttributeDef("jacketColor", ["red", "yellow", "green", "blue"]),
            attrcalc.AttributeDef("hasTie", ["yes", "no"]),
        ],
    )


@pytest.fixture()
def concept_c(emerald):
    expr = attrcalc.parse_vl1(
        "[headShape=round][jacketColor=red] v [headShape=square][holding=balloon]",
        emerald,
    )
    return attrcalc.lower_to_concept(expr, emerald)


def test_universe_counts(emerald, concept_c):
    assert attrcalc.universe_size(emerald) == 432
    assert len(attrcalc.attribute_value_pairs(emerald)) == 17
    assert attrcalc.count_extension(concept_c, emerald) == 84


def test_matching(emerald, concept_c):
    assert attrcalc.concept_matches(
        concept_c, ["round", "round", "true", "sword", "red", "yes"], emerald
    )
    assert not attrcalc.concept_matches(
        concept_c, ["octagon", "round", "true", "sword", "red", "yes"], emerald
    )
    with pytest.raises(attrcalc.SchemaMismatchError):
        attrcalc.concept_matches(concept_c, ["round"], emerald)


def test_streams(emerald, concept_c):
    objects = list(attrcalc.enumerate_extension(concept_c, emerald))
    assert len(objects) == 84
    assert objects[0].values == ["round", "round", "true", "sword", "red", "yes"]

    labeled = list(attrcalc.label_examples(concept_c, emerald))
    assert len(labeled) == 432
    assert sum(1 for example in labeled if example.positive) == 84


def test_xml_round_trip(emerald, concept_c):
    document = attrcalc.ConceptDocument("emerald", emerald.namespace_uri, [concept_c])
    text = attrcalc.serialize_document(document, emerald)
    assert text.startswith('<?xml version="1.0"?>\n<emerald')
    reparsed = attrcalc.parse_document(text)
    assert reparsed == document
    assert attrcalc.validate_document(reparsed, emerald).valid


def test_schema_round_trip(emerald):
    text = attrcalc.generate_schema(emerald)
    assert attrcalc.parse_schema(text) == emerald


def test_validation_reports(emerald):
    document = attrcalc.parse_document(
        '<emerald><concept><rule jacketColor="purple"/></concept></emerald>'
    )
    report = attrcalc.validate_document(document, emerald)
    assert not report.valid
    assert report.issues[0].code == "value-out-of-range"
    assert "purple" in attrcalc.render_report(report)


def test_vl1_helpers(emerald):
    selector = attrcalc.Vl1Selector("holding", attrcalc.Vl1Relation.NE, "sword")
    expanded = attrcalc.expand_selector(selector, emerald)
    assert expanded.allowed == ["balloon", "flag"]

    expr = attrcalc.parse_vl1("[holding<>sword]", emerald)
    assert attrcalc.vl1_to_string(expr) == "[holding<>sword]"
    lowered = attrcalc.lower_to_concept(expr, emerald)
    assert attrcalc.count_extension(lowered, emerald) == 288


def test_simplify_and_equivalence(emerald, concept_c):
    redundant = attrcalc.Concept(None, list(concept_c.rules) + [concept_c.rules[0]])
    simplified = attrcalc.simplify(redundant, emerald)
    assert len(simplified.rules) == 2
    assert attrcalc.equivalent(redundant, simplified, emerald)

    witness = attrcalc.first_difference(concept_c, attrcalc.Concept(), emerald)
    assert witness.values == ["round", "round", "true", "sword", "red", "yes"]


def test_universe_definition_parsing():
    schema = attrcalc.parse_universe_definition(
        "universe: tiny\nnamespace: urn:x\na: x, y\nb: p, q\n"
    )
    assert schema.name == "tiny"
    assert attrcalc.universe_size(schema) == 4
    assert attrcalc.load_universe(attrcalc.generate_schema(schema)) == schema
