"""Attribute-value concept calculus with an XML document format.

Universes are finite attribute/range declarations; concepts are unions of
conjunctive rules over them. This package exposes the matching, counting,
enumeration and XML (de)serialization operations of the C++ core.
"""

from attrcalc._core import (
    AttributeDef,
    Concept,
    ConceptDocument,
    ExtensionStream,
    LabeledExample,
    LabeledExampleStream,
    ObjectInstance,
    ParseError,
    Rule,
    SchemaError,
    SchemaMismatchError,
    Selector,
    SerializeError,
    Severity,
    UniverseSchema,
    ValidationIssue,
    ValidationReport,
    Vl1Expression,
    Vl1Relation,
    Vl1Selector,
    __version__,
    attribute_value_pairs,
    concept_matches,
    count_extension,
    enumerate_extension,
    equivalent,
    expand_selector,
    first_difference,
    generate_schema,
    label_examples,
    load_universe,
    lower_to_concept,
    parse_document,
    parse_schema,
    parse_universe_definition,
    parse_vl1,
    render_report,
    rule_matches,
    selector_matches,
    serialize_document,
    simplify,
    universe_size,
    validate_document,
    vl1_to_string,
)

__all__ = [
    "AttributeDef",
    "Concept",
    "ConceptDocument",
    "ExtensionStream",
    "LabeledExample",
    "LabeledExampleStream",
    "ObjectInstance",
    "ParseError",
    "Rule",
    "SchemaError",
    "SchemaMismatchError",
    "Selector",
    "SerializeError",
    "Severity",
    "UniverseSchema",
    "ValidationIssue",
    "ValidationReport",
    "Vl1Expression",
    "Vl1Relation",
    "Vl1Selector",
    "__version__",
    "attribute_value_pairs",
    "concept_matches",
    "count_extension",
    "enumerate_extension",
    "equivalent",
    "expand_selector",
    "first_difference",
    "generate_schema",
    "label_examples",
    "load_universe",
    "lower_to_concept",
    "parse_document",
    "parse_schema",
    "parse_universe_definition",
    "parse_vl1",
    "render_report",
    "rule_matches",
    "selector_matches",
    "serialize_document",
    "simplify",
    "universe_size",
    "validate_document",
    "vl1_to_string",
]
