#include <doctest.h>

#include "attrcalc/document.hpp"
#include "attrcalc/validation.hpp"
#include "test_helpers.hpp"

using namespace attrcalc;
using testhelp::emerald;
using testhelp::make_schema;

TEST_CASE("parse_document reads the robot concept document") {
    const ConceptDocument document =
        parse_document(testhelp::read_data_file("emerald_concept.xml"));
    CHECK(document.universe_name == "emerald");
    CHECK(document.namespace_uri == "http://www.math-it.org/xml/2002/emerald.xsd");
    REQUIRE(document.concepts.size() == 1);
    const Concept& c = document.concepts[0];
    CHECK_FALSE(c.name.has_value());
    REQUIRE(c.rules.size() == 2);
    REQUIRE(c.rules[0].constraints.size() == 2);
    REQUIRE(c.rules[1].constraints.size() == 2);
    CHECK(c.rules[0].constraints[0] == Selector{"headShape", {"round"}});
    CHECK(c.rules[0].constraints[1] == Selector{"jacketColor", {"red"}});
    CHECK(c.rules[1].constraints[0] == Selector{"headShape", {"square"}});
    CHECK(c.rules[1].constraints[1] == Selector{"holding", {"balloon"}});
}

TEST_CASE("parse_document handles empty documents and concept names") {
    CHECK(parse_document("<emerald></emerald>").concepts.empty());
    CHECK(parse_document("<emerald/>").concepts.empty());
    CHECK(parse_document("<emerald/>").namespace_uri.empty());

    const ConceptDocument named =
        parse_document("<u><concept name=\"C\"/><concept/></u>");
    REQUIRE(named.concepts.size() == 2);
    CHECK(named.concepts[0].name == "C");
    CHECK_FALSE(named.concepts[1].name.has_value());
}

TEST_CASE("parse_document rejects structure violations") {
    CHECK_THROWS_AS(parse_document("<emerald><concept><rule x=\"1\"</concept></emerald>"),
                    ParseError);
    CHECK_THROWS_AS(parse_document("<emerald><rule x=\"1\"/></emerald>"), ParseError);
    CHECK_THROWS_AS(parse_document("<emerald><concept><thing/></concept></emerald>"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_document("<emerald><concept><rule><rule/></rule></concept></emerald>"),
        ParseError);
    CHECK_THROWS_AS(parse_document("<emerald><concept><rule>text</rule></concept></emerald>"),
                    ParseError);
    CHECK_THROWS_AS(parse_document("<emerald><concept odd=\"1\"/></emerald>"), ParseError);
    CHECK_THROWS_AS(parse_document("<emerald other=\"1\"></emerald>"), ParseError);
    CHECK_THROWS_AS(parse_document("<emerald xmlns:p=\"urn:x\"></emerald>"), ParseError);
    CHECK_THROWS_AS(parse_document("<p:emerald/>"), ParseError);
}

TEST_CASE("serialize_document emits the canonical form") {
    const UniverseSchema schema = emerald();

    SUBCASE("the robot concept document round-trips byte for byte") {
        const std::string golden = testhelp::read_data_file("emerald_concept.xml");
        const ConceptDocument document = parse_document(golden);
        CHECK(serialize_document(document, schema) == golden);
    }

    SUBCASE("no concepts yields only the root element") {
        const ConceptDocument document{"emerald", schema.namespace_uri(), {}};
        CHECK(serialize_document(document, schema) ==
              "<?xml version=\"1.0\"?>\n"
              "<emerald xmlns=\"http://www.math-it.org/xml/2002/emerald.xsd\"/>\n");
    }

    SUBCASE("rule attributes are reordered into declaration order") {
        ConceptDocument document{"emerald", schema.namespace_uri(), {}};
        document.concepts.push_back(Concept{
            std::nullopt,
            {Rule{{Selector{"jacketColor", {"red"}}, Selector{"headShape", {"round"}}}}}});
        const std::string text = serialize_document(document, schema);
        CHECK(text.find("<rule headShape=\"round\" jacketColor=\"red\"/>") !=
              std::string::npos);
    }

    SUBCASE("serialization is deterministic") {
        const ConceptDocument document{
            "emerald", schema.namespace_uri(), {testhelp::emerald_concept_c()}};
        CHECK(serialize_document(document, schema) == serialize_document(document, schema));
    }

    SUBCASE("a missing namespace is filled in from the schema") {
        const ConceptDocument document = parse_document("<emerald/>");
        CHECK(serialize_document(document, schema) ==
              "<?xml version=\"1.0\"?>\n"
              "<emerald xmlns=\"http://www.math-it.org/xml/2002/emerald.xsd\"/>\n");
    }
}

TEST_CASE("value-set rules expand into sibling rule elements") {
    const UniverseSchema schema = emerald();
    ConceptDocument document{"emerald", schema.namespace_uri(), {}};
    document.concepts.push_back(
        Concept{std::nullopt, {Rule{{Selector{"holding", {"balloon", "flag"}}}}}});

    const std::string text = serialize_document(document, schema);
    CHECK(text.find("<rule holding=\"balloon\"/>") != std::string::npos);
    CHECK(text.find("<rule holding=\"flag\"/>") != std::string::npos);

    // the expansion preserves the extension
    const ConceptDocument reparsed = parse_document(text);
    CHECK(equivalent(reparsed.concepts[0], document.concepts[0], schema));

    SUBCASE("expansion can be disabled") {
        SerializeOptions options;
        options.expand_value_sets = false;
        CHECK_THROWS_AS(serialize_document(document, schema, options), SerializeError);
    }

    SUBCASE("the expansion limit is enforced") {
        SerializeOptions options;
        options.expansion_limit = 1;
        CHECK_THROWS_AS(serialize_document(document, schema, options), SerializeError);
    }

    SUBCASE("a contradictory rule vanishes but stays extension-equal") {
        ConceptDocument contradictory{"emerald", schema.namespace_uri(), {}};
        contradictory.concepts.push_back(
            Concept{std::nullopt, {Rule{{Selector{"holding", {}}}}}});
        const std::string out = serialize_document(contradictory, schema);
        CHECK(out.find("<rule") == std::string::npos);
        const ConceptDocument back = parse_document(out);
        CHECK(equivalent(back.concepts[0], contradictory.concepts[0], schema));
    }
}

TEST_CASE("serialize_document insists on a valid document") {
    const UniverseSchema schema = emerald();
    ConceptDocument document{"wrong", schema.namespace_uri(), {}};
    CHECK_THROWS_AS(serialize_document(document, schema), SerializeError);

    ConceptDocument bad_value{"emerald", schema.namespace_uri(), {}};
    bad_value.concepts.push_back(
        Concept{std::nullopt, {Rule{{Selector{"jacketColor", {"purple"}}}}}});
    CHECK_THROWS_AS(serialize_document(bad_value, schema), SerializeError);
}

TEST_CASE("documents round-trip structurally") {
    std::mt19937 rng(20240814);
    for (int trial = 0; trial < 150; ++trial) {
        const UniverseSchema schema = testhelp::random_schema(rng);

        ConceptDocument document;
        document.universe_name = schema.name();
        document.namespace_uri = schema.namespace_uri();
        std::uniform_int_distribution<int> concepts(0, 3);
        std::uniform_int_distribution<int> coin(0, 1);
        const int concept_count = concepts(rng);
        for (int i = 0; i < concept_count; ++i) {
            Concept c = testhelp::random_concept(rng, schema, 4, false);
            // elementary form: one value per constraint
            for (Rule& rule : c.rules) {
                for (Selector& selector : rule.constraints) {
                    selector.allowed.resize(1);
                }
            }
            if (coin(rng) == 1) {
                c.name = "concept_" + std::to_string(i);
            }
            document.concepts.push_back(std::move(c));
        }

        const std::string text = serialize_document(document, schema);
        const ConceptDocument reparsed = parse_document(text);
        CHECK(reparsed == document);
        CHECK(serialize_document(reparsed, schema) == text);

        // matching agrees before serialization and after reparsing
        for (std::size_t i = 0; i < document.concepts.size(); ++i) {
            for (const ObjectInstance& object : testhelp::oracle_universe(schema)) {
                CHECK(concept_matches(document.concepts[i], object, schema) ==
                      concept_matches(reparsed.concepts[i], object, schema));
            }
        }
    }
}

TEST_CASE("escaped characters survive the round trip") {
    const UniverseSchema schema =
        make_schema("u", {{"a", {"a&b", "<tag>", "qu\"ote", "plain"}}}, "urn:x");
    ConceptDocument document{"u", "urn:x", {}};
    document.concepts.push_back(
        Concept{std::string("we&\"ird<name>"), {Rule{{Selector{"a", {"a&b"}}}}}});
    const std::string text = serialize_document(document, schema);
    const ConceptDocument reparsed = parse_document(text);
    CHECK(reparsed == document);
}
