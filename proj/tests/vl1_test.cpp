#include <doctest.h>

#include "test_helpers.hpp"

using namespace attrcalc;
using testhelp::emerald;

namespace {

const char* kConceptCExpression =
    "[headShape=round][jacketColor=red] v [headShape=square][holding=balloon]";

} // namespace

TEST_CASE("parse_vl1 reads disjunctions of conjunctions") {
    const UniverseSchema schema = emerald();

    const Vl1Expression c = parse_vl1(kConceptCExpression, schema);
    REQUIRE(c.disjuncts.size() == 2);
    REQUIRE(c.disjuncts[0].size() == 2);
    REQUIRE(c.disjuncts[1].size() == 2);
    CHECK(c.disjuncts[0][0] == Vl1Selector{"headShape", Vl1Relation::eq, "round"});
    CHECK(c.disjuncts[1][1] == Vl1Selector{"holding", Vl1Relation::eq, "balloon"});

    const Vl1Expression single = parse_vl1("[hasTie=yes]", schema);
    REQUIRE(single.disjuncts.size() == 1);
    REQUIRE(single.disjuncts[0].size() == 1);

    // '&' and '|' spellings, whitespace anywhere outside tokens
    const Vl1Expression spelled =
        parse_vl1("  [ headShape = round ] & [jacketColor=red]\n| [hasTie=no]", schema);
    CHECK(spelled.disjuncts.size() == 2);
    CHECK(spelled.disjuncts[0].size() == 2);
}

TEST_CASE("parse_vl1 rejects bad input with positions") {
    const UniverseSchema schema = emerald();

    CHECK_THROWS_AS(parse_vl1("[headShape=triangle]", schema), SchemaMismatchError);
    CHECK_THROWS_AS(parse_vl1("[wings=yes]", schema), SchemaMismatchError);

    try {
        parse_vl1("[headShape round]", schema);
        FAIL("expected a parse error");
    } catch (const ParseError& error) {
        CHECK(error.line() == 1);
        CHECK(error.column() == 12);
        CHECK(std::string(error.what()).find("relation") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_vl1("", schema), ParseError);
    CHECK_THROWS_AS(parse_vl1("[headShape=round] extra", schema), ParseError);
    CHECK_THROWS_AS(parse_vl1("[headShape=round", schema), ParseError);
    CHECK_THROWS_AS(parse_vl1("[headShape~round]", schema), ParseError);
    CHECK_THROWS_AS(parse_vl1("[headShape=round] v", schema), ParseError);
}

TEST_CASE("quoted values cover whitespace and bracket characters") {
    const UniverseSchema schema = testhelp::make_schema(
        "u", {{"a", {"plain", "two words", "br]acket", "qu\"ote"}}});

    CHECK(parse_vl1("[a=\"two words\"]", schema).disjuncts[0][0].value == "two words");
    CHECK(parse_vl1("[a=\"br]acket\"]", schema).disjuncts[0][0].value == "br]acket");
    CHECK(parse_vl1("[a=\"qu\\\"ote\"]", schema).disjuncts[0][0].value == "qu\"ote");
    CHECK_THROWS_AS(parse_vl1("[a=\"two words]", schema), ParseError);

    // canonical printing round-trips the quoting
    const Vl1Expression e = parse_vl1("[a=\"qu\\\"ote\"] v [a=plain]", schema);
    CHECK(to_string(e) == "[a=\"qu\\\"ote\"] v [a=plain]");
    CHECK(parse_vl1(to_string(e), schema) == e);
}

TEST_CASE("expand_selector computes allowed sets from range order") {
    const UniverseSchema schema = emerald();

    CHECK(expand_selector(Vl1Selector{"holding", Vl1Relation::ne, "sword"}, schema) ==
          Selector{"holding", {"balloon", "flag"}});
    CHECK(expand_selector(Vl1Selector{"jacketColor", Vl1Relation::eq, "red"}, schema) ==
          Selector{"jacketColor", {"red"}});
    CHECK(expand_selector(Vl1Selector{"jacketColor", Vl1Relation::lt, "green"}, schema) ==
          Selector{"jacketColor", {"red", "yellow"}});
    CHECK(expand_selector(Vl1Selector{"jacketColor", Vl1Relation::le, "green"}, schema) ==
          Selector{"jacketColor", {"red", "yellow", "green"}});
    CHECK(expand_selector(Vl1Selector{"jacketColor", Vl1Relation::gt, "green"}, schema) ==
          Selector{"jacketColor", {"blue"}});
    CHECK(expand_selector(Vl1Selector{"jacketColor", Vl1Relation::ge, "green"}, schema) ==
          Selector{"jacketColor", {"green", "blue"}});
}

TEST_CASE("expansion sizes partition the range") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const UniverseSchema schema = testhelp::random_schema(rng);
        for (const AttributeDef& attribute : schema.attributes()) {
            for (const std::string& value : attribute.range()) {
                const auto size = [&](Vl1Relation relation) {
                    return expand_selector(Vl1Selector{attribute.name(), relation, value},
                                           schema)
                        .allowed.size();
                };
                CHECK(size(Vl1Relation::eq) == 1);
                CHECK(size(Vl1Relation::ne) == attribute.range_size() - 1);
                CHECK(size(Vl1Relation::lt) + size(Vl1Relation::ge) == attribute.range_size());
                CHECK(size(Vl1Relation::le) + size(Vl1Relation::gt) == attribute.range_size());
            }
        }
    }
}

TEST_CASE("lower_to_concept produces the disjunctive normal form") {
    const UniverseSchema schema = emerald();

    SUBCASE("the two-rule robot concept counts 84") {
        const Concept lowered = lower_to_concept(parse_vl1(kConceptCExpression, schema), schema);
        REQUIRE(lowered.rules.size() == 2);
        CHECK(count_extension(lowered, schema) == 84);
        CHECK(equivalent(lowered, testhelp::emerald_concept_c(), schema));
    }

    SUBCASE("contradictions become empty allowed sets") {
        const Concept lowered =
            lower_to_concept(parse_vl1("[hasTie=yes][hasTie<>yes]", schema), schema);
        REQUIRE(lowered.rules.size() == 1);
        REQUIRE(lowered.rules[0].constraints.size() == 1);
        CHECK(lowered.rules[0].constraints[0].allowed.empty());
        CHECK(count_extension(lowered, schema) == 0);
    }

    SUBCASE("a negation selector keeps two thirds of the universe") {
        const Concept lowered = lower_to_concept(parse_vl1("[holding<>sword]", schema), schema);
        REQUIRE(lowered.rules.size() == 1);
        CHECK(lowered.rules[0].constraints[0].allowed ==
              std::vector<std::string>{"balloon", "flag"});
        CHECK(count_extension(lowered, schema) == 288); // (432/3)*2, oracle-checked below
        CHECK(testhelp::oracle_count(lowered, schema) == 288);
    }

    SUBCASE("repeated attributes intersect") {
        const Concept lowered =
            lower_to_concept(parse_vl1("[jacketColor>red][jacketColor<blue]", schema), schema);
        REQUIRE(lowered.rules.size() == 1);
        CHECK(lowered.rules[0].constraints[0].allowed ==
              std::vector<std::string>{"yellow", "green"});
    }
}

TEST_CASE("the negation expansion equals the explicit disjunction of the rest") {
    const UniverseSchema schema = emerald();
    for (const AttributeDef& attribute : schema.attributes()) {
        for (const std::string& pivot : attribute.range()) {
            const Concept lowered = lower_to_concept(
                Vl1Expression{{{Vl1Selector{attribute.name(), Vl1Relation::ne, pivot}}}},
                schema);
            Concept explicit_rest;
            for (const std::string& value : attribute.range()) {
                if (value != pivot) {
                    explicit_rest.rules.push_back(
                        Rule{{Selector{attribute.name(), {value}}}});
                }
            }
            CHECK(equivalent(lowered, explicit_rest, schema));
        }
    }
}

TEST_CASE("lowered expressions agree with direct evaluation on random universes") {
    std::mt19937 rng(20240813);
    for (int trial = 0; trial < 200; ++trial) {
        const UniverseSchema schema = testhelp::random_schema(rng);
        const Vl1Expression expression = testhelp::random_vl1(rng, schema);
        const Concept lowered = lower_to_concept(expression, schema);
        for (const ObjectInstance& object : testhelp::oracle_universe(schema)) {
            CHECK(concept_matches(lowered, object, schema) ==
                  testhelp::oracle_vl1_matches(expression, object, schema));
        }
    }
}

TEST_CASE("parse then print is a fixpoint") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const UniverseSchema schema = testhelp::random_schema(rng);
        const Vl1Expression expression = testhelp::random_vl1(rng, schema);
        const std::string printed = to_string(expression);
        const Vl1Expression reparsed = parse_vl1(printed, schema);
        CHECK(reparsed == expression);
        CHECK(to_string(reparsed) == printed);
    }
}
