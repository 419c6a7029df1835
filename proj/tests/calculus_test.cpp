#include <doctest.h>

#include "test_helpers.hpp"

using namespace attrcalc;
using testhelp::emerald;
using testhelp::make_schema;

namespace {

ObjectInstance robot(const std::string& csv) {
    ObjectInstance object;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = csv.find(',', begin);
        object.values.push_back(csv.substr(begin, comma - begin));
        if (comma == std::string::npos) {
            return object;
        }
        begin = comma + 1;
    }
}

} // namespace

TEST_CASE("selector_matches checks membership in the allowed set") {
    const UniverseSchema schema = emerald();
    const ObjectInstance round_red = robot("round,square,true,sword,red,yes");

    CHECK(selector_matches(Selector{"headShape", {"round"}}, round_red, schema));
    CHECK_FALSE(selector_matches(Selector{"headShape", {}}, round_red, schema));
    CHECK_FALSE(selector_matches(Selector{"holding", {"balloon", "flag"}},
                                 robot("round,square,true,sword,red,yes"), schema));
    CHECK(selector_matches(Selector{"holding", {"balloon", "flag"}},
                           robot("round,square,true,flag,red,yes"), schema));

    CHECK_THROWS_AS(selector_matches(Selector{"nosuch", {"round"}}, round_red, schema),
                    SchemaMismatchError);
    CHECK_THROWS_AS(selector_matches(Selector{"headShape", {"triangle"}}, round_red, schema),
                    SchemaMismatchError);
}

TEST_CASE("rule_matches is the conjunction of its selectors") {
    const UniverseSchema schema = emerald();
    const Rule rule{{Selector{"headShape", {"round"}}, Selector{"jacketColor", {"red"}}}};

    CHECK(rule_matches(Rule{}, robot("octagon,round,false,flag,blue,no"), schema));
    CHECK(rule_matches(rule, robot("round,square,true,sword,red,yes"), schema));
    CHECK_FALSE(rule_matches(rule, robot("round,square,true,sword,blue,yes"), schema));

    const Rule duplicated{{Selector{"headShape", {"round"}}, Selector{"headShape", {"square"}}}};
    CHECK_THROWS_AS(rule_matches(duplicated, robot("round,square,true,sword,red,yes"), schema),
                    SchemaMismatchError);
}

TEST_CASE("concept_matches is the disjunction of its rules") {
    const UniverseSchema schema = emerald();
    const Concept c = testhelp::emerald_concept_c();

    CHECK(concept_matches(c, robot("square,round,false,balloon,green,no"), schema));
    CHECK_FALSE(concept_matches(Concept{}, robot("round,round,true,sword,red,yes"), schema));
    CHECK_FALSE(concept_matches(c, robot("octagon,round,true,sword,red,yes"), schema));
}

TEST_CASE("matching agrees with the string-scan oracle on random inputs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const UniverseSchema schema = testhelp::random_schema(rng);
        const Concept c = testhelp::random_concept(rng, schema);
        for (const ObjectInstance& object : testhelp::oracle_universe(schema)) {
            CHECK(concept_matches(c, object, schema) ==
                  testhelp::oracle_concept_matches(c, object, schema));
        }
    }
}

TEST_CASE("simplify drops contradictory rules") {
    const UniverseSchema schema = make_schema("u", {{"a", {"x", "y"}}});
    const Concept c{std::nullopt, {Rule{{Selector{"a", {}}}}}};
    CHECK(simplify(c, schema).rules.empty());
}

TEST_CASE("simplify removes rules subsumed by a don't-care rule") {
    const UniverseSchema schema = make_schema("u", {{"a", {"x", "y"}}});
    const Concept c{std::nullopt, {Rule{}, Rule{{Selector{"a", {"x"}}}}}};
    const Concept simplified = simplify(c, schema);
    REQUIRE(simplified.rules.size() == 1);
    CHECK(simplified.rules[0] == Rule{});

    // subsumption also reaches backwards: the later, weaker rule wins
    const Concept flipped{std::nullopt, {Rule{{Selector{"a", {"x"}}}}, Rule{}}};
    const Concept simplified_flipped = simplify(flipped, schema);
    REQUIRE(simplified_flipped.rules.size() == 1);
    CHECK(simplified_flipped.rules[0] == Rule{});
}

TEST_CASE("simplify deletes full-range constraints") {
    const UniverseSchema schema = make_schema("u", {{"a", {"x", "y"}}});
    const Concept c{std::nullopt, {Rule{{Selector{"a", {"x", "y"}}}}}};
    const Concept simplified = simplify(c, schema);
    REQUIRE(simplified.rules.size() == 1);
    CHECK(simplified.rules[0] == Rule{});
}

TEST_CASE("simplify keeps the earlier rule under mutual subsumption") {
    const UniverseSchema schema = make_schema("u", {{"a", {"x", "y"}}, {"b", {"p", "q"}}});
    // same constraint set spelled in different orders
    const Rule first{{Selector{"a", {"x"}}, Selector{"b", {"p", "q"}}}};
    const Rule second{{Selector{"a", {"x"}}}};
    const Concept c{std::nullopt, {first, second, second}};
    const Concept simplified = simplify(c, schema);
    // "b" is full range, so both rules normalize to [a=x]; one survives
    REQUIRE(simplified.rules.size() == 1);
    CHECK(simplified.rules[0] == Rule{{Selector{"a", {"x"}}}});
}

TEST_CASE("simplify preserves the extension and concept name") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const UniverseSchema schema = testhelp::random_schema(rng);
        Concept c = testhelp::random_concept(rng, schema);
        c.name = "sample";
        const Concept simplified = simplify(c, schema);
        CHECK(simplified.name == c.name);
        CHECK(equivalent(c, simplified, schema));
        CHECK(simplified.rules.size() <= c.rules.size());
    }
}
