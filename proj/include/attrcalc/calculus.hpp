#pragma once

#include <optional>
#include <string>
#include <vector>

#include "attrcalc/schema.hpp"

namespace attrcalc {

// Constrains one attribute to a set of allowed values. A singleton set is
// the elementary form; a larger set stands for the disjunction of its
// elementary forms; an empty set matches nothing.
struct Selector {
    std::string attribute;
    std::vector<std::string> allowed;

    bool operator==(const Selector& other) const = default;
};

// A conjunction of selectors, at most one per attribute. Attributes that
// carry no selector are unconstrained ("don't care"); a rule with no
// selectors matches every object.
struct Rule {
    std::vector<Selector> constraints;

    const Selector* find(std::string_view attribute) const;

    bool operator==(const Rule& other) const = default;
};

// A disjunction of rules, i.e. a concept in disjunctive normal form. With
// no rules it matches nothing.
struct Concept {
    std::optional<std::string> name;
    std::vector<Rule> rules;

    bool operator==(const Concept& other) const = default;
};

// One universe object together with its membership flag for some concept.
struct LabeledExample {
    ObjectInstance object;
    bool positive = false;

    bool operator==(const LabeledExample& other) const = default;
};

// Whether the object's value for the selector's attribute is among the
// allowed values. Throws SchemaMismatchError on inputs that do not fit the
// schema (unknown attribute, out-of-range values, wrong arity).
bool selector_matches(const Selector& selector,
                      const ObjectInstance& object,
                      const UniverseSchema& schema);

// Whether every selector of the rule matches. The empty rule matches all.
bool rule_matches(const Rule& rule,
                  const ObjectInstance& object,
                  const UniverseSchema& schema);

// Whether at least one rule matches. The empty concept matches nothing.
bool concept_matches(const Concept& c,
                     const ObjectInstance& object,
                     const UniverseSchema& schema);

// An extension-equal concept with contradictory rules dropped, vacuous
// full-range selectors removed, and rules subsumed by a weaker retained
// rule removed. Rule order is preserved; under mutual subsumption the
// earlier rule survives. Allowed sets come back deduplicated and sorted
// in range order.
Concept simplify(const Concept& c, const UniverseSchema& schema);

namespace detail {

// Sorted, deduplicated positions of the selector's allowed values within
// the attribute's range. Throws SchemaMismatchError on undeclared values.
std::vector<std::size_t> allowed_value_indices(const Selector& selector,
                                               const AttributeDef& attribute);

// Throws SchemaMismatchError if the rule constrains one attribute twice.
void check_unique_constraints(const Rule& rule);

} // namespace detail

} // namespace attrcalc
