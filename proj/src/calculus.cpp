#include "attrcalc/calculus.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace attrcalc {

const Selector* Rule::find(std::string_view attribute) const {
    for (const Selector& selector : constraints) {
        if (selector.attribute == attribute) {
            return &selector;
        }
    }
    return nullptr;
}

namespace detail {

std::vector<std::size_t> allowed_value_indices(const Selector& selector,
                                               const AttributeDef& attribute) {
    std::vector<std::size_t> indices;
    indices.reserve(selector.allowed.size());
    for (const std::string& value : selector.allowed) {
        auto index = attribute.value_index(value);
        if (!index) {
            throw SchemaMismatchError("value \"" + value +
                                      "\" is not in the range of attribute \"" +
                                      attribute.name() + "\"");
        }
        indices.push_back(*index);
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return indices;
}

void check_unique_constraints(const Rule& rule) {
    std::unordered_set<std::string_view> seen;
    for (const Selector& selector : rule.constraints) {
        if (!seen.insert(selector.attribute).second) {
            throw SchemaMismatchError("rule constrains attribute \"" + selector.attribute +
                                      "\" more than once");
        }
    }
}

} // namespace detail

namespace {

bool selector_matches_checked_object(const Selector& selector,
                                     const ObjectInstance& object,
                                     const UniverseSchema& schema) {
    const std::size_t index = schema.require_attribute(selector.attribute);
    const AttributeDef& attribute = schema.attribute_at(index);
    const auto allowed = detail::allowed_value_indices(selector, attribute);
    const auto value = attribute.value_index(object.values[index]);
    return std::binary_search(allowed.begin(), allowed.end(), *value);
}

} // namespace

bool selector_matches(const Selector& selector,
                      const ObjectInstance& object,
                      const UniverseSchema& schema) {
    check_object(object, schema);
    return selector_matches_checked_object(selector, object, schema);
}

bool rule_matches(const Rule& rule,
                  const ObjectInstance& object,
                  const UniverseSchema& schema) {
    check_object(object, schema);
    detail::check_unique_constraints(rule);
    return std::all_of(rule.constraints.begin(), rule.constraints.end(),
                       [&](const Selector& selector) {
                           return selector_matches_checked_object(selector, object, schema);
                       });
}

bool concept_matches(const Concept& c,
                     const ObjectInstance& object,
                     const UniverseSchema& schema) {
    check_object(object, schema);
    return std::any_of(c.rules.begin(), c.rules.end(), [&](const Rule& rule) {
        detail::check_unique_constraints(rule);
        return std::all_of(rule.constraints.begin(), rule.constraints.end(),
                           [&](const Selector& selector) {
                               return selector_matches_checked_object(selector, object, schema);
                           });
    });
}

namespace {

// Normalized rule: attribute position -> sorted allowed positions. Vacuous
// full-range constraints are already removed, so every entry is a proper
// nonempty subset of its range.
using IndexRule = std::map<std::size_t, std::vector<std::size_t>>;

// True if ruleA admits every object ruleB admits: each of A's constraints
// must be matched by a tighter-or-equal constraint of B.
bool subsumes(const IndexRule& weaker, const IndexRule& tighter) {
    for (const auto& [attribute, weak_allowed] : weaker) {
        auto it = tighter.find(attribute);
        if (it == tighter.end()) {
            return false;
        }
        if (!std::includes(weak_allowed.begin(), weak_allowed.end(),
                           it->second.begin(), it->second.end())) {
            return false;
        }
    }
    return true;
}

} // namespace

Concept simplify(const Concept& c, const UniverseSchema& schema) {
    struct Candidate {
        Rule rule;          // normalized surface form
        IndexRule indexed;  // lookup form for subsumption checks
    };
    std::vector<Candidate> candidates;

    for (const Rule& rule : c.rules) {
        detail::check_unique_constraints(rule);
        Candidate candidate;
        bool contradictory = false;
        for (const Selector& selector : rule.constraints) {
            const std::size_t attribute = schema.require_attribute(selector.attribute);
            auto indices = detail::allowed_value_indices(selector,
                                                         schema.attribute_at(attribute));
            if (indices.empty()) {
                contradictory = true;
                break;
            }
            if (indices.size() == schema.attribute_at(attribute).range_size()) {
                continue; // full range constrains nothing
            }
            Selector normalized{selector.attribute, {}};
            for (std::size_t index : indices) {
                normalized.allowed.push_back(schema.attribute_at(attribute).range()[index]);
            }
            candidate.rule.constraints.push_back(std::move(normalized));
            candidate.indexed.emplace(attribute, std::move(indices));
        }
        if (!contradictory) {
            candidates.push_back(std::move(candidate));
        }
    }

    Concept result{c.name, {}};
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool removed = false;
        for (std::size_t j = 0; j < candidates.size() && !removed; ++j) {
            if (j == i || !subsumes(candidates[j].indexed, candidates[i].indexed)) {
                continue;
            }
            // Strictly weaker rule wins; between equals the earlier one stays.
            removed = !subsumes(candidates[i].indexed, candidates[j].indexed) || j < i;
        }
        if (!removed) {
            result.rules.push_back(candidates[i].rule);
        }
    }
    return result;
}

} // namespace attrcalc
