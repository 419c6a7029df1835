#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "attrcalc/calculus.hpp"
#include "attrcalc/schema.hpp"

namespace attrcalc {

// Relation of a bracketed selector. Order comparisons use the position of
// values within the attribute's declared range.
enum class Vl1Relation { eq, ne, lt, le, gt, ge };

// Canonical token of a relation: =, <>, <, <=, >, >=.
std::string_view relation_token(Vl1Relation relation);

struct Vl1Selector {
    std::string attribute;
    Vl1Relation relation = Vl1Relation::eq;
    std::string value;

    bool operator==(const Vl1Selector& other) const = default;
};

// A disjunction of conjunctions of bracketed selectors. Always has at
// least one disjunct with at least one selector.
struct Vl1Expression {
    std::vector<std::vector<Vl1Selector>> disjuncts;

    bool operator==(const Vl1Expression& other) const = default;
};

// Parses the bracket grammar
//
//   expression  := conjunction { ("v" | "|") conjunction }
//   conjunction := selector { ["&"] selector }
//   selector    := "[" attr rel value "]"
//   rel         := "=" | "<>" | "!=" | "<" | "<=" | ">" | ">="
//
// Attribute names and values are validated against the schema. Values
// containing whitespace, "]" or other non-token characters must be
// double-quoted; inside quotes, backslash escapes \" and \\.
// Throws ParseError with a 1-based position, or SchemaMismatchError for
// undeclared attributes and values.
Vl1Expression parse_vl1(std::string_view text, const UniverseSchema& schema);

// Canonical text of an expression: selectors juxtaposed, disjuncts joined
// by " v ". parse_vl1(to_string(e)) == e, and printing is a fixpoint.
std::string to_string(const Vl1Expression& expression);

// The allowed-value set a relation stands for, e.g. "<" collects every
// range value that precedes the stated one. Result values keep range order.
Selector expand_selector(const Vl1Selector& selector, const UniverseSchema& schema);

// One rule per conjunction; several selectors on one attribute intersect
// their allowed sets (possibly down to an empty, contradictory set).
Concept lower_to_concept(const Vl1Expression& expression, const UniverseSchema& schema);

} // namespace attrcalc
