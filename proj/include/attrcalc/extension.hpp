#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "attrcalc/calculus.hpp"
#include "attrcalc/schema.hpp"

namespace attrcalc {

namespace detail {

// One rule compiled to per-attribute bitmasks over range positions; an
// unconstrained attribute holds the full mask.
struct CompiledRule {
    std::vector<std::vector<std::uint64_t>> allowed;

    bool admits(const std::vector<std::size_t>& tuple) const;
};

// Concept lowered to index space. Compilation validates the concept
// against the schema and throws SchemaMismatchError on any mismatch.
struct CompiledConcept {
    std::vector<CompiledRule> rules;
    std::vector<std::size_t> range_sizes;

    bool admits(const std::vector<std::size_t>& tuple) const;
};

CompiledConcept compile(const Concept& c, const UniverseSchema& schema);

} // namespace detail

// Walks the universe in lexicographic order (attribute declaration order
// major, range order per position) and yields the objects the concept
// admits. Holds its own copy of the range values, so the schema and the
// concept may go away after construction. Memory use is independent of
// the universe size.
class ExtensionStream {
public:
    ExtensionStream(const Concept& c, const UniverseSchema& schema);

    // Next matching object, or nullopt once the universe is exhausted.
    std::optional<ObjectInstance> next();

    // Index-tuple flavour of next(); positions index into the ranges.
    std::optional<std::vector<std::size_t>> next_indices();

private:
    detail::CompiledConcept compiled_;
    std::vector<std::vector<std::string>> ranges_;
    std::vector<std::size_t> cursor_;
    bool exhausted_ = false;

    void advance_cursor();
    ObjectInstance materialize(const std::vector<std::size_t>& tuple) const;
};

// Walks the whole universe in lexicographic order, flagging each object
// with its membership in the concept.
class LabeledExampleStream {
public:
    LabeledExampleStream(const Concept& c, const UniverseSchema& schema);

    std::optional<LabeledExample> next();

private:
    detail::CompiledConcept compiled_;
    std::vector<std::vector<std::string>> ranges_;
    std::vector<std::size_t> cursor_;
    bool exhausted_ = false;
};

ExtensionStream enumerate_extension(const Concept& c, const UniverseSchema& schema);
LabeledExampleStream label_examples(const Concept& c, const UniverseSchema& schema);

struct CountOptions {
    // Inclusion-exclusion visits up to 2^rules subsets; above this many
    // rules the count falls back to streaming enumeration.
    std::size_t ie_rule_limit = 20;
};

// Exact extension cardinality by inclusion-exclusion over rule subsets.
// Equals the length of enumerate_extension's stream.
std::uint64_t count_extension(const Concept& c,
                              const UniverseSchema& schema,
                              const CountOptions& options = {});

// Lexicographically smallest object on which the two extensions disagree,
// or nullopt when they are equal as sets.
std::optional<ObjectInstance> first_difference(const Concept& a,
                                               const Concept& b,
                                               const UniverseSchema& schema);

// Whether the two concepts have the same extension.
bool equivalent(const Concept& a, const Concept& b, const UniverseSchema& schema);

} // namespace attrcalc
