#include "attrcalc/extension.hpp"

#include <bit>

namespace attrcalc {

namespace detail {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask full_mask(std::size_t bits) {
    Mask mask((bits + 63) / 64, ~std::uint64_t{0});
    if (bits % 64 != 0) {
        mask.back() = (std::uint64_t{1} << (bits % 64)) - 1;
    }
    return mask;
}

bool test_bit(const Mask& mask, std::size_t bit) {
    return (mask[bit / 64] >> (bit % 64)) & 1;
}

std::uint64_t popcount(const Mask& mask) {
    std::uint64_t count = 0;
    for (std::uint64_t word : mask) {
        count += static_cast<std::uint64_t>(std::popcount(word));
    }
    return count;
}

CompiledRule intersect(const CompiledRule& a, const CompiledRule& b) {
    CompiledRule out = a;
    for (std::size_t i = 0; i < out.allowed.size(); ++i) {
        for (std::size_t w = 0; w < out.allowed[i].size(); ++w) {
            out.allowed[i][w] &= b.allowed[i][w];
        }
    }
    return out;
}

// Product of the per-attribute allowed counts. Safe in 64 bits because the
// box is contained in a universe whose size already fit.
std::uint64_t cardinality(const CompiledRule& rule) {
    std::uint64_t product = 1;
    for (const Mask& mask : rule.allowed) {
        product *= popcount(mask);
        if (product == 0) {
            return 0;
        }
    }
    return product;
}

std::vector<std::vector<std::string>> copy_ranges(const UniverseSchema& schema) {
    std::vector<std::vector<std::string>> ranges;
    ranges.reserve(schema.attribute_count());
    for (const AttributeDef& attribute : schema.attributes()) {
        ranges.push_back(attribute.range());
    }
    return ranges;
}

void advance_tuple(std::vector<std::size_t>& cursor,
                   const std::vector<std::size_t>& sizes,
                   bool& exhausted) {
    std::size_t i = cursor.size();
    while (i > 0) {
        --i;
        if (++cursor[i] < sizes[i]) {
            return;
        }
        cursor[i] = 0;
    }
    exhausted = true;
}

} // namespace

bool CompiledRule::admits(const std::vector<std::size_t>& tuple) const {
    for (std::size_t i = 0; i < allowed.size(); ++i) {
        if (!test_bit(allowed[i], tuple[i])) {
            return false;
        }
    }
    return true;
}

bool CompiledConcept::admits(const std::vector<std::size_t>& tuple) const {
    for (const CompiledRule& rule : rules) {
        if (rule.admits(tuple)) {
            return true;
        }
    }
    return false;
}

CompiledConcept compile(const Concept& c, const UniverseSchema& schema) {
    CompiledConcept compiled;
    compiled.range_sizes.reserve(schema.attribute_count());
    for (const AttributeDef& attribute : schema.attributes()) {
        compiled.range_sizes.push_back(attribute.range_size());
    }

    for (const Rule& rule : c.rules) {
        check_unique_constraints(rule);
        CompiledRule box;
        box.allowed.reserve(compiled.range_sizes.size());
        for (std::size_t size : compiled.range_sizes) {
            box.allowed.push_back(full_mask(size));
        }
        for (const Selector& selector : rule.constraints) {
            const std::size_t index = schema.require_attribute(selector.attribute);
            Mask mask(box.allowed[index].size(), 0);
            for (std::size_t bit :
                 allowed_value_indices(selector, schema.attribute_at(index))) {
                mask[bit / 64] |= std::uint64_t{1} << (bit % 64);
            }
            box.allowed[index] = std::move(mask);
        }
        compiled.rules.push_back(std::move(box));
    }
    return compiled;
}

} // namespace detail

ExtensionStream::ExtensionStream(const Concept& c, const UniverseSchema& schema)
    : compiled_(detail::compile(c, schema)),
      ranges_(detail::copy_ranges(schema)),
      cursor_(schema.attribute_count(), 0) {}

void ExtensionStream::advance_cursor() {
    detail::advance_tuple(cursor_, compiled_.range_sizes, exhausted_);
}

ObjectInstance ExtensionStream::materialize(const std::vector<std::size_t>& tuple) const {
    ObjectInstance object;
    object.values.reserve(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        object.values.push_back(ranges_[i][tuple[i]]);
    }
    return object;
}

std::optional<std::vector<std::size_t>> ExtensionStream::next_indices() {
    while (!exhausted_) {
        if (compiled_.admits(cursor_)) {
            std::vector<std::size_t> tuple = cursor_;
            advance_cursor();
            return tuple;
        }
        advance_cursor();
    }
    return std::nullopt;
}

std::optional<ObjectInstance> ExtensionStream::next() {
    if (auto tuple = next_indices()) {
        return materialize(*tuple);
    }
    return std::nullopt;
}

LabeledExampleStream::LabeledExampleStream(const Concept& c,
                                           const UniverseSchema& schema)
    : compiled_(detail::compile(c, schema)),
      ranges_(detail::copy_ranges(schema)),
      cursor_(schema.attribute_count(), 0) {}

std::optional<LabeledExample> LabeledExampleStream::next() {
    if (exhausted_) {
        return std::nullopt;
    }
    LabeledExample example;
    example.positive = compiled_.admits(cursor_);
    example.object.values.reserve(cursor_.size());
    for (std::size_t i = 0; i < cursor_.size(); ++i) {
        example.object.values.push_back(ranges_[i][cursor_[i]]);
    }
    detail::advance_tuple(cursor_, compiled_.range_sizes, exhausted_);
    return example;
}

ExtensionStream enumerate_extension(const Concept& c, const UniverseSchema& schema) {
    return ExtensionStream(c, schema);
}

LabeledExampleStream label_examples(const Concept& c, const UniverseSchema& schema) {
    return LabeledExampleStream(c, schema);
}

namespace {

// Alternating inclusion-exclusion sum over all rule subsets containing the
// rules picked so far. An empty intersection stays empty in every superset,
// so those subtrees are skipped outright.
void ie_visit(const std::vector<detail::CompiledRule>& rules,
              std::size_t begin,
              const detail::CompiledRule& current,
              bool add,
              __int128& total) {
    for (std::size_t i = begin; i < rules.size(); ++i) {
        detail::CompiledRule intersection = detail::intersect(current, rules[i]);
        const std::uint64_t card = detail::cardinality(intersection);
        if (card == 0) {
            continue;
        }
        total += add ? static_cast<__int128>(card) : -static_cast<__int128>(card);
        ie_visit(rules, i + 1, intersection, !add, total);
    }
}

} // namespace

std::uint64_t count_extension(const Concept& c,
                              const UniverseSchema& schema,
                              const CountOptions& options) {
    universe_size(schema); // reject universes beyond 64 bits up front

    if (c.rules.size() > options.ie_rule_limit) {
        ExtensionStream stream(c, schema);
        std::uint64_t count = 0;
        while (stream.next_indices()) {
            ++count;
        }
        return count;
    }

    const detail::CompiledConcept compiled = detail::compile(c, schema);
    detail::CompiledRule universe;
    universe.allowed.reserve(compiled.range_sizes.size());
    for (std::size_t size : compiled.range_sizes) {
        universe.allowed.push_back(detail::full_mask(size));
    }
    __int128 total = 0;
    ie_visit(compiled.rules, 0, universe, true, total);
    return static_cast<std::uint64_t>(total);
}

std::optional<ObjectInstance> first_difference(const Concept& a,
                                               const Concept& b,
                                               const UniverseSchema& schema) {
    ExtensionStream stream_a(a, schema);
    ExtensionStream stream_b(b, schema);
    auto head_a = stream_a.next_indices();
    auto head_b = stream_b.next_indices();
    while (head_a && head_b) {
        if (*head_a != *head_b) {
            break;
        }
        head_a = stream_a.next_indices();
        head_b = stream_b.next_indices();
    }
    std::optional<std::vector<std::size_t>> witness;
    if (head_a && head_b) {
        witness = std::min(*head_a, *head_b);
    } else if (head_a) {
        witness = *head_a;
    } else if (head_b) {
        witness = *head_b;
    } else {
        return std::nullopt;
    }
    ObjectInstance object;
    object.values.reserve(witness->size());
    for (std::size_t i = 0; i < witness->size(); ++i) {
        object.values.push_back(schema.attribute_at(i).range()[(*witness)[i]]);
    }
    return object;
}

bool equivalent(const Concept& a, const Concept& b, const UniverseSchema& schema) {
    return !first_difference(a, b, schema).has_value();
}

} // namespace attrcalc
