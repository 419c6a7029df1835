#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "attrcalc/errors.hpp"

namespace attrcalc {

// True for names usable as XML element or attribute names here: a letter
// followed by letters, digits or underscores.
bool is_identifier(std::string_view text);

// True for strings admissible as attribute values: nonempty, no control
// characters, no commas. The five XML-escapable characters are allowed.
bool is_legal_value(std::string_view text);

// One attribute together with its finite, ordered range of values. The
// declared order of the range is the total order used everywhere else
// (enumeration, relational selectors, serialization).
class AttributeDef {
public:
    AttributeDef(std::string name, std::vector<std::string> range);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& range() const noexcept { return range_; }
    std::size_t range_size() const noexcept { return range_.size(); }

    // Position of a value in the range, or nullopt if undeclared.
    std::optional<std::size_t> value_index(std::string_view value) const;

    bool operator==(const AttributeDef& other) const = default;

private:
    std::string name_;
    std::vector<std::string> range_;
};

// An ordered set of attribute declarations. The universe of objects is the
// cartesian product of all ranges; declaration order fixes tuple order.
class UniverseSchema {
public:
    UniverseSchema(std::string name,
                   std::string namespace_uri,
                   std::vector<AttributeDef> attributes);

    const std::string& name() const noexcept { return name_; }
    const std::string& namespace_uri() const noexcept { return namespace_uri_; }
    const std::vector<AttributeDef>& attributes() const noexcept { return attributes_; }

    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    std::optional<std::size_t> attribute_index(std::string_view name) const;
    const AttributeDef& attribute_at(std::size_t index) const { return attributes_.at(index); }

    // Index of the named attribute; throws SchemaMismatchError if undeclared.
    std::size_t require_attribute(std::string_view name) const;

    bool operator==(const UniverseSchema& other) const = default;

private:
    std::string name_;
    std::string namespace_uri_;
    std::vector<AttributeDef> attributes_;
};

// One object of the universe: a value for every attribute, in declaration
// order.
struct ObjectInstance {
    std::vector<std::string> values;

    bool operator==(const ObjectInstance& other) const = default;
};

// Number of objects in the universe, i.e. the product of all range sizes.
// The empty product is 1. Throws Error if the product overflows 64 bits.
std::uint64_t universe_size(const UniverseSchema& schema);

// All (attribute name, value) pairs, attributes in declaration order and
// values in range order.
std::vector<std::pair<std::string, std::string>>
attribute_value_pairs(const UniverseSchema& schema);

// Throws SchemaMismatchError unless the object has one declared value per
// attribute.
void check_object(const ObjectInstance& object, const UniverseSchema& schema);

} // namespace attrcalc
