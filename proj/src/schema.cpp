#include "attrcalc/schema.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace attrcalc {

namespace {

bool is_letter(unsigned char c) {
    return std::isalpha(c) != 0;
}

bool is_name_char(unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
}

} // namespace

bool is_identifier(std::string_view text) {
    if (text.empty() || !is_letter(static_cast<unsigned char>(text.front()))) {
        return false;
    }
    return std::all_of(text.begin(), text.end(),
                       [](char c) { return is_name_char(static_cast<unsigned char>(c)); });
}

bool is_legal_value(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    for (unsigned char c : text) {
        if (c < 0x20 || c == 0x7f || c == ',') {
            return false;
        }
    }
    return true;
}

AttributeDef::AttributeDef(std::string name, std::vector<std::string> range)
    : name_(std::move(name)), range_(std::move(range)) {
    if (!is_identifier(name_)) {
        throw SchemaError("invalid attribute name \"" + name_ +
                          "\": must be a letter followed by letters, digits or underscores");
    }
    if (range_.empty()) {
        throw SchemaError("attribute \"" + name_ + "\" has an empty range");
    }
    std::unordered_set<std::string_view> seen;
    for (const std::string& value : range_) {
        if (!is_legal_value(value)) {
            throw SchemaError("attribute \"" + name_ + "\" has an illegal range value \"" +
                              value + "\"");
        }
        if (!seen.insert(value).second) {
            throw SchemaError("attribute \"" + name_ + "\" repeats the range value \"" +
                              value + "\"");
        }
    }
}

std::optional<std::size_t> AttributeDef::value_index(std::string_view value) const {
    for (std::size_t i = 0; i < range_.size(); ++i) {
        if (range_[i] == value) {
            return i;
        }
    }
    return std::nullopt;
}

UniverseSchema::UniverseSchema(std::string name,
                               std::string namespace_uri,
                               std::vector<AttributeDef> attributes)
    : name_(std::move(name)),
      namespace_uri_(std::move(namespace_uri)),
      attributes_(std::move(attributes)) {
    if (!is_identifier(name_)) {
        throw SchemaError("invalid universe name \"" + name_ + "\"");
    }
    std::unordered_set<std::string_view> seen;
    for (const AttributeDef& attribute : attributes_) {
        if (attribute.name() == "name") {
            throw SchemaError("\"name\" is reserved for concept naming and cannot be "
                              "used as an attribute name");
        }
        if (!seen.insert(attribute.name()).second) {
            throw SchemaError("duplicate attribute name \"" + attribute.name() + "\"");
        }
    }
}

std::optional<std::size_t> UniverseSchema::attribute_index(std::string_view name) const {
    for (std::size_t i = 0; i < attributes_.size(); ++i) {
        if (attributes_[i].name() == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t UniverseSchema::require_attribute(std::string_view name) const {
    if (auto index = attribute_index(name)) {
        return *index;
    }
    throw SchemaMismatchError("unknown attribute \"" + std::string(name) + "\"");
}

std::uint64_t universe_size(const UniverseSchema& schema) {
    std::uint64_t size = 1;
    for (const AttributeDef& attribute : schema.attributes()) {
        if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(attribute.range_size()),
                                   &size)) {
            throw Error("universe size overflows 64 bits");
        }
    }
    return size;
}

std::vector<std::pair<std::string, std::string>>
attribute_value_pairs(const UniverseSchema& schema) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const AttributeDef& attribute : schema.attributes()) {
        for (const std::string& value : attribute.range()) {
            pairs.emplace_back(attribute.name(), value);
        }
    }
    return pairs;
}

void check_object(const ObjectInstance& object, const UniverseSchema& schema) {
    if (object.values.size() != schema.attribute_count()) {
        throw SchemaMismatchError("object has " + std::to_string(object.values.size()) +
                                  " values but the universe declares " +
                                  std::to_string(schema.attribute_count()) + " attributes");
    }
    for (std::size_t i = 0; i < object.values.size(); ++i) {
        if (!schema.attribute_at(i).value_index(object.values[i])) {
            throw SchemaMismatchError("value \"" + object.values[i] +
                                      "\" is not in the range of attribute \"" +
                                      schema.attribute_at(i).name() + "\"");
        }
    }
}

} // namespace attrcalc
