#include "attrcalc/universe_text.hpp"

#include <cctype>
#include <optional>

#include "attrcalc/xsd.hpp"

namespace attrcalc {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
        text.remove_suffix(1);
    }
    return text;
}

std::vector<std::string> split_values(std::string_view text) {
    std::vector<std::string> values;
    while (true) {
        const std::size_t comma = text.find(',');
        values.emplace_back(trim(text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            return values;
        }
        text.remove_prefix(comma + 1);
    }
}

} // namespace

UniverseSchema parse_universe_definition(std::string_view text) {
    std::optional<std::string> universe_name;
    std::optional<std::string> namespace_uri;
    std::vector<AttributeDef> attributes;

    std::size_t line_number = 0;
    while (!text.empty()) {
        ++line_number;
        const std::size_t newline = text.find('\n');
        std::string_view line = trim(text.substr(0, newline));
        text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);

        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("expected \"name: value, ...\"", line_number, 1);
        }
        const std::string_view key = trim(line.substr(0, colon));
        const std::string_view rest = trim(line.substr(colon + 1));

        if (key == "universe") {
            if (universe_name) {
                throw ParseError("duplicate \"universe\" header", line_number, 1);
            }
            universe_name = std::string(rest);
        } else if (key == "namespace") {
            if (namespace_uri) {
                throw ParseError("duplicate \"namespace\" header", line_number, 1);
            }
            namespace_uri = std::string(rest);
        } else {
            try {
                attributes.emplace_back(std::string(key), split_values(rest));
            } catch (const SchemaError& error) {
                throw ParseError(error.what(), line_number, 1);
            }
        }
    }

    if (!universe_name) {
        throw ParseError("missing the \"universe: <name>\" header", line_number, 1);
    }
    return UniverseSchema(*universe_name, namespace_uri.value_or(""), std::move(attributes));
}

UniverseSchema load_universe(std::string_view text) {
    const std::string_view trimmed = trim(text);
    if (!trimmed.empty() && trimmed.front() == '<') {
        return parse_schema(text);
    }
    return parse_universe_definition(text);
}

} // namespace attrcalc
