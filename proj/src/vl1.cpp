#include "attrcalc/vl1.hpp"

#include <algorithm>
#include <cctype>

namespace attrcalc {

std::string_view relation_token(Vl1Relation relation) {
    switch (relation) {
    case Vl1Relation::eq: return "=";
    case Vl1Relation::ne: return "<>";
    case Vl1Relation::lt: return "<";
    case Vl1Relation::le: return "<=";
    case Vl1Relation::gt: return ">";
    case Vl1Relation::ge: return ">=";
    }
    return "=";
}

namespace {

bool is_bare_value_char(unsigned char c) {
    return std::isalnum(c) != 0 || c == '_' || c == '.' || c == '-';
}

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_whitespace() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            take();
        }
    }

    bool consume(char c) {
        if (!at_end() && peek() == c) {
            take();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column_);
    }

    void expect(char c, const std::string& what) {
        if (!consume(c)) {
            fail("expected " + what);
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

std::string parse_identifier(Scanner& scanner) {
    if (scanner.at_end() || std::isalpha(static_cast<unsigned char>(scanner.peek())) == 0) {
        scanner.fail("expected attribute name");
    }
    std::string name;
    while (!scanner.at_end()) {
        unsigned char c = static_cast<unsigned char>(scanner.peek());
        if (std::isalnum(c) == 0 && c != '_') {
            break;
        }
        name.push_back(scanner.take());
    }
    return name;
}

Vl1Relation parse_relation(Scanner& scanner) {
    if (scanner.consume('=')) {
        return Vl1Relation::eq;
    }
    if (scanner.consume('!')) {
        scanner.expect('=', "'=' after '!'");
        return Vl1Relation::ne;
    }
    if (scanner.consume('<')) {
        if (scanner.consume('>')) {
            return Vl1Relation::ne;
        }
        if (scanner.consume('=')) {
            return Vl1Relation::le;
        }
        return Vl1Relation::lt;
    }
    if (scanner.consume('>')) {
        if (scanner.consume('=')) {
            return Vl1Relation::ge;
        }
        return Vl1Relation::gt;
    }
    scanner.fail("expected a relation (=, <>, !=, <, <=, >, >=)");
}

std::string parse_value(Scanner& scanner) {
    if (scanner.consume('"')) {
        std::string value;
        while (true) {
            if (scanner.at_end()) {
                scanner.fail("unterminated quoted value");
            }
            char c = scanner.take();
            if (c == '"') {
                return value;
            }
            if (c == '\\') {
                if (scanner.at_end()) {
                    scanner.fail("unterminated escape in quoted value");
                }
                char escaped = scanner.take();
                if (escaped != '"' && escaped != '\\') {
                    scanner.fail("unsupported escape in quoted value");
                }
                value.push_back(escaped);
            } else {
                value.push_back(c);
            }
        }
    }
    std::string value;
    while (!scanner.at_end() && is_bare_value_char(static_cast<unsigned char>(scanner.peek()))) {
        value.push_back(scanner.take());
    }
    if (value.empty()) {
        scanner.fail("expected a value");
    }
    return value;
}

Vl1Selector parse_selector(Scanner& scanner, const UniverseSchema& schema) {
    scanner.expect('[', "'['");
    scanner.skip_whitespace();
    Vl1Selector selector;
    selector.attribute = parse_identifier(scanner);
    scanner.skip_whitespace();
    selector.relation = parse_relation(scanner);
    scanner.skip_whitespace();
    selector.value = parse_value(scanner);
    scanner.skip_whitespace();
    scanner.expect(']', "']'");

    const std::size_t index = schema.require_attribute(selector.attribute);
    if (!schema.attribute_at(index).value_index(selector.value)) {
        throw SchemaMismatchError("value \"" + selector.value +
                                  "\" is not in the range of attribute \"" +
                                  selector.attribute + "\"");
    }
    return selector;
}

std::vector<Vl1Selector> parse_conjunction(Scanner& scanner, const UniverseSchema& schema) {
    std::vector<Vl1Selector> selectors;
    selectors.push_back(parse_selector(scanner, schema));
    while (true) {
        scanner.skip_whitespace();
        if (scanner.consume('&')) {
            scanner.skip_whitespace();
            selectors.push_back(parse_selector(scanner, schema));
        } else if (!scanner.at_end() && scanner.peek() == '[') {
            selectors.push_back(parse_selector(scanner, schema));
        } else {
            return selectors;
        }
    }
}

// Positions selected from a range of the given size by "relation value-at-pivot".
std::vector<std::size_t> expand_positions(Vl1Relation relation,
                                          std::size_t pivot,
                                          std::size_t range_size) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < range_size; ++i) {
        bool keep = false;
        switch (relation) {
        case Vl1Relation::eq: keep = i == pivot; break;
        case Vl1Relation::ne: keep = i != pivot; break;
        case Vl1Relation::lt: keep = i < pivot; break;
        case Vl1Relation::le: keep = i <= pivot; break;
        case Vl1Relation::gt: keep = i > pivot; break;
        case Vl1Relation::ge: keep = i >= pivot; break;
        }
        if (keep) {
            positions.push_back(i);
        }
    }
    return positions;
}

bool needs_quoting(std::string_view value) {
    return !std::all_of(value.begin(), value.end(), [](char c) {
        return is_bare_value_char(static_cast<unsigned char>(c));
    });
}

void append_value(std::string& out, std::string_view value) {
    if (!needs_quoting(value)) {
        out.append(value);
        return;
    }
    out.push_back('"');
    for (char c : value) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    out.push_back('"');
}

} // namespace

Vl1Expression parse_vl1(std::string_view text, const UniverseSchema& schema) {
    Scanner scanner(text);
    Vl1Expression expression;
    scanner.skip_whitespace();
    expression.disjuncts.push_back(parse_conjunction(scanner, schema));
    while (true) {
        scanner.skip_whitespace();
        if (scanner.at_end()) {
            return expression;
        }
        if (!scanner.consume('v') && !scanner.consume('|')) {
            scanner.fail("expected 'v', '|' or end of expression");
        }
        scanner.skip_whitespace();
        expression.disjuncts.push_back(parse_conjunction(scanner, schema));
    }
}

std::string to_string(const Vl1Expression& expression) {
    std::string out;
    for (std::size_t d = 0; d < expression.disjuncts.size(); ++d) {
        if (d > 0) {
            out += " v ";
        }
        for (const Vl1Selector& selector : expression.disjuncts[d]) {
            out.push_back('[');
            out += selector.attribute;
            out += relation_token(selector.relation);
            append_value(out, selector.value);
            out.push_back(']');
        }
    }
    return out;
}

Selector expand_selector(const Vl1Selector& selector, const UniverseSchema& schema) {
    const std::size_t index = schema.require_attribute(selector.attribute);
    const AttributeDef& attribute = schema.attribute_at(index);
    const auto pivot = attribute.value_index(selector.value);
    if (!pivot) {
        throw SchemaMismatchError("value \"" + selector.value +
                                  "\" is not in the range of attribute \"" +
                                  selector.attribute + "\"");
    }
    Selector expanded{selector.attribute, {}};
    for (std::size_t i : expand_positions(selector.relation, *pivot, attribute.range_size())) {
        expanded.allowed.push_back(attribute.range()[i]);
    }
    return expanded;
}

Concept lower_to_concept(const Vl1Expression& expression, const UniverseSchema& schema) {
    Concept lowered;
    for (const auto& conjunction : expression.disjuncts) {
        // Per attribute: sorted positions still allowed, narrowed selector
        // by selector. Tracks first-mention order for the surface form.
        std::vector<std::size_t> order;
        std::vector<std::optional<std::vector<std::size_t>>> allowed(schema.attribute_count());

        for (const Vl1Selector& selector : conjunction) {
            const std::size_t index = schema.require_attribute(selector.attribute);
            const AttributeDef& attribute = schema.attribute_at(index);
            const auto pivot = attribute.value_index(selector.value);
            if (!pivot) {
                throw SchemaMismatchError("value \"" + selector.value +
                                          "\" is not in the range of attribute \"" +
                                          selector.attribute + "\"");
            }
            auto positions =
                expand_positions(selector.relation, *pivot, attribute.range_size());
            if (!allowed[index]) {
                order.push_back(index);
                allowed[index] = std::move(positions);
            } else {
                std::vector<std::size_t> narrowed;
                std::set_intersection(allowed[index]->begin(), allowed[index]->end(),
                                      positions.begin(), positions.end(),
                                      std::back_inserter(narrowed));
                allowed[index] = std::move(narrowed);
            }
        }

        Rule rule;
        for (std::size_t index : order) {
            const AttributeDef& attribute = schema.attribute_at(index);
            Selector selector{attribute.name(), {}};
            for (std::size_t position : *allowed[index]) {
                selector.allowed.push_back(attribute.range()[position]);
            }
            rule.constraints.push_back(std::move(selector));
        }
        lowered.rules.push_back(std::move(rule));
    }
    return lowered;
}

} // namespace attrcalc
