#include "attrcalc/xml.hpp"

#include <algorithm>
#include <cctype>

namespace attrcalc {

const std::string* XmlElement::attribute(std::string_view attribute_name) const {
    for (const auto& [name_, value] : attributes) {
        if (name_ == attribute_name) {
            return &value;
        }
    }
    return nullptr;
}

bool XmlElement::has_nonspace_text() const {
    return std::any_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isspace(c) == 0;
    });
}

namespace {

bool is_name_start(unsigned char c) {
    return std::isalpha(c) != 0 || c == '_' || c == ':';
}

bool is_name_char(unsigned char c) {
    return std::isalnum(c) != 0 || c == '_' || c == ':' || c == '.' || c == '-';
}

class XmlParser {
public:
    explicit XmlParser(std::string_view text) : text_(text) {}

    XmlElement parse_document() {
        skip_bom();
        skip_declaration();
        skip_misc();
        if (at_end() || peek() != '<') {
            fail("expected the document root element");
        }
        reject_unsupported_markup();
        XmlElement root = parse_element();
        skip_misc();
        if (!at_end()) {
            fail("content after the document root element");
        }
        return root;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    bool starts_with(std::string_view prefix) const {
        return text_.substr(pos_, prefix.size()) == prefix;
    }

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

    void take(std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            take();
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column_);
    }

    void skip_bom() {
        if (starts_with("\xEF\xBB\xBF")) {
            pos_ += 3;
        }
    }

    void skip_declaration() {
        if (!starts_with("<?xml")) {
            return;
        }
        while (!at_end()) {
            if (starts_with("?>")) {
                take(2);
                return;
            }
            take();
        }
        fail("unterminated XML declaration");
    }

    void skip_whitespace() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
            take();
        }
    }

    void skip_comment() {
        take(4); // "<!--"
        while (!at_end()) {
            if (starts_with("-->")) {
                take(3);
                return;
            }
            take();
        }
        fail("unterminated comment");
    }

    // Whitespace and comments between markup, outside the root element.
    void skip_misc() {
        while (true) {
            skip_whitespace();
            if (starts_with("<!--")) {
                skip_comment();
            } else if (!at_end() && peek() != '<') {
                fail("text content outside the document root element");
            } else {
                return;
            }
        }
    }

    void reject_unsupported_markup() {
        if (starts_with("<![CDATA[")) {
            fail("CDATA sections are not supported");
        }
        if (starts_with("<!DOCTYPE")) {
            fail("DOCTYPE declarations are not supported");
        }
        if (starts_with("<?")) {
            fail("processing instructions are not supported");
        }
        if (starts_with("<!")) {
            fail("unsupported markup");
        }
    }

    std::string parse_name() {
        if (at_end() || !is_name_start(static_cast<unsigned char>(peek()))) {
            fail("expected a name");
        }
        std::string name;
        while (!at_end() && is_name_char(static_cast<unsigned char>(peek()))) {
            name.push_back(take());
        }
        return name;
    }

    void append_entity(std::string& out) {
        take(); // '&'
        std::string entity;
        while (!at_end() && peek() != ';' && entity.size() <= 4) {
            entity.push_back(take());
        }
        if (at_end() || peek() != ';') {
            fail("malformed entity reference");
        }
        take(); // ';'
        if (entity == "amp") {
            out.push_back('&');
        } else if (entity == "lt") {
            out.push_back('<');
        } else if (entity == "gt") {
            out.push_back('>');
        } else if (entity == "quot") {
            out.push_back('"');
        } else if (entity == "apos") {
            out.push_back('\'');
        } else {
            fail("unknown entity \"&" + entity + ";\"");
        }
    }

    std::string parse_attribute_value() {
        if (at_end() || (peek() != '"' && peek() != '\'')) {
            fail("expected a quoted attribute value");
        }
        const char quote = take();
        std::string value;
        while (true) {
            if (at_end()) {
                fail("unterminated attribute value");
            }
            if (peek() == quote) {
                take();
                return value;
            }
            if (peek() == '<') {
                fail("'<' is not allowed inside an attribute value");
            }
            if (peek() == '&') {
                append_entity(value);
            } else {
                value.push_back(take());
            }
        }
    }

    XmlElement parse_element() {
        const std::size_t start_line = line_;
        const std::size_t start_column = column_;
        take(); // '<'
        XmlElement element;
        element.line = start_line;
        element.column = start_column;
        element.name = parse_name();

        while (true) {
            const bool had_space = !at_end() &&
                                   std::isspace(static_cast<unsigned char>(peek())) != 0;
            skip_whitespace();
            if (at_end()) {
                fail("unterminated start tag of element \"" + element.name + "\"");
            }
            if (peek() == '>' || peek() == '/') {
                break;
            }
            if (!had_space) {
                fail("expected whitespace before attribute");
            }
            std::string attribute_name = parse_name();
            skip_whitespace();
            if (at_end() || peek() != '=') {
                fail("expected '=' after attribute name \"" + attribute_name + "\"");
            }
            take();
            skip_whitespace();
            std::string attribute_value = parse_attribute_value();
            if (element.attribute(attribute_name) != nullptr) {
                fail("duplicate attribute \"" + attribute_name + "\" on element \"" +
                     element.name + "\"");
            }
            element.attributes.emplace_back(std::move(attribute_name),
                                            std::move(attribute_value));
        }

        if (peek() == '/') {
            take();
            if (at_end() || peek() != '>') {
                fail("expected '>' after '/'");
            }
            take();
            return element;
        }
        take(); // '>'

        while (true) {
            if (at_end()) {
                fail("unexpected end of input: element \"" + element.name +
                     "\" is not closed");
            }
            if (peek() != '<') {
                if (peek() == '&') {
                    append_entity(element.text);
                } else {
                    element.text.push_back(take());
                }
                continue;
            }
            if (starts_with("</")) {
                take(2);
                std::string end_name = parse_name();
                if (end_name != element.name) {
                    fail("mismatched end tag: expected \"</" + element.name +
                         ">\" but found \"</" + end_name + ">\"");
                }
                skip_whitespace();
                if (at_end() || peek() != '>') {
                    fail("expected '>' to close end tag");
                }
                take();
                return element;
            }
            if (starts_with("<!--")) {
                skip_comment();
                continue;
            }
            reject_unsupported_markup();
            element.children.push_back(parse_element());
        }
    }
};

} // namespace

XmlElement parse_xml(std::string_view text) {
    return XmlParser(text).parse_document();
}

std::string escape_xml(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c); break;
        }
    }
    return out;
}

} // namespace attrcalc
