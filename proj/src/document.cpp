#include "attrcalc/document.hpp"

#include <algorithm>

#include "attrcalc/validation.hpp"
#include "attrcalc/xml.hpp"

namespace attrcalc {

namespace {

[[noreturn]] void fail_at(const XmlElement& element, const std::string& message) {
    throw ParseError(message, element.line, element.column);
}

Concept read_concept(const XmlElement& element) {
    Concept result;
    for (const auto& [name, value] : element.attributes) {
        if (name == "name") {
            result.name = value;
        } else {
            fail_at(element, "unexpected attribute \"" + name +
                                 "\" on a concept element; only \"name\" is allowed");
        }
    }
    if (element.has_nonspace_text()) {
        fail_at(element, "unexpected text content inside a concept element");
    }
    for (const XmlElement& child : element.children) {
        if (child.name != "rule") {
            fail_at(child, "unexpected element \"" + child.name +
                               "\" inside a concept; expected \"rule\"");
        }
        if (!child.children.empty()) {
            fail_at(child.children.front(), "rule elements must be empty");
        }
        if (child.has_nonspace_text()) {
            fail_at(child, "unexpected text content inside a rule element");
        }
        Rule rule;
        for (const auto& [attribute, value] : child.attributes) {
            rule.constraints.push_back(Selector{attribute, {value}});
        }
        result.rules.push_back(std::move(rule));
    }
    return result;
}

} // namespace

ConceptDocument parse_document(std::string_view text) {
    const XmlElement root = parse_xml(text);

    ConceptDocument document;
    if (!is_identifier(root.name)) {
        throw ParseError("root element name \"" + root.name +
                             "\" is not a plain identifier",
                         root.line, root.column);
    }
    document.universe_name = root.name;
    for (const auto& [name, value] : root.attributes) {
        if (name == "xmlns") {
            document.namespace_uri = value;
        } else {
            fail_at(root, "unexpected attribute \"" + name +
                              "\" on the root element; only a default namespace "
                              "declaration is allowed");
        }
    }
    if (root.has_nonspace_text()) {
        fail_at(root, "unexpected text content inside the root element");
    }
    for (const XmlElement& child : root.children) {
        if (child.name != "concept") {
            fail_at(child, "unexpected element \"" + child.name +
                               "\" under the root; expected \"concept\"");
        }
        document.concepts.push_back(read_concept(child));
    }
    return document;
}

namespace {

void append_rule_line(std::string& out,
                      const UniverseSchema& schema,
                      const std::vector<std::pair<std::size_t, std::string>>& values) {
    out += "    <rule";
    for (const auto& [attribute, value] : values) {
        out += ' ';
        out += schema.attribute_at(attribute).name();
        out += "=\"";
        out += escape_xml(value);
        out += '"';
    }
    out += "/>\n";
}

// Selectors of one rule in schema order, allowed values in range order.
std::vector<std::pair<std::size_t, std::vector<std::string>>>
ordered_constraints(const Rule& rule, const UniverseSchema& schema) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> ordered;
    for (const Selector& selector : rule.constraints) {
        const std::size_t index = schema.require_attribute(selector.attribute);
        const AttributeDef& attribute = schema.attribute_at(index);
        std::vector<std::string> values;
        for (std::size_t position : detail::allowed_value_indices(selector, attribute)) {
            values.push_back(attribute.range()[position]);
        }
        ordered.emplace_back(index, std::move(values));
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return ordered;
}

void serialize_rule(std::string& out,
                    const Rule& rule,
                    const UniverseSchema& schema,
                    const SerializeOptions& options,
                    std::size_t& expanded_total) {
    const auto constraints = ordered_constraints(rule, schema);

    const bool elementary = std::all_of(constraints.begin(), constraints.end(),
                                        [](const auto& c) { return c.second.size() == 1; });
    if (elementary) {
        std::vector<std::pair<std::size_t, std::string>> values;
        for (const auto& [attribute, allowed] : constraints) {
            values.emplace_back(attribute, allowed.front());
        }
        append_rule_line(out, schema, values);
        return;
    }

    if (!options.expand_value_sets) {
        throw SerializeError("rule carries a value-set selector and expansion is disabled");
    }
    const auto over_limit = [&options] {
        return SerializeError("value-set expansion exceeds the limit of " +
                              std::to_string(options.expansion_limit) + " rule elements");
    };
    std::size_t combinations = 1;
    for (const auto& [attribute, allowed] : constraints) {
        if (__builtin_mul_overflow(combinations, allowed.size(), &combinations)) {
            throw over_limit();
        }
    }
    if (__builtin_add_overflow(expanded_total, combinations, &expanded_total) ||
        expanded_total > options.expansion_limit) {
        throw over_limit();
    }

    // Odometer over the allowed sets; a contradictory (empty) set yields
    // no combinations, so the rule simply vanishes from the output.
    if (combinations == 0) {
        return;
    }
    std::vector<std::size_t> cursor(constraints.size(), 0);
    while (true) {
        std::vector<std::pair<std::size_t, std::string>> values;
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            values.emplace_back(constraints[i].first, constraints[i].second[cursor[i]]);
        }
        append_rule_line(out, schema, values);

        std::size_t i = cursor.size();
        while (i > 0) {
            --i;
            if (++cursor[i] < constraints[i].second.size()) {
                break;
            }
            cursor[i] = 0;
            if (i == 0) {
                return;
            }
        }
        if (cursor.empty()) {
            return;
        }
    }
}

} // namespace

std::string serialize_document(const ConceptDocument& document,
                               const UniverseSchema& schema,
                               const SerializeOptions& options) {
    const ValidationReport report = validate_document(document, schema);
    if (!report.valid()) {
        std::string first;
        for (const ValidationIssue& issue : report.issues) {
            if (issue.severity == Severity::error) {
                first = issue.message;
                break;
            }
        }
        throw SerializeError("document does not validate against the universe: " + first);
    }

    std::string out = "<?xml version=\"1.0\"?>\n";
    out += '<';
    out += schema.name();
    if (!schema.namespace_uri().empty()) {
        out += " xmlns=\"";
        out += escape_xml(schema.namespace_uri());
        out += '"';
    }
    if (document.concepts.empty()) {
        out += "/>\n";
        return out;
    }
    out += ">\n";

    std::size_t expanded_total = 0;
    for (const Concept& item : document.concepts) {
        out += "  <concept";
        if (item.name) {
            out += " name=\"";
            out += escape_xml(*item.name);
            out += '"';
        }
        if (item.rules.empty()) {
            out += "/>\n";
            continue;
        }
        out += ">\n";
        for (const Rule& rule : item.rules) {
            serialize_rule(out, rule, schema, options, expanded_total);
        }
        out += "  </concept>\n";
    }
    out += "</";
    out += schema.name();
    out += ">\n";
    return out;
}

} // namespace attrcalc
