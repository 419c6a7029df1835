#include "attrcalc/xsd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "attrcalc/xml.hpp"

namespace attrcalc {

namespace {

constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema";

bool is_boolean_range(const std::vector<std::string>& range) {
    return range.size() == 2 && range[0] == "true" && range[1] == "false";
}

// Attribute name with the first letter uppercased; suffixed on collision.
std::string type_name_for(const std::string& attribute, std::set<std::string>& taken) {
    std::string name = attribute;
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    while (!taken.insert(name).second) {
        name += '_';
    }
    return name;
}

} // namespace

std::string generate_schema(const UniverseSchema& schema) {
    std::set<std::string> taken;
    std::vector<std::string> type_names;
    type_names.reserve(schema.attribute_count());
    for (const AttributeDef& attribute : schema.attributes()) {
        type_names.push_back(type_name_for(attribute.name(), taken));
    }

    std::string out = "<?xml version=\"1.0\"?>\n";
    out += "<xsd:schema xmlns:xsd=\"";
    out += kXsdNamespace;
    out += '"';
    if (!schema.namespace_uri().empty()) {
        out += " targetNamespace=\"" + escape_xml(schema.namespace_uri()) + "\"";
        out += " xmlns=\"" + escape_xml(schema.namespace_uri()) + "\"";
    }
    out += " elementFormDefault=\"qualified\">\n";

    out += "  <xsd:element name=\"" + schema.name() + "\">\n";
    out += "    <xsd:complexType>\n";
    out += "      <xsd:sequence minOccurs=\"0\" maxOccurs=\"unbounded\">\n";
    out += "        <xsd:element name=\"concept\" minOccurs=\"0\" maxOccurs=\"unbounded\">\n";
    out += "          <xsd:complexType>\n";
    out += "            <xsd:sequence>\n";
    out += "              <xsd:element name=\"rule\" minOccurs=\"0\" maxOccurs=\"unbounded\">\n";
    if (schema.attribute_count() == 0) {
        out += "                <xsd:complexType/>\n";
    } else {
        out += "                <xsd:complexType>\n";
        for (std::size_t i = 0; i < schema.attribute_count(); ++i) {
            out += "                  <xsd:attribute name=\"" +
                   schema.attribute_at(i).name() + "\" type=\"" + type_names[i] + "\"/>\n";
        }
        out += "                </xsd:complexType>\n";
    }
    out += "              </xsd:element>\n";
    out += "            </xsd:sequence>\n";
    out += "            <xsd:attribute name=\"name\" type=\"xsd:string\"/>\n";
    out += "          </xsd:complexType>\n";
    out += "        </xsd:element>\n";
    out += "      </xsd:sequence>\n";
    out += "    </xsd:complexType>\n";
    out += "  </xsd:element>\n";

    for (std::size_t i = 0; i < schema.attribute_count(); ++i) {
        const AttributeDef& attribute = schema.attribute_at(i);
        out += "  <xsd:simpleType name=\"" + type_names[i] + "\">\n";
        if (is_boolean_range(attribute.range())) {
            out += "    <xsd:restriction base=\"xsd:boolean\">\n";
            out += "      <xsd:pattern value=\"true\"/>\n";
            out += "      <xsd:pattern value=\"false\"/>\n";
        } else {
            out += "    <xsd:restriction base=\"xsd:string\">\n";
            for (const std::string& value : attribute.range()) {
                out += "      <xsd:enumeration value=\"" + escape_xml(value) + "\"/>\n";
            }
        }
        out += "    </xsd:restriction>\n";
        out += "  </xsd:simpleType>\n";
    }
    out += "</xsd:schema>\n";
    return out;
}

namespace {

// Resolves the prefix bound to the XML Schema namespace and qualifies
// local names with it.
class XsdReader {
public:
    explicit XsdReader(const XmlElement& root) : root_(root) {
        for (const auto& [name, value] : root.attributes) {
            if (value != kXsdNamespace) {
                continue;
            }
            if (name == "xmlns") {
                prefix_.clear();
                found_ = true;
            } else if (name.starts_with("xmlns:")) {
                prefix_ = name.substr(6) + ":";
                found_ = true;
            }
        }
        if (!found_ || root.name != qualified("schema")) {
            throw ParseError("not an XML Schema document (no schema root element bound to " +
                                 std::string(kXsdNamespace) + ")",
                             root.line, root.column);
        }
    }

    std::string qualified(std::string_view local) const {
        return prefix_ + std::string(local);
    }

    bool is(const XmlElement& element, std::string_view local) const {
        return element.name == qualified(local);
    }

    // True when a type reference such as "xsd:string" names the given
    // built-in schema type.
    bool is_builtin(std::string_view reference, std::string_view local) const {
        return reference == qualified(local);
    }

    [[noreturn]] void fail(const XmlElement& element, const std::string& message) const {
        throw ParseError(message, element.line, element.column);
    }

    const std::string& require_attribute(const XmlElement& element,
                                         std::string_view name) const {
        if (const std::string* value = element.attribute(name)) {
            return *value;
        }
        fail(element, "element \"" + element.name + "\" lacks the required \"" +
                          std::string(name) + "\" attribute");
    }

    // The only child, which must be the given construct.
    const XmlElement& only_child(const XmlElement& element, std::string_view local) const {
        if (element.children.size() != 1 || !is(element.children.front(), local)) {
            fail(element, "element \"" + element.name + "\" must contain exactly one \"" +
                              qualified(local) + "\"");
        }
        return element.children.front();
    }

private:
    const XmlElement& root_;
    std::string prefix_;
    bool found_ = false;
};

std::vector<std::string> read_simple_type_values(const XsdReader& reader,
                                                 const XmlElement& simple_type) {
    const XmlElement& restriction = reader.only_child(simple_type, "restriction");
    const std::string& base = reader.require_attribute(restriction, "base");

    if (reader.is_builtin(base, "string")) {
        std::vector<std::string> values;
        for (const XmlElement& facet : restriction.children) {
            if (!reader.is(facet, "enumeration")) {
                reader.fail(facet, "unsupported facet \"" + facet.name +
                                       "\"; expected enumeration");
            }
            values.push_back(reader.require_attribute(facet, "value"));
        }
        if (values.empty()) {
            reader.fail(restriction, "string restriction declares no enumeration facets");
        }
        return values;
    }
    if (reader.is_builtin(base, "boolean")) {
        std::vector<std::string> values;
        for (const XmlElement& facet : restriction.children) {
            if (!reader.is(facet, "pattern")) {
                reader.fail(facet, "unsupported facet \"" + facet.name +
                                       "\"; expected pattern");
            }
            const std::string& value = reader.require_attribute(facet, "value");
            if (value != "true" && value != "false") {
                reader.fail(facet, "unsupported boolean pattern \"" + value + "\"");
            }
            values.push_back(value);
        }
        if (values.empty()) {
            reader.fail(restriction, "boolean restriction declares no pattern facets");
        }
        return values;
    }
    reader.fail(restriction, "unsupported restriction base \"" + base + "\"");
}

} // namespace

UniverseSchema parse_schema(std::string_view text) {
    const XmlElement root = parse_xml(text);
    const XsdReader reader(root);

    const XmlElement* universe_element = nullptr;
    std::map<std::string, std::vector<std::string>> simple_types;
    for (const XmlElement& child : root.children) {
        if (reader.is(child, "element")) {
            if (universe_element != nullptr) {
                reader.fail(child, "more than one top-level element declaration");
            }
            universe_element = &child;
        } else if (reader.is(child, "simpleType")) {
            const std::string& name = reader.require_attribute(child, "name");
            if (!simple_types.emplace(name, read_simple_type_values(reader, child)).second) {
                reader.fail(child, "duplicate simpleType \"" + name + "\"");
            }
        } else {
            reader.fail(child, "unsupported top-level schema construct \"" + child.name + "\"");
        }
    }
    if (universe_element == nullptr) {
        reader.fail(root, "missing the top-level element declaration");
    }

    const std::string& universe_name = reader.require_attribute(*universe_element, "name");
    std::string namespace_uri;
    if (const std::string* target = root.attribute("targetNamespace")) {
        namespace_uri = *target;
    }

    // root element -> complexType -> sequence -> concept element; occurrence
    // attributes may sit on the sequence, the element, or both.
    const XmlElement& universe_type = reader.only_child(*universe_element, "complexType");
    const XmlElement& universe_sequence = reader.only_child(universe_type, "sequence");
    const XmlElement& concept_element = reader.only_child(universe_sequence, "element");
    if (reader.require_attribute(concept_element, "name") != "concept") {
        reader.fail(concept_element, "expected the declaration of element \"concept\"");
    }

    // concept -> complexType containing one sequence and, optionally, the
    // declaration of the "name" attribute.
    const XmlElement& concept_type = reader.only_child(concept_element, "complexType");
    const XmlElement* concept_sequence = nullptr;
    for (const XmlElement& child : concept_type.children) {
        if (reader.is(child, "sequence")) {
            if (concept_sequence != nullptr) {
                reader.fail(child, "concept type declares more than one sequence");
            }
            concept_sequence = &child;
        } else if (reader.is(child, "attribute")) {
            if (reader.require_attribute(child, "name") != "name" ||
                !reader.is_builtin(reader.require_attribute(child, "type"), "string")) {
                reader.fail(child, "unsupported attribute declaration on the concept type");
            }
        } else {
            reader.fail(child, "unsupported construct in the concept type");
        }
    }
    if (concept_sequence == nullptr) {
        reader.fail(concept_type, "missing the rule sequence in the concept type");
    }

    const XmlElement& rule_element = reader.only_child(*concept_sequence, "element");
    if (reader.require_attribute(rule_element, "name") != "rule") {
        reader.fail(rule_element, "missing the declaration of element \"rule\"");
    }

    const XmlElement& rule_type = reader.only_child(rule_element, "complexType");
    std::vector<AttributeDef> attributes;
    for (const XmlElement& declaration : rule_type.children) {
        if (!reader.is(declaration, "attribute")) {
            reader.fail(declaration, "unsupported construct in the rule type");
        }
        const std::string& attribute_name = reader.require_attribute(declaration, "name");
        const std::string& type_name = reader.require_attribute(declaration, "type");
        const auto type = simple_types.find(type_name);
        if (type == simple_types.end()) {
            reader.fail(declaration, "attribute \"" + attribute_name +
                                         "\" references the undeclared type \"" + type_name +
                                         "\"");
        }
        attributes.emplace_back(attribute_name, type->second);
    }

    return UniverseSchema(universe_name, namespace_uri, std::move(attributes));
}

} // namespace attrcalc
