#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "attrcalc/errors.hpp"

namespace attrcalc {

// One parsed XML element. Attribute order is document order; text is the
// concatenated, entity-decoded character data directly inside the element.
struct XmlElement {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<XmlElement> children;
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;

    const std::string* attribute(std::string_view attribute_name) const;
    bool has_nonspace_text() const;
};

// Parses the XML subset used by this library: an optional XML declaration,
// comments, elements with quoted attributes, and the five predefined
// entities (&amp; &lt; &gt; &quot; &apos;). CDATA sections, processing
// instructions, DOCTYPE declarations and any other entity or character
// reference are rejected. Throws ParseError.
XmlElement parse_xml(std::string_view text);

// Replaces & < > " ' with their predefined entities.
std::string escape_xml(std::string_view text);

} // namespace attrcalc
