#pragma once

#include <string>
#include <string_view>

#include "attrcalc/schema.hpp"

namespace attrcalc {

// Emits the XML Schema describing a universe's instance documents: a root
// element named after the universe holding unbounded "concept" elements,
// each holding unbounded, empty "rule" elements with one optional XML
// attribute per universe attribute. Every range becomes a named simpleType
// enumerating its values; a range of exactly true,false (in that order)
// restricts xsd:boolean with pattern facets instead. The concept type also
// declares an optional "name" attribute.
std::string generate_schema(const UniverseSchema& schema);

// Recovers a universe from a schema document of the shape generate_schema
// emits. Attribute order follows the rule element's attribute declarations;
// range order follows the facets. Occurrence attributes are ignored, so
// both the nested (unbounded outer sequence) and flat forms are accepted.
// Throws ParseError on template-shape violations.
UniverseSchema parse_schema(std::string_view text);

} // namespace attrcalc
