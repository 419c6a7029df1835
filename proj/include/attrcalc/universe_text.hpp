#pragma once

#include <string_view>

#include "attrcalc/schema.hpp"

namespace attrcalc {

// Reads the plain-text universe definition format:
//
//   universe: emerald
//   namespace: http://example.org/emerald.xsd
//   headShape: round, square, octagon
//
// One attribute per line as "name: v1, v2, ...", declaration order taken
// from line order. The "universe" header is required, "namespace" is
// optional. Blank lines and lines starting with "#" are skipped. The keys
// "universe" and "namespace" are reserved and cannot name attributes.
// Throws ParseError (line-addressed) or SchemaError.
UniverseSchema parse_universe_definition(std::string_view text);

// Accepts either a definition file or a generated XML Schema document,
// telling them apart by the leading "<".
UniverseSchema load_universe(std::string_view text);

} // namespace attrcalc
