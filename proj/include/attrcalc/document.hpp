#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "attrcalc/calculus.hpp"
#include "attrcalc/schema.hpp"

namespace attrcalc {

// The XML-level artifact: a root universe element holding zero or more
// concepts. The namespace is empty when the document declares none.
struct ConceptDocument {
    std::string universe_name;
    std::string namespace_uri;
    std::vector<Concept> concepts;

    bool operator==(const ConceptDocument& other) const = default;
};

// Reads an instance document of shape root -> concept* -> rule*. Rule
// attributes become elementary selectors in document order; a "name"
// attribute on a concept becomes the concept's name. No schema checks
// happen here; see validate_document. Throws ParseError on malformed XML,
// unexpected elements or attributes, and text content.
ConceptDocument parse_document(std::string_view text);

struct SerializeOptions {
    // Rewrite value-set selectors as the cross product of their values,
    // one rule element per combination. With expansion off, any
    // non-elementary rule is an error.
    bool expand_value_sets = true;
    // Upper bound on rule elements produced by such expansion.
    std::size_t expansion_limit = 10000;
};

// Canonical text of a document: XML declaration, two-space indentation,
// one element per line, rule attributes in schema declaration order,
// self-closing empty elements, trailing newline. The root carries the
// schema's namespace. The document must validate cleanly against the
// schema; otherwise SerializeError is thrown.
std::string serialize_document(const ConceptDocument& document,
                               const UniverseSchema& schema,
                               const SerializeOptions& options = {});

} // namespace attrcalc
