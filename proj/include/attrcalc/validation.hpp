#pragma once

#include <string>
#include <vector>

#include "attrcalc/document.hpp"
#include "attrcalc/schema.hpp"

namespace attrcalc {

enum class Severity { error, warning };

std::string_view severity_name(Severity severity); // "ERROR" / "WARNING"

struct ValidationIssue {
    Severity severity = Severity::error;
    std::string path;    // e.g. /emerald/concept[0]/rule[1]/@holding
    std::string code;    // e.g. value-out-of-range
    std::string message;

    bool operator==(const ValidationIssue& other) const = default;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    // True iff no issue has error severity.
    bool valid() const;
};

// Checks a parsed document against a universe. Errors: root name mismatch,
// foreign namespace, undeclared rule attribute, out-of-range value, an
// attribute constrained twice in one rule. Warnings: concept without
// rules, duplicate rules within a concept. Never throws; every finding is
// a report entry.
ValidationReport validate_document(const ConceptDocument& document,
                                   const UniverseSchema& schema);

// One line per issue: "SEVERITY path code: message".
std::string render_report(const ValidationReport& report);

} // namespace attrcalc
