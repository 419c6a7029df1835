#include "attrcalc/validation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace attrcalc {

std::string_view severity_name(Severity severity) {
    return severity == Severity::error ? "ERROR" : "WARNING";
}

bool ValidationReport::valid() const {
    return std::none_of(issues.begin(), issues.end(), [](const ValidationIssue& issue) {
        return issue.severity == Severity::error;
    });
}

namespace {

// Order-insensitive view of a rule, usable even when values or attributes
// are undeclared: attribute -> sorted set of allowed values.
std::map<std::string, std::set<std::string>> rule_fingerprint(const Rule& rule) {
    std::map<std::string, std::set<std::string>> fingerprint;
    for (const Selector& selector : rule.constraints) {
        auto& values = fingerprint[selector.attribute];
        values.insert(selector.allowed.begin(), selector.allowed.end());
    }
    return fingerprint;
}

} // namespace

ValidationReport validate_document(const ConceptDocument& document,
                                   const UniverseSchema& schema) {
    ValidationReport report;
    const auto add = [&report](Severity severity, std::string path, std::string code,
                               std::string message) {
        report.issues.push_back(ValidationIssue{severity, std::move(path), std::move(code),
                                                std::move(message)});
    };

    if (document.universe_name != schema.name()) {
        add(Severity::error, "/", "root-name-mismatch",
            "document root is \"" + document.universe_name + "\" but the universe is named \"" +
                schema.name() + "\"");
    }
    if (!document.namespace_uri.empty() && document.namespace_uri != schema.namespace_uri()) {
        add(Severity::error, "/", "namespace-mismatch",
            "document namespace \"" + document.namespace_uri +
                "\" does not match the universe namespace \"" + schema.namespace_uri() + "\"");
    }

    for (std::size_t c = 0; c < document.concepts.size(); ++c) {
        const Concept& item = document.concepts[c];
        const std::string concept_path =
            "/" + document.universe_name + "/concept[" + std::to_string(c) + "]";

        if (item.rules.empty()) {
            add(Severity::warning, concept_path, "empty-concept",
                "concept has no rules; its extension is empty");
        }

        std::vector<std::map<std::string, std::set<std::string>>> fingerprints;
        fingerprints.reserve(item.rules.size());

        for (std::size_t r = 0; r < item.rules.size(); ++r) {
            const Rule& rule = item.rules[r];
            const std::string rule_path = concept_path + "/rule[" + std::to_string(r) + "]";

            std::set<std::string_view> seen;
            for (const Selector& selector : rule.constraints) {
                const std::string selector_path = rule_path + "/@" + selector.attribute;
                if (!seen.insert(selector.attribute).second) {
                    add(Severity::error, selector_path, "duplicate-attribute",
                        "attribute \"" + selector.attribute +
                            "\" is constrained more than once in one rule");
                    continue;
                }
                const auto index = schema.attribute_index(selector.attribute);
                if (!index) {
                    add(Severity::error, selector_path, "undeclared-attribute",
                        "attribute \"" + selector.attribute +
                            "\" is not declared in the universe");
                    continue;
                }
                const AttributeDef& attribute = schema.attribute_at(*index);
                for (const std::string& value : selector.allowed) {
                    if (!attribute.value_index(value)) {
                        add(Severity::error, selector_path, "value-out-of-range",
                            "value \"" + value + "\" is not in the range of attribute \"" +
                                selector.attribute + "\"");
                    }
                }
            }

            auto fingerprint = rule_fingerprint(rule);
            for (std::size_t earlier = 0; earlier < fingerprints.size(); ++earlier) {
                if (fingerprints[earlier] == fingerprint) {
                    add(Severity::warning, rule_path, "duplicate-rule",
                        "rule duplicates rule[" + std::to_string(earlier) +
                            "] of this concept");
                    break;
                }
            }
            fingerprints.push_back(std::move(fingerprint));
        }
    }
    return report;
}

std::string render_report(const ValidationReport& report) {
    std::string out;
    for (const ValidationIssue& issue : report.issues) {
        out += severity_name(issue.severity);
        out += ' ';
        out += issue.path;
        out += ' ';
        out += issue.code;
        out += ": ";
        out += issue.message;
        out += '\n';
    }
    return out;
}

} // namespace attrcalc
