// Command-line front end: every library capability behind one binary with
// file-driven subcommands. Exit codes are uniform across commands:
//   0  success / positive / valid / equivalent
//   1  semantic negative (invalid document, negative match, differing sets)
//   2  usage or input error

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "attrcalc/attrcalc.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

enum class OutputFormat { text, csv };

struct CliConfig {
    std::string schema_path;
    std::string input_path;
    std::string input_path_b;
    std::string output_path;              // empty = standard output
    std::string concept_selector = "0";
    std::string concept_selector_b = "0";
    std::string object_values;
    std::string expression;
    OutputFormat format = OutputFormat::text;
    std::size_t expansion_limit = 10000;
    std::size_t ie_rule_limit = 20;
};

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw attrcalc::Error("cannot read file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

// Either a file or standard output; remembers whether styling is sensible.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw attrcalc::Error("cannot write file \"" + path + "\"");
            }
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

    bool is_terminal() const {
        return !file_.is_open() && isatty(STDOUT_FILENO) != 0;
    }

private:
    std::ofstream file_;
};

bool styling_enabled(const Output& output) {
    return output.is_terminal() && std::getenv("ATTRIBCALC_NO_COLOR") == nullptr;
}

std::string styled_severity(attrcalc::Severity severity, bool styled) {
    const std::string name(attrcalc::severity_name(severity));
    if (!styled) {
        return name;
    }
    const char* color = severity == attrcalc::Severity::error ? "\033[31m" : "\033[33m";
    return color + name + "\033[0m";
}

void write_report(const attrcalc::ValidationReport& report, Output& output,
                  OutputFormat format) {
    const bool styled = styling_enabled(output);
    for (const attrcalc::ValidationIssue& issue : report.issues) {
        if (format == OutputFormat::csv) {
            output.stream() << attrcalc::severity_name(issue.severity) << ',' << issue.path
                            << ',' << issue.code << ',' << issue.message << '\n';
        } else {
            output.stream() << styled_severity(issue.severity, styled) << ' ' << issue.path
                            << ' ' << issue.code << ": " << issue.message << '\n';
        }
    }
}

attrcalc::UniverseSchema load_schema(const CliConfig& config) {
    return attrcalc::load_universe(read_file(config.schema_path));
}

// Parses and fully validates an instance document; validation errors are
// input errors for every command except "validate".
attrcalc::ConceptDocument load_valid_document(const std::string& path,
                                              const attrcalc::UniverseSchema& schema) {
    attrcalc::ConceptDocument document = attrcalc::parse_document(read_file(path));
    const attrcalc::ValidationReport report = attrcalc::validate_document(document, schema);
    if (!report.valid()) {
        std::cerr << attrcalc::render_report(report);
        throw attrcalc::Error("document \"" + path + "\" does not validate against the universe");
    }
    return document;
}

const attrcalc::Concept& select_concept(const attrcalc::ConceptDocument& document,
                                        const std::string& selector) {
    if (!selector.empty() &&
        std::all_of(selector.begin(), selector.end(),
                    [](unsigned char c) { return std::isdigit(c) != 0; })) {
        const std::size_t index = std::stoul(selector);
        if (index >= document.concepts.size()) {
            throw attrcalc::Error("no concept at index " + selector + "; the document has " +
                                  std::to_string(document.concepts.size()) + " concepts");
        }
        return document.concepts[index];
    }
    const attrcalc::Concept* found = nullptr;
    for (const attrcalc::Concept& item : document.concepts) {
        if (item.name == selector) {
            if (found != nullptr) {
                throw attrcalc::Error("concept name \"" + selector + "\" is ambiguous");
            }
            found = &item;
        }
    }
    if (found == nullptr) {
        throw attrcalc::Error("no concept named \"" + selector + "\"");
    }
    return *found;
}

std::string csv_join(const std::vector<std::string>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += values[i];
    }
    return line;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> values;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = text.find(',', begin);
        values.push_back(text.substr(begin, comma - begin));
        if (comma == std::string::npos) {
            return values;
        }
        begin = comma + 1;
    }
}

int cmd_schema(const CliConfig& config) {
    const attrcalc::UniverseSchema schema = load_schema(config);
    Output output(config.output_path);
    output.stream() << attrcalc::generate_schema(schema);
    return kExitSuccess;
}

int cmd_validate(const CliConfig& config) {
    const attrcalc::UniverseSchema schema = load_schema(config);
    const attrcalc::ConceptDocument document =
        attrcalc::parse_document(read_file(config.input_path));
    const attrcalc::ValidationReport report = attrcalc::validate_document(document, schema);
    Output output(config.output_path);
    write_report(report, output, config.format);
    return report.valid() ? kExitSuccess : kExitNegative;
}

int cmd_count(const CliConfig& config) {
    const attrcalc::UniverseSchema schema = load_schema(config);
    const attrcalc::ConceptDocument document = load_valid_document(config.input_path, schema);
    const attrcalc::Concept& item = select_concept(document, config.concept_selector);
    const attrcalc::CountOptions options{config.ie_rule_limit};
    Output output(config.output_path);
    output.stream() << attrcalc::count_extension(item, schema, options) << '/'
                    << attrcalc::universe_size(schema) << '\n';
    return kExitSuccess;
}

int cmd_match(const CliConfig& config) {
    const attrcalc::UniverseSchema schema = load_schema(config);
    const attrcalc::ConceptDocument document = load_valid_document(config.input_path, schema);
    const attrcalc::Concept& item = select_concept(document, config.concept_selector);

    attrcalc::ObjectInstance object;
    if (!(config.object_values.empty() && schema.attribute_count() == 0)) {
        object.values = split_csv(config.object_values);
    }
    attrcalc::check_object(object, schema);

    const bool positive = attrcalc::concept_matches(item, object, schema);
    Output output(config.output_path);
    output.stream() << (positive ? "positive" : "negative") << '\n';
    return positive ? kExitSuccess : kExitNegative;
}

int cmd_enumerate(const CliConfig& config) {
    const attrcalc::UniverseSchema schema = load_schema(config);
    const attrcalc::ConceptDocument document = load_valid_document(config.input_path, schema);
    const attrcalc::Concept& item = select_concept(document, config.concept_selector);
    Output output(config.output_path);
    attrcalc::ExtensionStream stream = attrcalc::enumerate_extension(item, schema);
    while (auto object = stream.next()) {
        output.stream() << csv_join(object->values) << '\n';
    }
    return kExitSuccess;
}

int cmd_equiv(const CliConfig& config) {
    const attrcalc::UniverseSchema schema = load_schema(config);
    const attrcalc::ConceptDocument document_a = load_valid_document(config.input_path, schema);
    const std::string& path_b =
        config.input_path_b.empty() ? config.input_path : config.input_path_b;
    const attrcalc::ConceptDocument document_b = load_valid_document(path_b, schema);

    const attrcalc::Concept& a = select_concept(document_a, config.concept_selector);
    const attrcalc::Concept& b = select_concept(document_b, config.concept_selector_b);

    Output output(config.output_path);
    if (auto witness = attrcalc::first_difference(a, b, schema)) {
        output.stream() << "differ\n" << csv_join(witness->values) << '\n';
        return kExitNegative;
    }
    output.stream() << "equivalent\n";
    return kExitSuccess;
}

int cmd_dataset(const CliConfig& config) {
    const attrcalc::UniverseSchema schema = load_schema(config);
    const attrcalc::ConceptDocument document = load_valid_document(config.input_path, schema);
    const attrcalc::Concept& item = select_concept(document, config.concept_selector);

    Output output(config.output_path);
    std::vector<std::string> header;
    header.reserve(schema.attribute_count() + 1);
    for (const attrcalc::AttributeDef& attribute : schema.attributes()) {
        header.push_back(attribute.name());
    }
    header.push_back("label");
    output.stream() << csv_join(header) << '\n';

    attrcalc::LabeledExampleStream stream = attrcalc::label_examples(item, schema);
    while (auto example = stream.next()) {
        std::vector<std::string> row = example->object.values;
        row.push_back(example->positive ? "positive" : "negative");
        output.stream() << csv_join(row) << '\n';
    }
    return kExitSuccess;
}

int cmd_lower(const CliConfig& config) {
    const attrcalc::UniverseSchema schema = load_schema(config);
    const attrcalc::Vl1Expression expression =
        attrcalc::parse_vl1(config.expression, schema);
    attrcalc::ConceptDocument document;
    document.universe_name = schema.name();
    document.namespace_uri = schema.namespace_uri();
    document.concepts.push_back(attrcalc::lower_to_concept(expression, schema));

    attrcalc::SerializeOptions options;
    options.expansion_limit = config.expansion_limit;
    Output output(config.output_path);
    output.stream() << attrcalc::serialize_document(document, schema, options);
    return kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"attribute-value concept calculus: XML concept documents, "
                 "schema generation, extension counting and dataset export"};
    app.require_subcommand(1);
    CliConfig config;

    const auto add_schema = [&config](CLI::App* cmd) {
        cmd->add_option("--schema", config.schema_path,
                        "universe definition file or XML Schema document")
            ->required();
    };
    const auto add_in = [&config](CLI::App* cmd) {
        cmd->add_option("--in", config.input_path, "concept document to read")->required();
    };
    const auto add_out = [&config](CLI::App* cmd) {
        cmd->add_option("--out", config.output_path, "output file (default: stdout)");
    };
    const auto add_concept = [&config](CLI::App* cmd) {
        cmd->add_option("--concept", config.concept_selector,
                        "concept name or zero-based index (default: 0)");
    };

    CLI::App* schema_cmd =
        app.add_subcommand("schema", "generate the XML Schema for a universe");
    add_schema(schema_cmd);
    add_out(schema_cmd);

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check a concept document against a universe");
    add_schema(validate_cmd);
    add_in(validate_cmd);
    add_out(validate_cmd);
    validate_cmd
        ->add_option("--format", config.format, "report format: text or csv")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"text", OutputFormat::text},
                                                {"csv", OutputFormat::csv}}));

    CLI::App* count_cmd =
        app.add_subcommand("count", "print extension size as \"count/total\"");
    add_schema(count_cmd);
    add_in(count_cmd);
    add_out(count_cmd);
    add_concept(count_cmd);
    count_cmd->add_option("--ie-rule-limit", config.ie_rule_limit,
                          "rule count above which counting falls back to enumeration");

    CLI::App* match_cmd =
        app.add_subcommand("match", "classify one object as positive or negative");
    add_schema(match_cmd);
    add_in(match_cmd);
    add_out(match_cmd);
    add_concept(match_cmd);
    match_cmd
        ->add_option("object", config.object_values,
                     "comma-separated attribute values in declaration order")
        ->required();

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "list the concept's extension, one object per line");
    add_schema(enumerate_cmd);
    add_in(enumerate_cmd);
    add_out(enumerate_cmd);
    add_concept(enumerate_cmd);

    CLI::App* equiv_cmd =
        app.add_subcommand("equiv", "compare the extensions of two concepts");
    add_schema(equiv_cmd);
    add_in(equiv_cmd);
    add_out(equiv_cmd);
    add_concept(equiv_cmd);
    equiv_cmd->add_option("--in2", config.input_path_b,
                          "second concept document (default: same as --in)");
    equiv_cmd->add_option("--concept2", config.concept_selector_b,
                          "second concept name or index (default: 0)");

    CLI::App* dataset_cmd =
        app.add_subcommand("dataset", "export the labeled universe as CSV");
    add_schema(dataset_cmd);
    add_in(dataset_cmd);
    add_out(dataset_cmd);
    add_concept(dataset_cmd);

    CLI::App* lower_cmd = app.add_subcommand(
        "lower", "lower a bracket-notation expression into a concept document");
    add_schema(lower_cmd);
    add_out(lower_cmd);
    lower_cmd->add_option("expression", config.expression, "expression such as \"[a=x][b<>y]\"")
        ->required();
    lower_cmd->add_option("--expansion-limit", config.expansion_limit,
                          "maximum rule elements produced by value-set expansion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return kExitUsage;
    }

    try {
        if (schema_cmd->parsed()) {
            return cmd_schema(config);
        }
        if (validate_cmd->parsed()) {
            return cmd_validate(config);
        }
        if (count_cmd->parsed()) {
            return cmd_count(config);
        }
        if (match_cmd->parsed()) {
            return cmd_match(config);
        }
        if (enumerate_cmd->parsed()) {
            return cmd_enumerate(config);
        }
        if (equiv_cmd->parsed()) {
            return cmd_equiv(config);
        }
        if (dataset_cmd->parsed()) {
            return cmd_dataset(config);
        }
        if (lower_cmd->parsed()) {
            return cmd_lower(config);
        }
    } catch (const attrcalc::Error& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
