#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "attrcalc/attrcalc.hpp"

namespace py = pybind11;
using namespace attrcalc;

namespace {

std::string repr_strings(const std::vector<std::string>& values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        out << '\'' << values[i] << '\'';
    }
    out << ']';
    return out.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Attribute-value concept calculus with an XML document format";

    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<SchemaMismatchError>(m, "SchemaMismatchError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SerializeError>(m, "SerializeError", PyExc_ValueError);

    py::class_<AttributeDef>(m, "AttributeDef")
        .def(py::init<std::string, std::vector<std::string>>(),
             py::arg("name"), py::arg("range"))
        .def_property_readonly("name", &AttributeDef::name)
        .def_property_readonly("range", &AttributeDef::range)
        .def("value_index",
             [](const AttributeDef& self, const std::string& value) {
                 return self.value_index(value);
             },
             py::arg("value"))
        .def(py::self == py::self)
        .def("__repr__", [](const AttributeDef& self) {
            return "AttributeDef('" + self.name() + "', " + repr_strings(self.range()) + ")";
        });

    py::class_<UniverseSchema>(m, "UniverseSchema")
        .def(py::init<std::string, std::string, std::vector<AttributeDef>>(),
             py::arg("name"), py::arg("namespace_uri"), py::arg("attributes"))
        .def_property_readonly("name", &UniverseSchema::name)
        .def_property_readonly("namespace_uri", &UniverseSchema::namespace_uri)
        .def_property_readonly("attributes", &UniverseSchema::attributes)
        .def("attribute_index",
             [](const UniverseSchema& self, const std::string& name) {
                 return self.attribute_index(name);
             },
             py::arg("name"))
        .def(py::self == py::self)
        .def("__repr__", [](const UniverseSchema& self) {
            return "UniverseSchema('" + self.name() + "', " +
                   std::to_string(self.attribute_count()) + " attributes)";
        });

    py::class_<ObjectInstance>(m, "ObjectInstance")
        .def(py::init<std::vector<std::string>>(), py::arg("values"))
        .def_readwrite("values", &ObjectInstance::values)
        .def(py::self == py::self)
        .def("__repr__", [](const ObjectInstance& self) {
            return "ObjectInstance(" + repr_strings(self.values) + ")";
        });
    py::implicitly_convertible<py::list, ObjectInstance>();
    py::implicitly_convertible<py::tuple, ObjectInstance>();

    py::class_<Selector>(m, "Selector")
        .def(py::init<std::string, std::vector<std::string>>(),
             py::arg("attribute"), py::arg("allowed"))
        .def_readwrite("attribute", &Selector::attribute)
        .def_readwrite("allowed", &Selector::allowed)
        .def(py::self == py::self)
        .def("__repr__", [](const Selector& self) {
            return "Selector('" + self.attribute + "', " + repr_strings(self.allowed) + ")";
        });

    py::class_<Rule>(m, "Rule")
        .def(py::init<>())
        .def(py::init<std::vector<Selector>>(), py::arg("constraints"))
        .def_readwrite("constraints", &Rule::constraints)
        .def(py::self == py::self)
        .def("__repr__", [](const Rule& self) {
            return "Rule(" + std::to_string(self.constraints.size()) + " constraints)";
        });

    py::class_<Concept>(m, "Concept")
        .def(py::init<>())
        .def(py::init<std::optional<std::string>, std::vector<Rule>>(),
             py::arg("name") = py::none(), py::arg("rules") = std::vector<Rule>{})
        .def_readwrite("name", &Concept::name)
        .def_readwrite("rules", &Concept::rules)
        .def(py::self == py::self)
        .def("__repr__", [](const Concept& self) {
            return "Concept(name=" + (self.name ? "'" + *self.name + "'" : "None") + ", " +
                   std::to_string(self.rules.size()) + " rules)";
        });

    py::class_<LabeledExample>(m, "LabeledExample")
        .def_readonly("object", &LabeledExample::object)
        .def_readonly("positive", &LabeledExample::positive)
        .def("__repr__", [](const LabeledExample& self) {
            return "LabeledExample(" + repr_strings(self.object.values) +
                   (self.positive ? ", positive)" : ", negative)");
        });

    py::class_<ExtensionStream>(m, "ExtensionStream")
        .def("__iter__", [](ExtensionStream& self) -> ExtensionStream& { return self; })
        .def("__next__", [](ExtensionStream& self) {
            if (auto object = self.next()) {
                return *object;
            }
            throw py::stop_iteration();
        });

    py::class_<LabeledExampleStream>(m, "LabeledExampleStream")
        .def("__iter__",
             [](LabeledExampleStream& self) -> LabeledExampleStream& { return self; })
        .def("__next__", [](LabeledExampleStream& self) {
            if (auto example = self.next()) {
                return *example;
            }
            throw py::stop_iteration();
        });

    m.def("universe_size", &universe_size, py::arg("schema"));
    m.def("attribute_value_pairs", &attribute_value_pairs, py::arg("schema"));
    m.def("selector_matches", &selector_matches,
          py::arg("selector"), py::arg("object"), py::arg("schema"));
    m.def("rule_matches", &rule_matches,
          py::arg("rule"), py::arg("object"), py::arg("schema"));
    m.def("concept_matches", &concept_matches,
          py::arg("concept"), py::arg("object"), py::arg("schema"));
    m.def("simplify", &simplify, py::arg("concept"), py::arg("schema"));
    m.def("enumerate_extension", &enumerate_extension, py::arg("concept"), py::arg("schema"));
    m.def("label_examples", &label_examples, py::arg("concept"), py::arg("schema"));
    m.def(
        "count_extension",
        [](const Concept& c, const UniverseSchema& schema, std::size_t ie_rule_limit) {
            return count_extension(c, schema, CountOptions{ie_rule_limit});
        },
        py::arg("concept"), py::arg("schema"), py::arg("ie_rule_limit") = 20);
    m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"), py::arg("schema"));
    m.def("first_difference", &first_difference,
          py::arg("a"), py::arg("b"), py::arg("schema"));

    py::enum_<Vl1Relation>(m, "Vl1Relation")
        .value("EQ", Vl1Relation::eq)
        .value("NE", Vl1Relation::ne)
        .value("LT", Vl1Relation::lt)
        .value("LE", Vl1Relation::le)
        .value("GT", Vl1Relation::gt)
        .value("GE", Vl1Relation::ge);

    py::class_<Vl1Selector>(m, "Vl1Selector")
        .def(py::init<std::string, Vl1Relation, std::string>(),
             py::arg("attribute"), py::arg("relation"), py::arg("value"))
        .def_readwrite("attribute", &Vl1Selector::attribute)
        .def_readwrite("relation", &Vl1Selector::relation)
        .def_readwrite("value", &Vl1Selector::value)
        .def(py::self == py::self)
        .def("__repr__", [](const Vl1Selector& self) {
            return "Vl1Selector([" + self.attribute + std::string(relation_token(self.relation)) +
                   self.value + "])";
        });

    py::class_<Vl1Expression>(m, "Vl1Expression")
        .def(py::init<std::vector<std::vector<Vl1Selector>>>(), py::arg("disjuncts"))
        .def_readwrite("disjuncts", &Vl1Expression::disjuncts)
        .def(py::self == py::self)
        .def("__repr__", [](const Vl1Expression& self) {
            return "Vl1Expression('" + to_string(self) + "')";
        });

    m.def("parse_vl1", &parse_vl1, py::arg("text"), py::arg("schema"));
    m.def("vl1_to_string", [](const Vl1Expression& e) { return to_string(e); },
          py::arg("expression"));
    m.def("expand_selector", &expand_selector, py::arg("selector"), py::arg("schema"));
    m.def("lower_to_concept", &lower_to_concept, py::arg("expression"), py::arg("schema"));

    py::class_<ConceptDocument>(m, "ConceptDocument")
        .def(py::init<>())
        .def(py::init<std::string, std::string, std::vector<Concept>>(),
             py::arg("universe_name"), py::arg("namespace_uri") = "",
             py::arg("concepts") = std::vector<Concept>{})
        .def_readwrite("universe_name", &ConceptDocument::universe_name)
        .def_readwrite("namespace_uri", &ConceptDocument::namespace_uri)
        .def_readwrite("concepts", &ConceptDocument::concepts)
        .def(py::self == py::self)
        .def("__repr__", [](const ConceptDocument& self) {
            return "ConceptDocument('" + self.universe_name + "', " +
                   std::to_string(self.concepts.size()) + " concepts)";
        });

    m.def("parse_document", &parse_document, py::arg("text"));
    m.def(
        "serialize_document",
        [](const ConceptDocument& document, const UniverseSchema& schema,
           bool expand_value_sets, std::size_t expansion_limit) {
            return serialize_document(document, schema,
                                      SerializeOptions{expand_value_sets, expansion_limit});
        },
        py::arg("document"), py::arg("schema"), py::arg("expand_value_sets") = true,
        py::arg("expansion_limit") = 10000);
    m.def("generate_schema", &generate_schema, py::arg("schema"));
    m.def("parse_schema", &parse_schema, py::arg("text"));

    py::enum_<Severity>(m, "Severity")
        .value("ERROR", Severity::error)
        .value("WARNING", Severity::warning);

    py::class_<ValidationIssue>(m, "ValidationIssue")
        .def_readonly("severity", &ValidationIssue::severity)
        .def_readonly("path", &ValidationIssue::path)
        .def_readonly("code", &ValidationIssue::code)
        .def_readonly("message", &ValidationIssue::message)
        .def("__repr__", [](const ValidationIssue& self) {
            return std::string(severity_name(self.severity)) + " " + self.path + " " +
                   self.code + ": " + self.message;
        });

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("issues", &ValidationReport::issues)
        .def_property_readonly("valid", &ValidationReport::valid);

    m.def("validate_document", &validate_document, py::arg("document"), py::arg("schema"));
    m.def("render_report", &render_report, py::arg("report"));
    m.def("parse_universe_definition", &parse_universe_definition, py::arg("text"));
    m.def("load_universe", &load_universe, py::arg("text"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
