#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contingent/fixtures.hpp"
#include "contingent/random.hpp"
#include "contingent/search.hpp"
#include "contingent/transform.hpp"

namespace py = pybind11;
using namespace contingent;

namespace {

std::vector<std::string> states_of(const Frame& frame, StateSet set) {
  std::vector<std::string> out;
  for (int s = 0; s < frame.size(); ++s) {
    if ((set >> s) & 1u) out.push_back(frame.state_name(s));
  }
  return out;
}

SearchReport run_search(const std::string& schema_name, const std::string& props, int max_size,
                        bool exhaustive, std::uint64_t samples, std::uint64_t seed,
                        const std::vector<std::string>& atoms) {
  const Schema* schema = find_schema(schema_name);
  if (!schema) throw std::invalid_argument("unknown schema '" + schema_name + "'");
  const SearchMode mode =
      exhaustive ? SearchMode::exhaustive() : SearchMode::sample(samples, seed);
  const std::vector<std::string>& use_atoms =
      atoms.empty() ? default_instance_atoms(*schema) : atoms;
  return find_countermodel(*schema, use_atoms, PropertySet::from_flags(props), max_size, mode);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "contingency logic workbench: neighborhood models, countermodel search, "
            "transforms and a Hilbert-style proof checker";

  py::register_exception<ParseError>(m, "FormulaSyntaxError", PyExc_ValueError);
  py::register_exception<ModelFormatError>(m, "ModelFormatError", PyExc_ValueError);
  py::register_exception<DerivationFormatError>(m, "DerivationFormatError", PyExc_ValueError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_ValueError);
  py::register_exception<UnknownState>(m, "UnknownState", PyExc_KeyError);

  py::class_<Formula>(m, "Formula")
      .def("__str__", [](const Formula& f) { return to_string(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + to_string(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return py::hash(py::str(to_string(f))); })
      .def_property_readonly("modal_depth", &Formula::modal_depth)
      .def_property_readonly("atoms", &Formula::atoms)
      .def_property_readonly("metavariables", &Formula::metavariables);

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"),
        "parse a formula from its text form");
  m.def("is_tautology_instance", &is_tautology_instance, py::arg("formula"));
  m.def(
      "instantiate",
      [](const Formula& schema, const std::map<std::string, Formula>& bindings) {
        return instantiate(schema, Substitution(bindings.begin(), bindings.end()));
      },
      py::arg("schema"), py::arg("bindings"));
  m.def("star_translate", &star_translate, py::arg("formula"),
        "translate a Delta-formula into the Box language");

  py::class_<Model>(m, "Model")
      .def_static("from_text", [](const std::string& text) { return parse_model(text); },
                  py::arg("text"))
      .def("to_text", [](const Model& model) { return to_text(model); })
      .def_property_readonly("states",
                             [](const Model& model) { return model.frame().states(); })
      .def("eval",
           [](const Model& model, const Formula& f, const std::string& state) {
             return eval(model, state, f);
           },
           py::arg("formula"), py::arg("state"))
      .def("eval",
           [](const Model& model, const std::string& f, const std::string& state) {
             return eval(model, state, parse(f));
           },
           py::arg("formula"), py::arg("state"))
      .def("truth_set",
           [](const Model& model, const Formula& f) {
             return states_of(model.frame(), truth_set(model, f));
           },
           py::arg("formula"))
      .def("truth_set",
           [](const Model& model, const std::string& f) {
             return states_of(model.frame(), truth_set(model, parse(f)));
           },
           py::arg("formula"))
      .def("check_property",
           [](const Model& model, const std::string& flags) {
             return check_property(model.frame(), PropertySet::from_flags(flags));
           },
           py::arg("flags"))
      .def("supplement", [](const Model& model) { return supplementation(model); })
      .def("complement", [](const Model& model) { return complementation(model); })
      .def("close_under",
           [](const Model& model, const std::string& flags) {
             return close_under(model, PropertySet::from_flags(flags));
           },
           py::arg("flags"))
      .def("is_valid_in_frame",
           [](const Model& model, const Formula& f) {
             return is_valid_in_frame(model.frame(), f);
           },
           py::arg("formula"))
      .def("__repr__", [](const Model& model) {
        return "Model(" + std::to_string(model.frame().size()) + " states)";
      });

  m.def("load_model", [](const std::string& text) { return parse_model(text); },
        py::arg("text"));

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("ok", &CheckResult::ok)
      .def_readonly("line", &CheckResult::line)
      .def_readonly("reason", &CheckResult::reason)
      .def_readonly("conjectured", &CheckResult::conjectured)
      .def("__bool__", [](const CheckResult& r) { return r.ok; })
      .def("__repr__", [](const CheckResult& r) {
        return r.ok ? std::string("CheckResult(ok)")
                    : "CheckResult(line " + std::to_string(r.line) + ": " + r.reason + ")";
      });

  m.def("check_derivation",
        [](const std::string& text) { return check_derivation(parse_derivation(text)); },
        py::arg("text"), "verify a derivation given in the text format");

  m.def("schema_names", [] {
    std::vector<std::string> out;
    for (const auto& schema : schema_registry()) out.push_back(schema.name);
    return out;
  });
  m.def("schema_pattern", [](const std::string& name) {
    const Schema* schema = find_schema(name);
    if (!schema) throw std::invalid_argument("unknown schema '" + name + "'");
    return schema->pattern;
  });
  m.def("system_names", [] {
    std::vector<std::string> out;
    for (const auto& system : system_registry()) out.push_back(system.name);
    return out;
  });
  m.def("system_schemas", [](const std::string& name) {
    const System* system = find_system(name);
    if (!system) throw std::invalid_argument("unknown system '" + name + "'");
    return system->schemas;
  });
  m.def("lattice_edges", &lattice_edges);

  py::class_<SearchReport>(m, "SearchReport")
      .def_readonly("falsified", &SearchReport::falsified)
      .def_readonly("frames_examined", &SearchReport::frames_examined)
      .def_readonly("subject", &SearchReport::subject)
      .def_property_readonly("witness_text",
                             [](const SearchReport& report) -> py::object {
                               if (!report.witness) return py::none();
                               return py::str(to_text(report.witness->model));
                             })
      .def_property_readonly("witness_state",
                             [](const SearchReport& report) -> py::object {
                               if (!report.witness) return py::none();
                               return py::str(report.witness->model.frame().state_name(
                                   report.witness->state));
                             })
      .def("machine_line", &SearchReport::machine_line)
      .def("__repr__", [](const SearchReport& report) {
        return "SearchReport(" + report.machine_line() + ")";
      });

  m.def("find_countermodel", &run_search, py::arg("schema"), py::arg("props") = "",
        py::arg("max_size") = 2, py::arg("exhaustive") = true, py::arg("samples") = 10000,
        py::arg("seed") = kDefaultSeed, py::arg("atoms") = std::vector<std::string>{},
        "search the flagged frame class for a countermodel to a schema instance");

  m.def("frame_count", [](int n, const std::string& props) {
    return frame_count(n, PropertySet::from_flags(props));
  });

  m.def(
      "fixture_suite",
      [](std::uint64_t seed, std::uint64_t samples) {
        py::list out;
        for (const auto& item : fixture_suite(seed, samples)) {
          py::dict entry;
          entry["id"] = item.id;
          entry["pass"] = item.pass;
          entry["frames"] = item.frames_examined;
          entry["detail"] = item.detail;
          out.append(entry);
        }
        return out;
      },
      py::arg("seed") = kDefaultSeed, py::arg("samples") = 10000);

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& entry : fixture_model_texts()) out.emplace_back(entry.name);
    for (const auto& entry : fixture_derivation_texts()) out.emplace_back(entry.name);
    return out;
  });
  m.def("fixture_text", [](const std::string& name) -> std::string {
    for (const auto& entry : fixture_model_texts()) {
      if (entry.name == name) return std::string(entry.text);
    }
    for (const auto& entry : fixture_derivation_texts()) {
      if (entry.name == name) return std::string(entry.text);
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
  });

  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
