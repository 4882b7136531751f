#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "autocomm/autocommuting.hpp"
#include "autocomm/catalog.hpp"
#include "autocomm/group_io.hpp"
#include "autocomm/isoclinism.hpp"
#include "autocomm/report_json.hpp"
#include "autocomm/survey.hpp"

namespace py = pybind11;
using namespace autocomm;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::null:
      return py::none();
    case nlohmann::ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::ordered_json::value_t::number_integer:
    case nlohmann::ordered_json::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case nlohmann::ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::ordered_json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case nlohmann::ordered_json::value_t::object: {
      py::dict out;
      for (const auto& item : j.items()) out[py::str(item.key())] = json_to_py(item.value());
      return out;
    }
    default:
      return py::none();
  }
}

FiniteGroup build_from_spec(const std::string& spec) {
  return build_group(GroupSpec::parse(spec));
}

py::object analyze_spec(const std::string& spec, bool bounds, bool characterize) {
  const FiniteGroup g = build_from_spec(spec);
  const AutomorphismGroup a = enumerate_automorphisms(g);
  const AutocommutingReport report = analyze_group(g, a);
  BoundReport bound_data;
  std::vector<CharacterizationVerdict> checks;
  if (bounds) bound_data = bound_report(g, a);
  if (characterize) checks = characterization_check(g, a);
  return json_to_py(report_to_json(g, report, bounds ? &bound_data : nullptr,
                                   characterize ? &checks : nullptr));
}

py::object isoclinic_spec(const std::string& spec_a, const std::string& spec_b,
                          long long budget) {
  const FiniteGroup g = build_from_spec(spec_a);
  const FiniteGroup h = build_from_spec(spec_b);
  IsoclinismOptions opts;
  opts.budget = budget;
  const AutoisoclinismResult result = find_autoisoclinism(g, h, opts);
  nlohmann::ordered_json j;
  j["pairs_checked"] = result.pairs_checked;
  switch (result.status) {
    case IsoclinismStatus::Found: {
      j["status"] = "found";
      j["witness"] = witness_to_json(g, h, *result.witness);
      const InvarianceVerdict v = verify_invariance(g, h, *result.witness, opts);
      j["invariance"]["distributions_match"] = v.distributions_match;
      j["invariance"]["bijection_ok"] = v.bijection_ok;
      break;
    }
    case IsoclinismStatus::None:
      j["status"] = "none";
      if (!result.reject_reason.empty()) j["reason"] = result.reject_reason;
      break;
    case IsoclinismStatus::BudgetExceeded:
      j["status"] = "budget_exceeded";
      break;
  }
  return json_to_py(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact autocommuting-probability analysis of small finite groups";

  py::register_exception<Error>(m, "AutocommError");

  py::class_<FiniteGroup>(m, "Group")
      .def_readonly("order", &FiniteGroup::order)
      .def_readonly("name", &FiniteGroup::name)
      .def_readonly("labels", &FiniteGroup::labels)
      .def("mul", &FiniteGroup::mul, py::arg("a"), py::arg("b"))
      .def("inv", &FiniteGroup::inv, py::arg("a"))
      .def("element_order", &FiniteGroup::element_order, py::arg("a"))
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("table",
           [](const FiniteGroup& g) {
             std::vector<std::vector<int>> rows(g.order, std::vector<int>(g.order));
             for (int a = 0; a < g.order; ++a)
               for (int b = 0; b < g.order; ++b) rows[a][b] = g.mul(a, b);
             return rows;
           })
      .def("__len__", [](const FiniteGroup& g) { return g.order; })
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + g.name + " of order " + std::to_string(g.order) + ">";
      });

  m.def("build", &build_from_spec, py::arg("spec"),
        "Build a group from a spec string such as 'cyclic:4' or 'dihedral:3'.");

  m.def(
      "automorphisms",
      [](const FiniteGroup& g) {
        const AutomorphismGroup a = enumerate_automorphisms(g);
        std::vector<std::vector<int>> out;
        out.reserve(a.elements.size());
        for (const Automorphism& alpha : a.elements) out.push_back(alpha.images);
        return out;
      },
      py::arg("group"), "All automorphisms as image arrays, identity first.");

  m.def(
      "aut_order",
      [](const FiniteGroup& g) { return enumerate_automorphisms(g).order(); },
      py::arg("group"));

  m.def(
      "distribution",
      [](const FiniteGroup& g) {
        const AutomorphismGroup a = enumerate_automorphisms(g);
        const std::vector<Rational> dist = distribution(g, a);
        py::dict out;
        for (int v = 0; v < g.order; ++v) out[py::str(g.labels[v])] = dist[v].str();
        return out;
      },
      py::arg("group"), "Pr_g for every g, keyed by element label, as 'a/b' strings.");

  m.def(
      "pr",
      [](const FiniteGroup& g) {
        const AutomorphismGroup a = enumerate_automorphisms(g);
        return distribution(g, a)[0].str();
      },
      py::arg("group"), "Pr(G, Aut(G)) as an 'a/b' string.");

  m.def("analyze", &analyze_spec, py::arg("spec"), py::arg("bounds") = true,
        py::arg("characterize") = true,
        "Full report for a group spec, as a dict mirroring the JSON report.");

  m.def("isoclinic", &isoclinic_spec, py::arg("spec_a"), py::arg("spec_b"),
        py::arg("budget") = 1'000'000,
        "Search for an autoisoclinism between two group specs.");

  m.def(
      "survey",
      [](int max_order, int jobs) { return survey_csv(run_survey(max_order, jobs)); },
      py::arg("max_order") = 16, py::arg("jobs") = 1, "Survey CSV for the corpus.");

  m.def(
      "survey_rows",
      [](int max_order, int jobs) {
        return json_to_py(survey_json(run_survey(max_order, jobs)));
      },
      py::arg("max_order") = 16, py::arg("jobs") = 1, "Survey rows as dicts.");

  m.def(
      "load_group",
      [](const std::string& path) { return load_group_file(path); },
      py::arg("path"), "Load a group from either JSON file format.");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
