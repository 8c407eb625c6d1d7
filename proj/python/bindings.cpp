#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "s1m/capping.hpp"
#include "s1m/cohomology.hpp"
#include "s1m/enumerate.hpp"
#include "s1m/json_report.hpp"
#include "s1m/textio.hpp"

namespace py = pybind11;
using namespace s1m;

namespace {

OrbitInvariants from_text(const std::string& text) {
  ParseResult r = parse(text);
  if (!r.ok()) throw py::value_error(format_diagnostics(text, r.diagnostics));
  return *r.value;
}

std::vector<std::vector<std::string>> graph_labels(const OrbitInvariants& inv) {
  std::vector<std::vector<std::string>> out;
  for (const Cycle& c : inv.graph.cycles) {
    std::vector<std::string> labels;
    for (EdgeLabel l : c) labels.emplace_back(to_string(l));
    out.push_back(std::move(labels));
  }
  return out;
}

std::string dumped(const nlohmann::json& j) { return emit_json(j); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Classification data of compact 3-manifolds with circle actions";

  py::class_<OrbitInvariants>(m, "OrbitInvariants")
      .def(py::init(&from_text), py::arg("text"))
      .def_readonly("b", &OrbitInvariants::b)
      .def_property_readonly("eps", [](const OrbitInvariants& inv) { return std::string(1, to_char(inv.eps)); })
      .def_readonly("g", &OrbitInvariants::g)
      .def_readonly("f", &OrbitInvariants::f)
      .def_readonly("s", &OrbitInvariants::s)
      .def_readonly("t", &OrbitInvariants::t)
      .def_property_readonly("pairs",
                             [](const OrbitInvariants& inv) {
                               std::vector<std::pair<std::int64_t, std::int64_t>> out;
                               for (const SeifertPair& p : inv.pairs) out.emplace_back(p.m, p.n);
                               return out;
                             })
      .def_property_readonly("graph", &graph_labels)
      .def("closed", &OrbitInvariants::closed)
      .def("__str__", [](const OrbitInvariants& inv) { return serialize(inv); })
      .def("__repr__", [](const OrbitInvariants& inv) { return "OrbitInvariants('" + serialize(inv) + "')"; })
      .def("__eq__", [](const OrbitInvariants& a, const OrbitInvariants& b) { return a == b; });

  m.def("parse", &from_text, py::arg("text"));
  m.def("serialize", &serialize, py::arg("datum"));
  m.def("_validate", [](const OrbitInvariants& inv) { return dumped(to_json(validate(inv))); });
  m.def("normalize", &normalize, py::arg("datum"));
  m.def("canonical", [](const OrbitInvariants& inv) { return serialize(normalize(inv)); }, py::arg("datum"));
  m.def("_canonical_form", [](const OrbitInvariants& inv) { return dumped(to_json(canonical_form(inv))); });
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"));
  m.def("_derived_counts", [](const OrbitInvariants& inv) { return dumped(to_json(derived_counts(inv))); });
  m.def("orbit_euler_characteristic", &orbit_euler_characteristic, py::arg("datum"));
  m.def("_cap_off", [](const OrbitInvariants& inv) { return dumped(to_json(cap_off(inv))); });
  m.def("betti_numbers", &betti_numbers, py::arg("datum"), py::arg("upto"));
  m.def(
      "poincare_series",
      [](const OrbitInvariants& inv) {
        const PoincareSeries p = equivariant_poincare(inv);
        return std::make_pair(p.numerator(), p.denominator());
      },
      py::arg("datum"));
  m.def("_is_formal", [](const OrbitInvariants& inv) { return dumped(to_json(is_formal(inv))); });
  m.def("_euler_number", [](const OrbitInvariants& inv) { return dumped(to_json(euler_number(inv))); });
  m.def(
      "enumerate",
      [](const std::vector<std::string>& settings) {
        EnumerationBounds bounds;
        for (const std::string& s : settings) apply_bound(bounds, s);
        return enumerate_all(bounds);
      },
      py::arg("bounds"));
  m.def(
      "classify_2d",
      [](std::int64_t boundary, std::int64_t f, std::int64_t s) -> std::optional<std::string> {
        const auto surface = s1m::classify_2d(boundary, f, s);
        if (!surface) return std::nullopt;
        return std::string(to_string(*surface));
      },
      py::arg("boundary"), py::arg("f"), py::arg("s"));
  m.def("modular_inverse", &modular_inverse, py::arg("n"), py::arg("m"));
}
