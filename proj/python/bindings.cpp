#include "indeq/basis.hpp"
#include "indeq/classes.hpp"
#include "indeq/classify.hpp"
#include "indeq/graph6.hpp"
#include "indeq/indpoly.hpp"
#include "indeq/oracle.hpp"
#include "indeq/spec_text.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace indeq;

namespace {

// Python ints from decimal strings, so coefficients stay exact.
py::list coeffs(const IntPoly& p) {
  py::list out;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const auto& c : p.coefficients()) out.append(to_int(c.get_str()));
  return out;
}

std::vector<std::string> member_strings(const EquivClass& c) {
  std::vector<std::string> out;
  for (const auto& m : c.members) out.push_back(to_string(m));
  return out;
}

Graph graph_of(const std::string& text) {
  try {
    return build(parse_graph_spec(text));
  } catch (const SpecParseError&) {
    return graph6_read(text);
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);

  m.def("independence_polynomial", [](const std::string& spec) { return coeffs(independence_polynomial(graph_of(spec))); },
        py::arg("spec"));
  m.def("factor_path", [](std::uint32_t n) { return factor_path(n).to_string(); }, py::arg("n_vertices"));
  m.def("factor_cycle", [](std::uint32_t n) { return factor_cycle(n).to_string(); }, py::arg("n"));
  m.def(
      "basis", [](const std::string& l) {
        auto r = parse_label(l);
        if (!r) throw py::value_error("not a basis label: " + l);
        return coeffs(basis(*r).poly);
      },
      py::arg("label"));
  m.def("path_class", [](std::uint32_t n, bool expand_d) { return member_strings(path_class(n, expand_d)); },
        py::arg("n_vertices"), py::arg("expand_d") = true);
  m.def("cycle_class", [](std::uint32_t n, bool expand_d) { return member_strings(cycle_class(n, expand_d)); },
        py::arg("n"), py::arg("expand_d") = true);
  m.def(
      "admissible", [](const std::string& spec) { return screen_family(parse_family_spec(spec)).admissible; },
      py::arg("spec"));
  m.def(
      "bruteforce_class_size",
      [](const std::string& spec) {
        Graph g = graph_of(spec);
        return equivalence_class_bruteforce(g, class_filter(g)).members.size();
      },
      py::arg("spec"));
  m.def(
      "graph6", [](const std::string& spec) { return graph6_write(build(parse_graph_spec(spec))); }, py::arg("spec"));
}
