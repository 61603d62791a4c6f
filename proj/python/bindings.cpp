#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spg/geometry.hpp"
#include "spg/invariants.hpp"
#include "spg/verify.hpp"

namespace py = pybind11;
using namespace spg;

namespace {

py::dict report_dict(const IdentityReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["passed"] = r.pass;
  d["note"] = r.note;
  py::list terms;
  for (auto& t : r.terms) terms.append(py::make_tuple(t.name, t.value));
  d["terms"] = terms;
  return d;
}

TwistParameters twists_of(const std::vector<int>& v) {
  if (v.size() != 9) throw InputError("twists take nine integers");
  TwistParameters n{};
  for (int i = 0; i < 9; ++i) n[i] = v[i];
  return n;
}

}  // namespace

PYBIND11_MODULE(_spg, m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<GeometryError>(m, "GeometryError", PyExc_RuntimeError);

  py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
      .def_readonly("name", &Graph::name)
      .def_readonly("vertices", &Graph::vertices)
      .def_property_readonly("num_vertices", &Graph::nv)
      .def_property_readonly("num_edges", &Graph::ne)
      .def("cycles", [](const Graph& g) {
        std::vector<std::string> out;
        for (auto& c : enumerate_cycles(g)) out.push_back(cycle_text(g, c));
        return out;
      })
      .def("link_patterns", [](const Graph& g) {
        std::vector<std::string> out;
        for (auto& l : enumerate_link_patterns(g)) out.push_back(pattern_text(g, l));
        return out;
      })
      .def("__repr__", [](const Graph& g) { return "<Graph " + g.name + ">"; });

  m.def("graph", [](const std::string& name) { return std::const_pointer_cast<Graph>(named_graph(name)); });
  m.def("catalog", [] {
    std::vector<std::string> out;
    for (auto& e : petersen_family().entries) out.push_back(e.graph->name);
    return out;
  });
  m.def("wu_rank", [](const std::string& name) { return wu_rank(named_graph(name)); });

  py::class_<Diagram>(m, "Diagram")
      .def_property_readonly("graph", [](const Diagram& d) { return std::const_pointer_cast<Graph>(d.graph); })
      .def_property_readonly("crossings", [](const Diagram& d) { return d.crossings.size(); })
      .def_readonly("direction", &Diagram::direction)
      .def("a2", [](const Diagram& d) {
        py::dict out;
        for (auto& c : enumerate_cycles(*d.graph)) out[py::str(cycle_text(*d.graph, c))] = a2_of_cycle(d, c);
        return out;
      })
      .def("lk", [](const Diagram& d) {
        py::dict out;
        for (auto& [l, v] : link_profile(d).links) out[py::str(pattern_text(*d.graph, l))] = v;
        return out;
      })
      .def("ca_linked", [](const Diagram& d) { return link_profile(d).ca_linked; })
      .def("checks", [](const Diagram& d) {
        const Graph& g = *d.graph;
        py::list out;
        if (g.name == "K6") {
          out.append(report_dict(conway_gordon_check(d)));
          out.append(report_dict(nikkuni_k6_check(d)));
        } else if (g.name == "K331") {
          out.append(report_dict(k331_check(d)));
          out.append(report_dict(wu_decomposition_check(d)));
        } else if (g.name == "K33") {
          out.append(report_dict(alpha_check(d)));
        }
        out.append(report_dict(main_theorem_check(d)));
        return out;
      });

  py::class_<Embedding>(m, "Embedding")
      .def_property_readonly("graph", [](const Embedding& e) { return std::const_pointer_cast<Graph>(e.graph); })
      .def("project", [](const Embedding& e) { return project(e); })
      .def("to_text", &embedding_to_text)
      .def_static("from_text", [](const std::string& t) { return embedding_from_text(t, named_graph); });

  m.def("random_linear_embedding",
        [](const std::string& name, I64 bound, std::uint64_t seed) {
          return random_linear_embedding(named_graph(name), bound, seed);
        },
        py::arg("graph"), py::arg("bound") = 100, py::arg("seed") = 1);
  m.def("twist_embedding", [](const std::vector<int>& n) { return h_embedding(twists_of(n)); });

  m.def("a2", [](const std::string& code) { return a2(parse_gauss(code)); });
  m.def("linking_number", [](const std::string& code) { return linking_number(parse_gauss(code)); });
  m.def("canonical", [](const std::string& code) { return to_text(canonical(parse_gauss(code))); });

  m.def("search", [](std::uint64_t first, std::uint64_t last) {
    py::list out;
    for (auto& h : search_single_link_knotted(first, last)) {
      py::dict d;
      d["seed"] = h.seed;
      d["certificate"] = cycle_text(*h.embedding.graph, h.certificate.cycle);
      d["a2"] = h.certificate.a2;
      d["embedding"] = h.embedding;
      out.append(d);
    }
    return out;
  });
}
