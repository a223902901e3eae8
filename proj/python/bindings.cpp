// Copyright 2026 The rigidkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rigidkit/cone_laman.hpp"
#include "rigidkit/development.hpp"
#include "rigidkit/fixed_lattice.hpp"
#include "rigidkit/gamma_image.hpp"
#include "rigidkit/generators.hpp"
#include "rigidkit/graph_io.hpp"
#include "rigidkit/oracle.hpp"

namespace py = pybind11;
using namespace rigidkit;

namespace {

ColoredGraph make_z2(VertexId n, const std::vector<std::tuple<VertexId, VertexId, std::int64_t,
                                                                std::int64_t>>& edges) {
  ColoredGraph g(Group::Z2(), n);
  for (const auto& [t, h, a, b] : edges) g.add_edge(t, h, {a, b});
  validate(g);
  return g;
}

ColoredGraph make_zk(std::int64_t k, VertexId n,
                     const std::vector<std::tuple<VertexId, VertexId, std::int64_t>>& edges) {
  ColoredGraph g(Group::Zk(k), n);
  for (const auto& [t, h, c] : edges) g.add_edge(t, h, {c, 0});
  validate(g);
  return g;
}

py::list edge_tuples(const ColoredGraph& g) {
  py::list out;
  for (const ColoredEdge& e : g.edges()) {
    if (g.group().is_lattice()) {
      out.append(py::make_tuple(e.tail, e.head, e.color.a, e.color.b));
    } else {
      out.append(py::make_tuple(e.tail, e.head, e.color.a));
    }
  }
  return out;
}

Family family_from(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw py::value_error("unknown family '" + name + "'");
  return *f;
}

DecideMode mode_from(bool spanning) { return spanning ? DecideMode::kSpanning : DecideMode::kMinimal; }

py::dict decision_dict(bool verdict, std::size_t processed,
                       std::optional<std::pair<EdgeId, std::string>> discard) {
  py::dict d;
  d["verdict"] = verdict;
  d["processed"] = processed;
  if (discard) {
    d["first_discard"] = py::make_tuple(discard->first, discard->second);
  } else {
    d["first_discard"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_rigidkit, m) {
  m.doc() = "Rigidity of periodic and cone frameworks from colored graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OracleBoundExceeded>(m, "OracleBoundExceeded", PyExc_RuntimeError);

  py::class_<ColoredGraph>(m, "Graph")
      .def_static("z2", &make_z2, py::arg("n"), py::arg("edges") = py::list(),
                  "Z^2-colored graph from (tail, head, a, b) tuples")
      .def_static("zk", &make_zk, py::arg("k"), py::arg("n"), py::arg("edges") = py::list(),
                  "Z/kZ-colored graph from (tail, head, residue) tuples")
      .def_static("parse", [](const std::string& text) { return parse_graph(std::string_view(text)); })
      .def_static("read", [](const std::string& path) { return read_graph_file(path); })
      .def("serialize", &serialize_graph)
      .def_property_readonly("n", &ColoredGraph::num_vertices)
      .def_property_readonly("m", &ColoredGraph::num_edges)
      .def_property_readonly("modulus",
                             [](const ColoredGraph& g) -> py::object {
                               if (g.group().is_lattice()) return py::none();
                               return py::int_(g.group().modulus());
                             })
      .def_property_readonly("edges", &edge_tuples)
      .def("__eq__", [](const ColoredGraph& a, const ColoredGraph& b) { return a == b; })
      .def("__repr__", [](const ColoredGraph& g) {
        return "<Graph " + g.group().describe() + " n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  py::class_<Component>(m, "Component")
      .def_readonly("vertices", &Component::vertices)
      .def_readonly("edges", &Component::edges)
      .def("__repr__", [](const Component& c) {
        return "<Component " + std::to_string(c.vertices.size()) + " vertices, " +
               std::to_string(c.edges.size()) + " edges>";
      });

  m.def("ross_decide", [](const ColoredGraph& g, bool spanning) {
        const RossDecision d = ross_decide(g, mode_from(spanning));
        std::optional<std::pair<EdgeId, std::string>> discard;
        if (d.first_discard) discard.emplace(d.first_discard->edge, std::string(to_string(d.first_discard->reason)));
        return decision_dict(d.is_ross, d.processed, discard);
      }, py::arg("graph"), py::arg("spanning") = false);
  m.def("ross_extract", &ross_extract, py::arg("graph"));
  m.def("ross_components", &ross_components, py::arg("graph"));

  m.def("cone_decide", [](const ColoredGraph& g, bool spanning) {
        const ConeDecision d = cone_decide(g, mode_from(spanning));
        std::optional<std::pair<EdgeId, std::string>> discard;
        if (d.first_discard) discard.emplace(d.first_discard->edge, std::string(to_string(d.first_discard->reason)));
        return decision_dict(d.is_cone_laman, d.processed, discard);
      }, py::arg("graph"), py::arg("spanning") = false);
  m.def("cone_extract", &cone_extract, py::arg("graph"));
  m.def("cone_components", &cone_components, py::arg("graph"));

  m.def("cone3_decide", [](const ColoredGraph& g, bool spanning) {
        const Cone3Decision d = cone3_decide(g, mode_from(spanning));
        std::optional<std::pair<EdgeId, std::string>> discard;
        if (d.first_rejected_lift) discard.emplace(Development::base_edge(*d.first_rejected_lift), "lift-rejected");
        return decision_dict(d.is_cone_laman, d.lifted_processed, discard);
      }, py::arg("graph"), py::arg("spanning") = false);
  m.def("cone3_extract", &cone3_extract, py::arg("graph"));
  m.def("cone3_components", [](const ColoredGraph& g) { return cone3_components(g).components; },
        py::arg("graph"));
  m.def("develop", [](const ColoredGraph& g) { return Development(g).as_colored_graph(); },
        py::arg("graph"), "The development as a Z/3Z graph with zero colors");

  m.def("is_trivial_image", [](const ColoredGraph& g, std::optional<std::vector<EdgeId>> subset) {
        if (subset) return is_trivial_image(g, *subset);
        return is_trivial_image(g);
      }, py::arg("graph"), py::arg("subset") = py::none());
  m.def("component_images", [](const ColoredGraph& g) {
        py::list out;
        for (const ComponentImage& c : component_images(g)) {
          out.append(py::make_tuple(c.vertices, c.edges, c.trivial));
        }
        return out;
      }, py::arg("graph"));

  m.def("oracle_is_sparse", [](const ColoredGraph& g, const std::string& f) { return oracle_is_sparse(g, family_from(f)); },
        py::arg("graph"), py::arg("family"));
  m.def("oracle_is_tight", [](const ColoredGraph& g, const std::string& f) { return oracle_is_tight(g, family_from(f)); },
        py::arg("graph"), py::arg("family"));
  m.def("oracle_max_independent", [](const ColoredGraph& g, const std::string& f) { return oracle_max_independent(g, family_from(f)); },
        py::arg("graph"), py::arg("family"));
  m.def("oracle_components", [](const ColoredGraph& g, const std::string& f) { return oracle_components(g, family_from(f)); },
        py::arg("graph"), py::arg("family"));

  m.def("random_colored", [](std::uint64_t seed, VertexId n, EdgeId m, std::optional<std::int64_t> k,
                             std::int64_t low, std::int64_t high) {
        GenSpec spec;
        spec.seed = seed;
        spec.n = n;
        spec.m = m;
        spec.group = k ? Group::Zk(*k) : Group::Z2();
        spec.color_low = low;
        spec.color_high = high;
        return random_colored(spec);
      }, py::arg("seed"), py::arg("n"), py::arg("m"), py::arg("k") = py::none(),
      py::arg("color_low") = -2, py::arg("color_high") = 2);
  m.def("ross_family", &ross_family, py::arg("n"));
  m.def("cone_family", &cone_family, py::arg("n"), py::arg("k"));
}
