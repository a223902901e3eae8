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

#include "rigidkit/development.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "rigidkit/pebble_game.hpp"

namespace rigidkit {
namespace {

const ColoredGraph& require_z3(const ColoredGraph& graph) {
  if (graph.group().is_lattice() || graph.group().modulus() != 3) {
    throw std::invalid_argument("development needs Z/3Z colors, got " +
                                graph.group().describe());
  }
  return graph;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Development::Development(const ColoredGraph& base) : base_(require_z3(base)) {
  edges_.reserve(3 * static_cast<std::size_t>(base.num_edges()));
  for (const ColoredEdge& e : base.edges()) {
    for (int z = 0; z < 3; ++z) {
      const int shifted = static_cast<int>((z + e.color.a) % 3);
      edges_.push_back({lift(e.tail, z), lift(e.head, shifted)});
    }
  }
}

std::array<VertexId, 3> Development::vertex_fiber(VertexId base_vertex) const {
  return {lift(base_vertex, 0), lift(base_vertex, 1), lift(base_vertex, 2)};
}

std::array<EdgeId, 3> Development::edge_fiber(EdgeId base_edge) const {
  return {3 * base_edge, 3 * base_edge + 1, 3 * base_edge + 2};
}

VertexId Development::act(int z, VertexId lifted) {
  return lift(base_vertex(lifted), (layer(lifted) + z) % 3);
}

EdgeId Development::act_on_edge(int z, EdgeId lifted) const {
  return 3 * base_edge(lifted) + (lifted % 3 + z) % 3;
}

void Development::write_dot(std::ostream& out) const {
  out << "graph development {\n";
  for (VertexId v = 0; v < num_vertices(); ++v) {
    out << "  v" << v << " [label=\"" << base_vertex(v) << "_" << layer(v) << "\"];\n";
  }
  for (EdgeId e = 0; e < num_edges(); ++e) {
    out << "  v" << edges_[static_cast<std::size_t>(e)].u << " -- v"
        << edges_[static_cast<std::size_t>(e)].v << " [label=\"" << e << "\"];\n";
  }
  out << "}\n";
}

ColoredGraph Development::as_colored_graph() const {
  ColoredGraph lifted(base_.group(), num_vertices());
  for (const LiftedEdge& e : edges_) lifted.add_edge(e.u, e.v, {});
  return lifted;
}

Development develop(const ColoredGraph& graph) { return Development(graph); }

EdgeSubset project(const Development& dev, const LiftedSubgraph& lifted) {
  (void)dev;
  EdgeSubset base;
  base.reserve(lifted.edges.size());
  for (EdgeId e : lifted.edges) base.push_back(Development::base_edge(e));
  sort_unique(base);
  return base;
}

LiftedSubgraph orbit(const Development& dev, const LiftedSubgraph& lifted) {
  LiftedSubgraph out;
  for (int z = 0; z < 3; ++z) {
    for (VertexId v : lifted.vertices) out.vertices.push_back(Development::act(z, v));
    for (EdgeId e : lifted.edges) out.edges.push_back(dev.act_on_edge(z, e));
  }
  sort_unique(out.vertices);
  sort_unique(out.edges);
  return out;
}

bool is_symmetric(const Development& dev, const LiftedSubgraph& lifted) {
  LiftedSubgraph canonical = lifted;
  sort_unique(canonical.vertices);
  sort_unique(canonical.edges);
  return orbit(dev, canonical) == canonical;
}

namespace {

PebbleGame play_development(const Development& dev) {
  PebbleGame game(3, std::max<VertexId>(dev.num_vertices(), 1));
  for (EdgeId e = 0; e < dev.num_edges(); ++e) {
    game.try_insert(dev.edge(e).u, dev.edge(e).v, e);
  }
  return game;
}

// Vertex-set symmetry under alpha_1; alpha_2 = alpha_1 o alpha_1 follows.
bool vertex_set_symmetric(const std::vector<VertexId>& sorted_vertices) {
  for (VertexId v : sorted_vertices) {
    if (!std::binary_search(sorted_vertices.begin(), sorted_vertices.end(),
                            Development::act(1, v))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Cone3Result cone3_components(const ColoredGraph& graph) {
  const Development dev(graph);
  const PebbleGame game = play_development(dev);
  Cone3Result result;
  result.lifted_accepted = game.num_edges();
  for (const Component& c : game.components()) {
    if (!vertex_set_symmetric(c.vertices)) {
      result.asymmetric.push_back({c.vertices, c.edges});
      continue;
    }
    Component base;
    for (VertexId v : c.vertices) base.vertices.push_back(Development::base_vertex(v));
    sort_unique(base.vertices);
    base.edges = project(dev, {c.vertices, c.edges});
    result.components.push_back(std::move(base));
  }
  canonicalize(result.components);
  return result;
}

Cone3Decision cone3_decide(const ColoredGraph& graph, DecideMode mode) {
  Cone3Decision decision;
  const long target = 2L * graph.num_vertices() - 1;
  if (mode == DecideMode::kSpanning) {
    decision.is_cone_laman = static_cast<long>(cone3_extract(graph).size()) == target;
    decision.lifted_processed = 3 * static_cast<std::size_t>(graph.num_edges());
    return decision;
  }
  const Development dev(graph);
  if (graph.num_edges() != target) return decision;
  PebbleGame game(3, std::max<VertexId>(dev.num_vertices(), 1));
  for (EdgeId e = 0; e < dev.num_edges(); ++e) {
    ++decision.lifted_processed;
    if (!game.try_insert(dev.edge(e).u, dev.edge(e).v, e)) {
      decision.first_rejected_lift = e;
      return decision;
    }
  }
  decision.is_cone_laman = true;
  return decision;
}

EdgeSubset cone3_extract(const ColoredGraph& graph) {
  const Development dev(graph);
  PebbleGame game(3, std::max<VertexId>(dev.num_vertices(), 1));
  EdgeSubset kept;
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    const auto fiber = dev.edge_fiber(e);
    const LiftedEdge& first = dev.edge(fiber[0]);
    if (game.in_component_span(first.u, first.v)) continue;
    PebbleGame trial = game;
    bool all = true;
    for (EdgeId lifted : fiber) {
      if (!trial.try_insert(dev.edge(lifted).u, dev.edge(lifted).v, lifted)) {
        all = false;
        break;
      }
    }
    if (all) {
      game = std::move(trial);
      kept.push_back(e);
    }
  }
  return kept;
}

}  // namespace rigidkit
