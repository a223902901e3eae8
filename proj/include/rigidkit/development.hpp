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

#ifndef RIGIDKIT_DEVELOPMENT_HPP_
#define RIGIDKIT_DEVELOPMENT_HPP_

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rigidkit/colored_graph.hpp"
#include "rigidkit/components.hpp"
#include "rigidkit/fixed_lattice.hpp"

namespace rigidkit {

struct LiftedEdge {
  VertexId u = 0;
  VertexId v = 0;
};

// A subgraph of the development: lifted vertex and edge ids, ascending.
struct LiftedSubgraph {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  friend bool operator==(const LiftedSubgraph&, const LiftedSubgraph&) = default;
};

/*
 * Threefold cover of a Z/3Z-colored graph. Base vertex i has lifts
 * (i, 0), (i, 1), (i, 2) with ids 3i + layer; base edge e = (i, j, c) has
 * lifts 3e + z joining (i, z) and (j, z + c mod 3).
 */
class Development {
 public:
  // Throws std::invalid_argument unless the graph is Z/3Z-colored.
  explicit Development(const ColoredGraph& base);

  const ColoredGraph& base() const { return base_; }
  VertexId num_vertices() const { return 3 * base_.num_vertices(); }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  const std::vector<LiftedEdge>& edges() const { return edges_; }
  const LiftedEdge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  static VertexId lift(VertexId base_vertex, int layer) { return 3 * base_vertex + layer; }
  static VertexId base_vertex(VertexId lifted) { return lifted / 3; }
  static int layer(VertexId lifted) { return lifted % 3; }
  static EdgeId base_edge(EdgeId lifted) { return lifted / 3; }

  std::array<VertexId, 3> vertex_fiber(VertexId base_vertex) const;
  std::array<EdgeId, 3> edge_fiber(EdgeId base_edge) const;

  // alpha_z: (i, g) -> (i, g + z). On edges: the lift of the same base edge
  // starting z layers higher.
  static VertexId act(int z, VertexId lifted);
  EdgeId act_on_edge(int z, EdgeId lifted) const;

  // Writes the lifted graph as an uncolored Graphviz graph.
  void write_dot(std::ostream& out) const;
  // The lifted graph as a Z/3Z-colored graph with every color zero.
  ColoredGraph as_colored_graph() const;

 private:
  ColoredGraph base_;
  std::vector<LiftedEdge> edges_;
};

Development develop(const ColoredGraph& graph);

// Base edges whose fiber meets the lifted subgraph, ascending.
EdgeSubset project(const Development& dev, const LiftedSubgraph& lifted);

// Closure under alpha_1 and alpha_2.
LiftedSubgraph orbit(const Development& dev, const LiftedSubgraph& lifted);
bool is_symmetric(const Development& dev, const LiftedSubgraph& lifted);

struct Cone3Result {
  // Symmetric (2,3)-components of the development, projected to the base:
  // base vertex set plus the base edges of the kept lifted edges.
  ComponentReport components;
  // Development components that are not symmetric; diagnostics only.
  std::vector<LiftedSubgraph> asymmetric;
  std::size_t lifted_accepted = 0;
};

// Components and decision run the (2,3) pebble game over every lifted edge,
// fibers in base edge order and layers 0, 1, 2 within a fiber.
Cone3Result cone3_components(const ColoredGraph& graph);

struct Cone3Decision {
  bool is_cone_laman = false;
  std::size_t lifted_processed = 0;
  std::optional<EdgeId> first_rejected_lift;
};

Cone3Decision cone3_decide(const ColoredGraph& graph,
                           DecideMode mode = DecideMode::kMinimal);

// Greedy over base edges: an edge is kept iff all three of its lifts can be
// added to the Laman-sparse lift of the edges kept so far.
EdgeSubset cone3_extract(const ColoredGraph& graph);

}  // namespace rigidkit

#endif  // RIGIDKIT_DEVELOPMENT_HPP_
