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

#ifndef RIGIDKIT_COLORED_GRAPH_HPP_
#define RIGIDKIT_COLORED_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidkit/group.hpp"

namespace rigidkit {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Ordered list of edge ids. Algorithms that return kept edges preserve the
// processing order; set-like inputs may be in any order but must not repeat.
using EdgeSubset = std::vector<EdgeId>;

struct ColoredEdge {
  VertexId tail = 0;
  VertexId head = 0;
  GroupElement color;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

// Directed multigraph with one group element per edge. Loops and parallel
// edges are legal. Edge order is significant: every greedy algorithm in the
// library processes edges in this order.
class ColoredGraph {
 public:
  ColoredGraph(Group group, VertexId num_vertices,
               std::vector<ColoredEdge> edges = {});

  const Group& group() const { return group_; }
  VertexId num_vertices() const { return num_vertices_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  std::span<const ColoredEdge> edges() const { return edges_; }
  const ColoredEdge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  EdgeId add_edge(VertexId tail, VertexId head, GroupElement color);

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  Group group_;
  VertexId num_vertices_;
  std::vector<ColoredEdge> edges_;
};

// Raised by validate(): names the first offending edge.
class InvalidGraph : public std::invalid_argument {
 public:
  InvalidGraph(EdgeId edge, const std::string& reason);
  EdgeId edge() const { return edge_; }
  const std::string& reason() const { return reason_; }

 private:
  EdgeId edge_;
  std::string reason_;
};

// Throws InvalidGraph for an endpoint >= n ("endpoint out of range"), an
// unreduced Z/kZ residue ("color not reduced"), or a Z^2 coordinate beyond
// kMaxLatticeCoordinate ("color out of range").
void validate(const ColoredGraph& graph);

struct SpanInfo {
  VertexId num_vertices = 0;  // n'
  EdgeId num_edges = 0;       // m'
  std::vector<VertexId> vertices;  // ascending
};

// Counting data of the subgraph formed by `subset`, recomputed on every call.
SpanInfo spanned(const ColoredGraph& graph, std::span<const EdgeId> subset);

struct Subgraph {
  ColoredGraph graph;
  std::vector<VertexId> vertex_to_parent;  // new id -> parent id, ascending
  std::vector<EdgeId> edge_to_parent;      // new id -> parent id
};

// Colored subgraph on the spanned vertices, keeping the subset's edge order.
// Vertices are renumbered in ascending order of their parent ids.
Subgraph subgraph(const ColoredGraph& graph, std::span<const EdgeId> subset);

// Edge ids 0..m-1.
EdgeSubset all_edges(const ColoredGraph& graph);

}  // namespace rigidkit

#endif  // RIGIDKIT_COLORED_GRAPH_HPP_
