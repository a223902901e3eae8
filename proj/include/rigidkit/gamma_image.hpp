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

#ifndef RIGIDKIT_GAMMA_IMAGE_HPP_
#define RIGIDKIT_GAMMA_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rigidkit/colored_graph.hpp"
#include "rigidkit/range_min.hpp"

namespace rigidkit {

// Order in which breadth-first search scans a vertex's incident edges.
enum class NeighborOrder { kEdgeList, kReversed };

/*
 * Rooted spanning forest of a colored graph with per-vertex potentials and a
 * constant-time least-common-ancestor index.
 *
 * One tree per connected component, grown by breadth-first search from the
 * lowest-index vertex of the component. The potential of a vertex is the
 * signed color sum along the tree path from its root: an edge traversed from
 * tail to head contributes +color, against its direction -color.
 *
 * The image of the fundamental cycle of a non-tree edge (i, j, c), walked so
 * that the edge goes from i to j, is
 *   (sigma(i) - sigma(a)) + c - (sigma(j) - sigma(a)),  a = lca(i, j).
 * The LCA terms cancel algebraically; they are kept so each query also
 * checks that i and j share a tree.
 */
class ForestIndex {
 public:
  explicit ForestIndex(const ColoredGraph& graph,
                       NeighborOrder order = NeighborOrder::kEdgeList);

  const Group& group() const { return group_; }
  VertexId num_vertices() const { return static_cast<VertexId>(nodes_.size()); }

  VertexId root(VertexId v) const { return nodes_[index(v)].root; }
  std::optional<VertexId> parent(VertexId v) const;
  // -1 for roots.
  EdgeId parent_edge(VertexId v) const { return links_[index(v)].parent_edge; }
  // True when the tree edge to the parent is stored pointing toward the root.
  bool parent_edge_points_to_root(VertexId v) const;
  std::int32_t depth(VertexId v) const { return nodes_[index(v)].depth; }
  const GroupElement& sigma(VertexId v) const { return nodes_[index(v)].sigma; }
  bool is_tree_edge(EdgeId e) const { return tree_edge_[static_cast<std::size_t>(e)]; }

  std::span<const VertexId> roots() const { return roots_; }

  // Throws std::invalid_argument when i and j lie in different trees.
  VertexId lca(VertexId i, VertexId j) const;

  // Throws std::invalid_argument when the endpoints lie in different trees.
  GroupElement fundamental_cycle_image(const ColoredEdge& edge) const;

  // First non-tree edge of `graph` (the graph this index was built from)
  // whose fundamental cycle has a non-identity image.
  std::optional<EdgeId> first_nontrivial_cycle(const ColoredGraph& graph) const;

 private:
  static std::size_t index(VertexId v) { return static_cast<std::size_t>(v); }

  // What a cycle query reads for one endpoint; one cache line.
  struct alignas(32) Node {
    VertexId root = -1;
    std::int32_t depth = 0;
    std::uint32_t first_visit = 0;
    GroupElement sigma;
  };
  struct Link {
    VertexId parent = -1;
    EdgeId parent_edge = -1;
    bool points_to_root = false;
  };

  Group group_;
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<bool> tree_edge_;
  std::vector<VertexId> roots_;
  // Euler tour as depth * 2^32 + vertex, so the minimum names the ancestor.
  RangeMinIndex euler_keys_;
};

// True iff every cycle of the graph maps to the identity. Linear time.
bool is_trivial_image(const ColoredGraph& graph,
                      NeighborOrder order = NeighborOrder::kEdgeList);

// Same question for the subgraph formed by `subset`, in O(n' + m') time
// independent of the size of the parent graph.
bool is_trivial_image(const ColoredGraph& graph, std::span<const EdgeId> subset);

struct ComponentImage {
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending
  bool trivial = true;
};

// Per connected component (isolated vertices included) triviality.
std::vector<ComponentImage> component_images(const ColoredGraph& graph);

}  // namespace rigidkit

#endif  // RIGIDKIT_GAMMA_IMAGE_HPP_
