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

#include "rigidkit/gamma_image.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace rigidkit {
namespace {

// The forest passes are dominated by memory latency on large random graphs;
// touching addresses a few iterations early hides part of it.
constexpr std::size_t kLookahead = 8;

inline void prefetch(const void* address) {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_prefetch(address);
#else
  (void)address;
#endif
}

// Incidence lists in CSR form; loops are omitted since they never join trees.
// Arcs stay small; the color and direction are read from the edge only when
// an arc discovers a vertex.
struct Arc {
  VertexId to;
  EdgeId edge;
};

struct Incidence {
  std::vector<std::uint32_t> offsets;
  std::vector<Arc> arcs;
};

Incidence build_incidence(const ColoredGraph& graph) {
  const std::size_t n = static_cast<std::size_t>(graph.num_vertices());
  Incidence inc;
  inc.offsets.assign(n + 1, 0);
  const std::span<const ColoredEdge> edges = graph.edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    if (id + kLookahead < edges.size()) {
      prefetch(&inc.offsets[static_cast<std::size_t>(edges[id + kLookahead].tail) + 1]);
      prefetch(&inc.offsets[static_cast<std::size_t>(edges[id + kLookahead].head) + 1]);
    }
    const ColoredEdge& e = edges[id];
    if (e.is_loop()) continue;
    ++inc.offsets[static_cast<std::size_t>(e.tail) + 1];
    ++inc.offsets[static_cast<std::size_t>(e.head) + 1];
  }
  for (std::size_t v = 0; v < n; ++v) inc.offsets[v + 1] += inc.offsets[v];
  inc.arcs.resize(inc.offsets[n]);
  std::vector<std::uint32_t> fill(inc.offsets.begin(), inc.offsets.end() - 1);
  const std::size_t m = static_cast<std::size_t>(graph.num_edges());
  for (EdgeId id = 0; id < graph.num_edges(); ++id) {
    if (static_cast<std::size_t>(id) + 2 * kLookahead < m) {
      const ColoredEdge& far = graph.edge(id + static_cast<EdgeId>(2 * kLookahead));
      prefetch(&fill[static_cast<std::size_t>(far.tail)]);
      prefetch(&fill[static_cast<std::size_t>(far.head)]);
    }
    if (static_cast<std::size_t>(id) + kLookahead < m) {
      const ColoredEdge& near = graph.edge(id + static_cast<EdgeId>(kLookahead));
      prefetch(&inc.arcs[fill[static_cast<std::size_t>(near.tail)]]);
      prefetch(&inc.arcs[fill[static_cast<std::size_t>(near.head)]]);
    }
    const ColoredEdge& e = graph.edge(id);
    if (e.is_loop()) continue;
    inc.arcs[fill[static_cast<std::size_t>(e.tail)]++] = {e.head, id};
    inc.arcs[fill[static_cast<std::size_t>(e.head)]++] = {e.tail, id};
  }
  return inc;
}

std::int64_t euler_key(std::int32_t depth, VertexId v) {
  return (static_cast<std::int64_t>(depth) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

ForestIndex::ForestIndex(const ColoredGraph& graph, NeighborOrder order)
    : group_(graph.group()) {
  const std::size_t n = static_cast<std::size_t>(graph.num_vertices());
  nodes_.assign(n, Node{});
  links_.assign(n, Link{});
  tree_edge_.assign(static_cast<std::size_t>(graph.num_edges()), false);

  const Incidence inc = build_incidence(graph);

  // Breadth-first search. `queue` doubles as the discovery order, and the
  // children of queue[q] are exactly queue[children[q].first .. children[q].second).
  // `owner` is a compact copy of the roots for the visited test.
  std::vector<VertexId> queue;
  queue.reserve(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> children;
  children.reserve(n);
  std::vector<VertexId> owner(n, -1);
  std::vector<std::uint32_t> root_position;
  for (VertexId start = 0; start < graph.num_vertices(); ++start) {
    if (owner[index(start)] != -1) continue;
    roots_.push_back(start);
    owner[index(start)] = start;
    nodes_[index(start)].root = start;
    std::size_t head = queue.size();
    root_position.push_back(static_cast<std::uint32_t>(head));
    queue.push_back(start);
    while (head < queue.size()) {
      if (head + kLookahead < queue.size()) {
        const VertexId ahead = queue[head + kLookahead];
        prefetch(&inc.arcs[inc.offsets[index(ahead)]]);
        prefetch(&nodes_[index(ahead)]);
      }
      const VertexId u = queue[head++];
      const auto first_child = static_cast<std::uint32_t>(queue.size());
      const Node& from = nodes_[index(u)];
      const std::uint32_t lo = inc.offsets[index(u)];
      const std::uint32_t hi = inc.offsets[index(u) + 1];
      for (std::uint32_t k = lo; k < hi; ++k) prefetch(&owner[index(inc.arcs[k].to)]);
      for (std::uint32_t k = 0; k < hi - lo; ++k) {
        const Arc& arc = inc.arcs[order == NeighborOrder::kEdgeList ? lo + k : hi - 1 - k];
        VertexId& seen = owner[index(arc.to)];
        if (seen != -1) continue;
        seen = start;
        const ColoredEdge& e = graph.edge(arc.edge);
        const bool forward = e.tail == u;
        Node& to = nodes_[index(arc.to)];
        to.root = start;
        to.depth = from.depth + 1;
        to.sigma = forward ? group_.add(from.sigma, e.color) : group_.subtract(from.sigma, e.color);
        links_[index(arc.to)] = {u, arc.edge, !forward};
        tree_edge_[static_cast<std::size_t>(arc.edge)] = true;
        queue.push_back(arc.to);
      }
      children.emplace_back(first_child, static_cast<std::uint32_t>(queue.size()));
    }
  }

  // Iterative Euler tour per tree over queue positions.
  std::vector<std::int64_t> keys;
  keys.reserve(n == 0 ? 0 : 2 * n - 1);
  struct Frame {
    std::uint32_t position;
    std::uint32_t next;
    std::int64_t key;
  };
  std::vector<Frame> stack;
  auto enter = [&](std::uint32_t q) {
    Node& node = nodes_[index(queue[q])];
    node.first_visit = static_cast<std::uint32_t>(keys.size());
    const std::int64_t key = euler_key(node.depth, queue[q]);
    keys.push_back(key);
    stack.push_back({q, children[q].first, key});
  };
  for (std::uint32_t q : root_position) {
    enter(q);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == children[top.position].second) {
        stack.pop_back();
        if (!stack.empty()) keys.push_back(stack.back().key);
        continue;
      }
      enter(top.next++);
    }
  }
  euler_keys_ = RangeMinIndex(std::move(keys));
}

std::optional<VertexId> ForestIndex::parent(VertexId v) const {
  const VertexId p = links_[index(v)].parent;
  if (p == -1) return std::nullopt;
  return p;
}

bool ForestIndex::parent_edge_points_to_root(VertexId v) const {
  return links_[index(v)].points_to_root;
}

VertexId ForestIndex::lca(VertexId i, VertexId j) const {
  const Node& a = nodes_[index(i)];
  const Node& b = nodes_[index(j)];
  if (a.root != b.root) {
    throw std::invalid_argument("lca query across different trees: " +
                                std::to_string(i) + ", " + std::to_string(j));
  }
  const auto [first, last] = std::minmax(a.first_visit, b.first_visit);
  const std::int64_t key = euler_keys_.value(euler_keys_.argmin(first, last));
  return static_cast<VertexId>(static_cast<std::uint32_t>(key));
}

GroupElement ForestIndex::fundamental_cycle_image(const ColoredEdge& edge) const {
  const VertexId a = lca(edge.tail, edge.head);
  const GroupElement down_to_tail = group_.subtract(sigma(edge.tail), sigma(a));
  const GroupElement down_to_head = group_.subtract(sigma(edge.head), sigma(a));
  return group_.subtract(group_.add(down_to_tail, edge.color), down_to_head);
}

std::optional<EdgeId> ForestIndex::first_nontrivial_cycle(const ColoredGraph& graph) const {
  const std::size_t m = static_cast<std::size_t>(graph.num_edges());
  for (std::size_t id = 0; id < m; ++id) {
    // Endpoint records two strides ahead, their Euler blocks one stride ahead.
    if (id + 2 * kLookahead < m) {
      const ColoredEdge& far = graph.edge(static_cast<EdgeId>(id + 2 * kLookahead));
      prefetch(&nodes_[index(far.tail)]);
      prefetch(&nodes_[index(far.head)]);
    }
    if (id + kLookahead < m) {
      const ColoredEdge& near = graph.edge(static_cast<EdgeId>(id + kLookahead));
      prefetch(euler_keys_.block_address(nodes_[index(near.tail)].first_visit));
      prefetch(euler_keys_.block_address(nodes_[index(near.head)].first_visit));
    }
    if (tree_edge_[id]) continue;
    const EdgeId edge = static_cast<EdgeId>(id);
    if (!group_.is_identity(fundamental_cycle_image(graph.edge(edge)))) return edge;
  }
  return std::nullopt;
}

bool is_trivial_image(const ColoredGraph& graph, NeighborOrder order) {
  return !ForestIndex(graph, order).first_nontrivial_cycle(graph).has_value();
}

bool is_trivial_image(const ColoredGraph& graph, std::span<const EdgeId> subset) {
  // First-appearance relabeling keeps the cost proportional to the subset.
  std::unordered_map<VertexId, VertexId> local;
  local.reserve(subset.size() * 2);
  auto relabel = [&](VertexId v) {
    auto [it, inserted] = local.try_emplace(v, static_cast<VertexId>(local.size()));
    return it->second;
  };
  std::vector<ColoredEdge> edges;
  edges.reserve(subset.size());
  for (EdgeId id : subset) {
    const ColoredEdge& e = graph.edge(id);
    const VertexId t = relabel(e.tail);
    const VertexId h = relabel(e.head);
    edges.push_back({t, h, e.color});
  }
  const VertexId n = static_cast<VertexId>(local.size());
  return is_trivial_image(ColoredGraph(graph.group(), n, std::move(edges)));
}

std::vector<ComponentImage> component_images(const ColoredGraph& graph) {
  const ForestIndex forest(graph);
  std::vector<ComponentImage> out;
  std::unordered_map<VertexId, std::size_t> slot;
  for (VertexId r : forest.roots()) {
    slot.emplace(r, out.size());
    out.emplace_back();
  }
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    out[slot.at(forest.root(v))].vertices.push_back(v);
  }
  for (EdgeId id = 0; id < graph.num_edges(); ++id) {
    const ColoredEdge& e = graph.edge(id);
    ComponentImage& c = out[slot.at(forest.root(e.tail))];
    c.edges.push_back(id);
    if (!forest.is_tree_edge(id) &&
        !graph.group().is_identity(forest.fundamental_cycle_image(e))) {
      c.trivial = false;
    }
  }
  return out;
}

}  // namespace rigidkit
