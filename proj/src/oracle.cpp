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

#include "rigidkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>

namespace rigidkit {
namespace {

// Spanning forest of a small edge list, grown by breadth-first search, with
// explicit parent pointers. Cycle images come from climbing those pointers.
class WalkForest {
 public:
  WalkForest(const ColoredGraph& graph, std::span<const EdgeId> edges)
      : graph_(graph),
        parent_edge_(static_cast<std::size_t>(graph.num_vertices()), -1),
        parent_(static_cast<std::size_t>(graph.num_vertices()), -1),
        seen_(static_cast<std::size_t>(graph.num_vertices()), 0) {
    std::map<VertexId, std::vector<EdgeId>> incident;
    for (EdgeId e : edges) {
      incident[graph.edge(e).tail].push_back(e);
      if (!graph.edge(e).is_loop()) incident[graph.edge(e).head].push_back(e);
    }
    for (const auto& [start, unused] : incident) {
      if (seen_[static_cast<std::size_t>(start)]) continue;
      seen_[static_cast<std::size_t>(start)] = 1;
      std::deque<VertexId> queue{start};
      while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : incident[v]) {
          const ColoredEdge& edge = graph.edge(e);
          const VertexId w = edge.tail == v ? edge.head : edge.tail;
          if (seen_[static_cast<std::size_t>(w)]) continue;
          seen_[static_cast<std::size_t>(w)] = 1;
          parent_[static_cast<std::size_t>(w)] = v;
          parent_edge_[static_cast<std::size_t>(w)] = e;
          tree_.push_back(e);
          queue.push_back(w);
        }
      }
    }
    std::sort(tree_.begin(), tree_.end());
  }

  bool is_tree_edge(EdgeId e) const { return std::binary_search(tree_.begin(), tree_.end(), e); }

  // Color sum walking from v up to the ancestor `top`.
  GroupElement climb(VertexId v, VertexId top) const {
    const Group& group = graph_.group();
    GroupElement sum = group.identity();
    while (v != top) {
      const EdgeId e = parent_edge_[static_cast<std::size_t>(v)];
      if (e < 0) throw std::invalid_argument("vertices are in different trees");
      const ColoredEdge& edge = graph_.edge(e);
      sum = edge.tail == v ? group.add(sum, edge.color) : group.subtract(sum, edge.color);
      v = parent_[static_cast<std::size_t>(v)];
    }
    return sum;
  }

  VertexId meet(VertexId i, VertexId j) const {
    std::vector<VertexId> up;
    for (VertexId v = i; v >= 0; v = parent_[static_cast<std::size_t>(v)]) up.push_back(v);
    std::sort(up.begin(), up.end());
    for (VertexId v = j; v >= 0; v = parent_[static_cast<std::size_t>(v)]) {
      if (std::binary_search(up.begin(), up.end(), v)) return v;
    }
    throw std::invalid_argument("vertices are in different trees");
  }

  // Probe tail to head along the probe, then back through the forest.
  GroupElement cycle_image(EdgeId probe) const {
    const ColoredEdge& edge = graph_.edge(probe);
    const VertexId top = meet(edge.tail, edge.head);
    const Group& group = graph_.group();
    return group.subtract(group.add(edge.color, climb(edge.head, top)),
                          climb(edge.tail, top));
  }

 private:
  const ColoredGraph& graph_;
  std::vector<EdgeId> parent_edge_;
  std::vector<VertexId> parent_;
  std::vector<char> seen_;
  std::vector<EdgeId> tree_;
};

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kLaman:
      return "laman";
    case Family::kTwoTwo:
      return "two-two";
    case Family::kTwoOne:
      return "two-one";
    case Family::kRoss:
      return "ross";
    case Family::kConeLaman:
      return "cone-laman";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kLaman, Family::kTwoTwo, Family::kTwoOne, Family::kRoss,
                   Family::kConeLaman}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

int oracle_bound() {
  const char* raw = std::getenv("RIGIDKIT_ORACLE_BOUND");
  if (raw == nullptr) return kDefaultOracleBound;
  const std::string_view text(raw);
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 0 ||
      value > kMaxOracleBound) {
    return kDefaultOracleBound;
  }
  return value;
}

OracleBoundExceeded::OracleBoundExceeded(EdgeId edges, int bound)
    : std::runtime_error("oracle bound exceeded: " + std::to_string(edges) +
                         " edges, bound " + std::to_string(bound)),
      edges_(edges),
      bound_(bound) {}

EdgeMask to_mask(std::span<const EdgeId> subset) {
  EdgeMask mask = 0;
  for (EdgeId e : subset) mask |= EdgeMask{1} << e;
  return mask;
}

EdgeSubset from_mask(EdgeMask mask) {
  EdgeSubset out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

SubsetOracle::SubsetOracle(const ColoredGraph& graph, Family family, int bound)
    : graph_(graph), family_(family) {
  if (bound < 0) bound = oracle_bound();
  bound = std::min(bound, kMaxOracleBound);
  const EdgeId m = graph.num_edges();
  if (m > bound) throw OracleBoundExceeded(m, bound);
  full_ = m == 0 ? 0 : static_cast<EdgeMask>((std::uint64_t{1} << m) - 1);
  const std::size_t count = std::size_t{1} << m;

  std::map<VertexId, int> local;
  for (const ColoredEdge& e : graph.edges()) {
    local.emplace(e.tail, 0);
    local.emplace(e.head, 0);
  }
  for (auto& [vertex, index] : local) {
    index = static_cast<int>(local_to_vertex_.size());
    local_to_vertex_.push_back(vertex);
  }

  vertex_mask_.assign(count, 0);
  passes_.assign(count, 1);
  sparse_.assign(count, 1);
  EdgeSubset members;
  for (std::size_t s = 1; s < count; ++s) {
    const EdgeId low = std::countr_zero(s);
    const ColoredEdge& e = graph.edge(low);
    vertex_mask_[s] = vertex_mask_[s & (s - 1)] | (std::uint64_t{1} << local[e.tail]) |
                      (std::uint64_t{1} << local[e.head]);

    const int n_prime = std::popcount(vertex_mask_[s]);
    const int m_prime = std::popcount(s);
    bool ok;
    switch (family) {
      case Family::kLaman:
        ok = m_prime <= 2 * n_prime - 3;
        break;
      case Family::kTwoTwo:
        ok = m_prime <= 2 * n_prime - 2;
        break;
      case Family::kTwoOne:
        ok = m_prime <= 2 * n_prime - 1;
        break;
      default: {
        const int ceiling = family == Family::kRoss ? 2 * n_prime - 2 : 2 * n_prime - 1;
        if (m_prime > ceiling) {
          ok = false;
        } else if (m_prime <= 2 * n_prime - 3) {
          ok = true;
        } else {
          members = from_mask(static_cast<EdgeMask>(s));
          ok = !oracle_image_trivial(graph, members);
        }
      }
    }
    passes_[s] = ok ? 1 : 0;
    bool sparse = ok;
    for (EdgeMask rest = static_cast<EdgeMask>(s); sparse && rest != 0; rest &= rest - 1) {
      sparse = sparse_[s & ~(std::size_t{1} << std::countr_zero(rest))] != 0;
    }
    sparse_[s] = sparse ? 1 : 0;
    if (sparse) rank_ = std::max(rank_, m_prime);
  }
}

bool SubsetOracle::passes_count(EdgeMask subset) const { return passes_[subset] != 0; }
bool SubsetOracle::is_sparse(EdgeMask subset) const { return sparse_[subset] != 0; }

int SubsetOracle::num_spanned(EdgeMask subset) const {
  return std::popcount(vertex_mask_[subset]);
}

int SubsetOracle::tight_edges(int spanned_vertices) const {
  switch (family_) {
    case Family::kLaman:
      return 2 * spanned_vertices - 3;
    case Family::kTwoTwo:
    case Family::kRoss:
      return 2 * spanned_vertices - 2;
    case Family::kTwoOne:
    case Family::kConeLaman:
      return 2 * spanned_vertices - 1;
  }
  return 0;
}

bool SubsetOracle::is_tight(EdgeMask subset) const {
  return is_sparse(subset) && std::popcount(subset) == tight_edges(num_spanned(subset));
}

bool SubsetOracle::is_circuit(EdgeMask subset) const {
  if (subset == 0 || is_sparse(subset)) return false;
  for (EdgeMask rest = subset; rest != 0; rest &= rest - 1) {
    if (!is_sparse(subset & ~(EdgeMask{1} << std::countr_zero(rest)))) return false;
  }
  return true;
}

std::vector<EdgeMask> SubsetOracle::bases() const {
  std::vector<EdgeMask> out;
  for (std::size_t s = 0; s <= full_; ++s) {
    if (sparse_[s] && std::popcount(s) == rank_) out.push_back(static_cast<EdgeMask>(s));
  }
  return out;
}

std::vector<EdgeMask> SubsetOracle::circuits() const {
  std::vector<EdgeMask> out;
  for (std::size_t s = 1; s <= full_; ++s) {
    if (is_circuit(static_cast<EdgeMask>(s))) out.push_back(static_cast<EdgeMask>(s));
  }
  return out;
}

EdgeMask SubsetOracle::fundamental_circuit(EdgeMask basis, EdgeId probe) const {
  const EdgeMask bit = EdgeMask{1} << probe;
  const EdgeMask pool = basis & ~bit;
  // Walk the submasks of the pool; the circuit is the one containing the probe.
  for (EdgeMask sub = pool;; sub = (sub - 1) & pool) {
    if (is_circuit(sub | bit)) return sub | bit;
    if (sub == 0) break;
  }
  throw std::logic_error("probe is independent of the basis");
}

EdgeSubset SubsetOracle::greedy_basis() const {
  EdgeMask kept = 0;
  for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
    if (is_sparse(kept | (EdgeMask{1} << e))) kept |= EdgeMask{1} << e;
  }
  return from_mask(kept);
}

ComponentReport SubsetOracle::components() const {
  std::map<std::uint64_t, EdgeMask> witness;
  for (std::size_t s = 1; s <= full_; ++s) {
    if (is_tight(static_cast<EdgeMask>(s))) {
      witness.emplace(vertex_mask_[s], static_cast<EdgeMask>(s));
    }
  }
  ComponentReport report;
  for (const auto& [vertices, edges] : witness) {
    bool maximal = true;
    for (const auto& [other, unused] : witness) {
      if (other != vertices && (other & vertices) == vertices) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    Component c;
    for (std::uint64_t rest = vertices; rest != 0; rest &= rest - 1) {
      c.vertices.push_back(local_to_vertex_[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    c.edges = from_mask(edges);
    report.push_back(std::move(c));
  }
  canonicalize(report);
  return report;
}

bool oracle_is_sparse(const ColoredGraph& graph, Family family) {
  const SubsetOracle oracle(graph, family);
  return oracle.is_sparse(oracle.full());
}

bool oracle_is_tight(const ColoredGraph& graph, Family family) {
  const SubsetOracle oracle(graph, family);
  const int n = graph.num_vertices();
  int target = 2 * n - 1;
  if (family == Family::kLaman) target = 2 * n - 3;
  if (family == Family::kTwoTwo || family == Family::kRoss) target = 2 * n - 2;
  return oracle.is_sparse(oracle.full()) && graph.num_edges() == target;
}

int oracle_max_independent(const ColoredGraph& graph, Family family) {
  return SubsetOracle(graph, family).rank();
}

ComponentReport oracle_components(const ColoredGraph& graph, Family family) {
  return SubsetOracle(graph, family).components();
}

bool oracle_image_trivial(const ColoredGraph& graph, std::span<const EdgeId> subset) {
  const WalkForest forest(graph, subset);
  for (EdgeId e : subset) {
    if (forest.is_tree_edge(e)) continue;
    if (!graph.group().is_identity(forest.cycle_image(e))) return false;
  }
  return true;
}

GroupElement oracle_cycle_image(const ColoredGraph& graph, std::span<const EdgeId> forest,
                                EdgeId probe) {
  const WalkForest walk(graph, forest);
  return walk.cycle_image(probe);
}

}  // namespace rigidkit
