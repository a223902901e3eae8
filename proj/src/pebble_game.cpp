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

#include "rigidkit/pebble_game.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace rigidkit {
namespace {

std::atomic<bool> g_auditing{false};
std::atomic<std::uint64_t> g_audits{0};

}  // namespace

void PebbleGame::set_auditing(bool on) { g_auditing = on; }
bool PebbleGame::auditing() { return g_auditing; }
std::uint64_t PebbleGame::audit_count() { return g_audits; }

PebbleGame::PebbleGame(int ell, VertexId num_vertices)
    : ell_(ell), n_(num_vertices) {
  if (ell < 1 || ell > 3) {
    throw std::invalid_argument("pebble game parameter ell must be 1, 2 or 3, got " +
                                std::to_string(ell));
  }
  if (num_vertices < 1) {
    throw std::invalid_argument("pebble game needs at least one vertex");
  }
  const std::size_t n = idx(n_);
  pebbles_.assign(n, 2);
  out_count_.assign(n, 0);
  out_.assign(n, {-1, -1});
  pair_.assign(n * n, false);
  stamp_.assign(n, 0);
  pred_edge_.assign(n, -1);
}

bool operator==(const PebbleGame& x, const PebbleGame& y) {
  return x.ell_ == y.ell_ && x.n_ == y.n_ && x.pebbles_ == y.pebbles_ &&
         x.out_count_ == y.out_count_ && x.out_ == y.out_ && x.edges_ == y.edges_ &&
         x.components_ == y.components_ && x.pair_ == y.pair_;
}

bool PebbleGame::in_component_span(VertexId i, VertexId j) const {
  if (i == j && ell_ >= 2) return true;
  return pair_[pair_slot(i, j)];
}

void PebbleGame::remove_out(VertexId v, std::int32_t edge) {
  auto& slots = out_[idx(v)];
  if (slots[0] == edge) {
    slots[0] = slots[1];
  } else if (slots[1] != edge) {
    throw std::logic_error("orientation bookkeeping lost an edge");
  }
  slots[1] = -1;
  --out_count_[idx(v)];
}

void PebbleGame::add_out(VertexId v, std::int32_t edge) {
  auto& slots = out_[idx(v)];
  slots[slots[0] == -1 ? 0 : 1] = edge;
  ++out_count_[idx(v)];
}

// Depth-first search along out-edges from `to` for a free pebble on any vertex
// other than `to` and `protect`; on success the path is reversed, moving the
// pebble to `to`.
bool PebbleGame::fetch_pebble(VertexId to, VertexId protect) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  stamp_[idx(to)] = epoch_;
  stamp_[idx(protect)] = epoch_;

  std::vector<std::pair<VertexId, int>> stack{{to, 0}};
  VertexId found = -1;
  while (!stack.empty() && found == -1) {
    auto& [v, slot] = stack.back();
    if (slot >= out_count_[idx(v)]) {
      stack.pop_back();
      continue;
    }
    const std::int32_t e = out_[idx(v)][static_cast<std::size_t>(slot++)];
    const VertexId w = edges_[static_cast<std::size_t>(e)].head;
    if (stamp_[idx(w)] == epoch_) continue;
    stamp_[idx(w)] = epoch_;
    pred_edge_[idx(w)] = e;
    if (pebbles_[idx(w)] > 0) {
      found = w;
    } else {
      stack.emplace_back(w, 0);
    }
  }
  if (found == -1) return false;

  --pebbles_[idx(found)];
  ++pebbles_[idx(to)];
  for (VertexId x = found; x != to;) {
    const std::int32_t e = pred_edge_[idx(x)];
    PebbleEdge& edge = edges_[static_cast<std::size_t>(e)];
    const VertexId u = edge.tail;
    remove_out(u, e);
    add_out(x, e);
    std::swap(edge.tail, edge.head);
    x = u;
  }
  return true;
}

void PebbleGame::gather_all(VertexId i, VertexId j) {
  for (bool progress = true; progress;) {
    progress = false;
    if (pebbles_[idx(i)] < 2 && fetch_pebble(i, j)) progress = true;
    if (j != i && pebbles_[idx(j)] < 2 && fetch_pebble(j, i)) progress = true;
  }
}

std::vector<char> PebbleGame::reach(VertexId i, VertexId j) const {
  std::vector<char> seen(idx(n_), 0);
  std::vector<VertexId> stack{i, j};
  seen[idx(i)] = seen[idx(j)] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (int s = 0; s < out_count_[idx(v)]; ++s) {
      const VertexId w = edges_[static_cast<std::size_t>(out_[idx(v)][static_cast<std::size_t>(s)])].head;
      if (!seen[idx(w)]) {
        seen[idx(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// With all reachable pebbles gathered on i and j and exactly ell of them
// there, the maximal tight set through ij is every vertex that cannot reach
// a free pebble sitting anywhere else.
std::vector<VertexId> PebbleGame::tight_closure(VertexId i, VertexId j) const {
  const std::size_t n = idx(n_);
  std::vector<std::uint32_t> in_offsets(n + 1, 0);
  for (const PebbleEdge& e : edges_) ++in_offsets[idx(e.head) + 1];
  for (std::size_t v = 0; v < n; ++v) in_offsets[v + 1] += in_offsets[v];
  std::vector<VertexId> in_tails(in_offsets[n]);
  {
    std::vector<std::uint32_t> fill(in_offsets.begin(), in_offsets.end() - 1);
    for (const PebbleEdge& e : edges_) in_tails[fill[idx(e.head)]++] = e.tail;
  }

  std::vector<char> escapes(n, 0);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n_; ++v) {
    if (v != i && v != j && pebbles_[idx(v)] > 0) {
      escapes[idx(v)] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (std::uint32_t k = in_offsets[idx(x)]; k < in_offsets[idx(x) + 1]; ++k) {
      const VertexId u = in_tails[k];
      if (!escapes[idx(u)]) {
        escapes[idx(u)] = 1;
        queue.push_back(u);
      }
    }
  }
  std::vector<VertexId> closure;
  for (VertexId v = 0; v < n_; ++v) {
    if (!escapes[idx(v)]) closure.push_back(v);
  }
  return closure;
}

void PebbleGame::register_component(std::vector<VertexId> vertices) {
  const std::size_t n = idx(n_);
  std::vector<char> in_new(n, 0);
  for (VertexId v : vertices) in_new[idx(v)] = 1;

  // Older components meeting the new one in enough vertices are subsumed:
  // one shared vertex suffices when ell <= 2, two are needed when ell = 3.
  const std::size_t merge_threshold = ell_ == 3 ? 2 : 1;
  std::vector<std::vector<VertexId>> groups;
  std::vector<char> grouped(n, 0);
  std::vector<std::vector<VertexId>> kept;
  for (auto& comp : components_) {
    std::size_t shared = 0;
    for (VertexId v : comp) shared += static_cast<std::size_t>(in_new[idx(v)]);
    if (shared < merge_threshold) {
      kept.push_back(std::move(comp));
      continue;
    }
    if (shared != comp.size()) {
      throw std::logic_error("component registry: overlapping tight sets failed to merge");
    }
    for (VertexId v : comp) grouped[idx(v)] = 1;
    groups.push_back(std::move(comp));
  }
  for (VertexId v : vertices) {
    if (!grouped[idx(v)]) groups.push_back({v});
  }

  // Pairs inside one group are already set; only cross pairs are new.
  for (const auto& g : groups) {
    for (VertexId v : g) pair_[pair_slot(v, v)] = true;
  }
  for (std::size_t a = 0; a < groups.size(); ++a) {
    for (std::size_t b = a + 1; b < groups.size(); ++b) {
      for (VertexId u : groups[a]) {
        for (VertexId v : groups[b]) {
          pair_[pair_slot(u, v)] = true;
          pair_[pair_slot(v, u)] = true;
        }
      }
    }
  }
  kept.push_back(std::move(vertices));
  components_ = std::move(kept);
}

bool PebbleGame::try_insert(VertexId i, VertexId j, EdgeId tag) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::out_of_range("pebble game vertex out of range");
  }
  if (in_component_span(i, j)) {
    if (auditing()) {
      const PebbleGame before = *this;
      audit();
      if (!(before == *this)) throw std::logic_error("rejection mutated the game");
    }
    return false;
  }

  const int needed = ell_ + 1;
  if (i == j) {
    while (pebbles_[idx(i)] < needed) {
      if (!fetch_pebble(i, i)) {
        throw std::logic_error("pebble game: span registry missed a dependent loop");
      }
    }
  } else {
    while (pebbles_[idx(i)] + pebbles_[idx(j)] < needed) {
      if (pebbles_[idx(i)] < 2 && fetch_pebble(i, j)) continue;
      if (pebbles_[idx(j)] < 2 && fetch_pebble(j, i)) continue;
      throw std::logic_error("pebble game: span registry missed a dependent edge");
    }
  }

  const bool from_i = pebbles_[idx(i)] > 0;
  const VertexId tail = from_i ? i : j;
  const VertexId head = from_i ? j : i;
  --pebbles_[idx(tail)];
  edges_.push_back({tail, head, tag});
  add_out(tail, static_cast<std::int32_t>(edges_.size() - 1));

  gather_all(i, j);
  const int held = pebbles_[idx(i)] + (i == j ? 0 : pebbles_[idx(j)]);
  if (held == ell_) register_component(tight_closure(i, j));

  if (auditing()) audit();
  return true;
}

CircuitReport PebbleGame::fundamental_circuit(VertexId i, VertexId j, EdgeId probe_tag) {
  if (!in_component_span(i, j)) {
    throw std::logic_error("fundamental_circuit: edge " + std::to_string(i) + "-" +
                           std::to_string(j) + " is independent");
  }
  CircuitReport report;
  if (i == j && ell_ >= 2) {
    // A loop alone already violates (2, ell) for ell >= 2.
    report.vertices = {i};
    report.edges = {probe_tag};
    return report;
  }
  gather_all(i, j);
  const std::vector<char> seen = reach(i, j);
  for (VertexId v = 0; v < n_; ++v) {
    if (seen[idx(v)]) report.vertices.push_back(v);
  }
  for (const PebbleEdge& e : edges_) {
    if (seen[idx(e.tail)] && seen[idx(e.head)]) report.edges.push_back(e.tag);
  }
  report.edges.push_back(probe_tag);
  std::sort(report.edges.begin(), report.edges.end());
  if (auditing()) audit();
  return report;
}

ComponentReport PebbleGame::components() const {
  ComponentReport report;
  std::vector<char> mark(idx(n_), 0);
  for (const auto& comp : components_) {
    Component c;
    c.vertices = comp;
    for (VertexId v : comp) mark[idx(v)] = 1;
    for (const PebbleEdge& e : edges_) {
      if (mark[idx(e.tail)] && mark[idx(e.head)]) c.edges.push_back(e.tag);
    }
    for (VertexId v : comp) mark[idx(v)] = 0;
    report.push_back(std::move(c));
  }
  canonicalize(report);
  return report;
}

void PebbleGame::audit() const {
  ++g_audits;
  auto fail = [](const std::string& what) {
    throw std::logic_error("pebble game audit: " + what);
  };
  const std::size_t n = idx(n_);
  std::size_t total = 0;
  std::vector<int> seen_out(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (pebbles_[v] < 0 || pebbles_[v] > 2) fail("pebble count out of range");
    if (pebbles_[v] + out_count_[v] != 2) {
      fail("pebbles + out-degree != 2 at vertex " + std::to_string(v));
    }
    total += static_cast<std::size_t>(pebbles_[v]);
    for (int s = 0; s < out_count_[v]; ++s) {
      const std::int32_t e = out_[v][static_cast<std::size_t>(s)];
      if (e < 0 || static_cast<std::size_t>(e) >= edges_.size() ||
          idx(edges_[static_cast<std::size_t>(e)].tail) != v) {
        fail("out-list entry does not match edge tail");
      }
    }
    for (int s = out_count_[v]; s < 2; ++s) {
      if (out_[v][static_cast<std::size_t>(s)] != -1) fail("stale out-list slot");
    }
  }
  for (const PebbleEdge& e : edges_) ++seen_out[idx(e.tail)];
  for (std::size_t v = 0; v < n; ++v) {
    if (seen_out[v] != out_count_[v]) fail("out-degree disagrees with edge tails");
  }
  if (total + edges_.size() != 2 * n) fail("total pebbles != 2n - m");

  std::vector<bool> expected(n * n, false);
  std::vector<char> mark(n, 0);
  for (const auto& comp : components_) {
    for (VertexId v : comp) mark[idx(v)] = 1;
    std::size_t spanned_edges = 0;
    for (const PebbleEdge& e : edges_) {
      if (mark[idx(e.tail)] && mark[idx(e.head)]) ++spanned_edges;
    }
    if (static_cast<long>(spanned_edges) != 2 * static_cast<long>(comp.size()) - ell_) {
      fail("registered component is not tight");
    }
    for (VertexId u : comp) {
      for (VertexId v : comp) expected[pair_slot(u, v)] = true;
    }
    for (VertexId v : comp) mark[idx(v)] = 0;
  }
  if (expected != pair_) fail("pair table disagrees with component registry");
}

}  // namespace rigidkit
