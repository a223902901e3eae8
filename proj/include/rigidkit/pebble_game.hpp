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

#ifndef RIGIDKIT_PEBBLE_GAME_HPP_
#define RIGIDKIT_PEBBLE_GAME_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rigidkit/colored_graph.hpp"
#include "rigidkit/components.hpp"

namespace rigidkit {

// An accepted edge in its current orientation. `tag` is the caller's id.
struct PebbleEdge {
  VertexId tail = 0;
  VertexId head = 0;
  EdgeId tag = 0;

  friend bool operator==(const PebbleEdge&, const PebbleEdge&) = default;
};

struct CircuitReport {
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending tags, probe included
};

/*
 * The (2, ell) pebble game for ell in {1, 2, 3}.
 *
 * Every vertex starts with two pebbles. An accepted edge is oriented away
 * from the endpoint whose pebble it consumes, so pebbles(v) + out_degree(v)
 * is always 2 and the accepted edges are always (2, ell)-sparse. Pebbles are
 * moved by reversing a directed path from the requesting vertex to a vertex
 * holding a free pebble; the probe's own endpoints are never robbed.
 *
 * Maximal tight vertex sets (components) are kept in a registry plus an
 * n x n pair table, so span queries are O(1). Components are vertex-disjoint
 * for ell <= 2 and share at most one vertex for ell = 3.
 *
 * Loops: a loop is independent only for ell = 1 and only at a vertex outside
 * every component. For ell >= 2 every loop is in the span.
 */
class PebbleGame {
 public:
  // Throws std::invalid_argument unless 1 <= ell <= 3 and num_vertices >= 1.
  PebbleGame(int ell, VertexId num_vertices);

  int ell() const { return ell_; }
  VertexId num_vertices() const { return n_; }
  int pebbles(VertexId v) const { return pebbles_[idx(v)]; }
  int out_degree(VertexId v) const { return out_count_[idx(v)]; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const PebbleEdge> edges() const { return edges_; }

  // O(1): true iff i and j (or i, for a loop) lie inside one registered
  // component, i.e. the edge ij is dependent on the accepted edges.
  bool in_component_span(VertexId i, VertexId j) const;

  // Accepts ij iff the accepted edges plus ij stay (2, ell)-sparse. On
  // rejection nothing changes.
  bool try_insert(VertexId i, VertexId j, EdgeId tag);
  bool try_insert(VertexId i, VertexId j) {
    return try_insert(i, j, static_cast<EdgeId>(edges_.size()));
  }

  // Unique (2, ell)-circuit inside the accepted edges plus the probe ij.
  // Re-orients edges (pebbles move, the edge set does not). Throws
  // std::logic_error when ij is independent.
  CircuitReport fundamental_circuit(VertexId i, VertexId j, EdgeId probe_tag);

  // Maximal tight sets with the accepted edges they span, canonical order.
  ComponentReport components() const;
  const std::vector<std::vector<VertexId>>& component_vertex_sets() const {
    return components_;
  }

  // Checks the pebble/out-degree balance, orientation bookkeeping, component
  // tightness and pair-table consistency. Throws std::logic_error.
  void audit() const;

  // When on, every mutating call audits itself and every rejection is
  // compared against a snapshot. Process-wide; meant for test suites.
  static void set_auditing(bool on);
  static bool auditing();
  static std::uint64_t audit_count();

  // Compares observable state: pebbles, orientation, components, pair table.
  friend bool operator==(const PebbleGame& x, const PebbleGame& y);

 private:
  static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }
  std::size_t pair_slot(VertexId u, VertexId v) const {
    return idx(u) * idx(n_) + idx(v);
  }

  bool fetch_pebble(VertexId to, VertexId protect);
  void gather_all(VertexId i, VertexId j);
  std::vector<char> reach(VertexId i, VertexId j) const;
  std::vector<VertexId> tight_closure(VertexId i, VertexId j) const;
  void register_component(std::vector<VertexId> vertices);
  void remove_out(VertexId v, std::int32_t edge);
  void add_out(VertexId v, std::int32_t edge);

  int ell_;
  VertexId n_;
  std::vector<std::int8_t> pebbles_;
  std::vector<std::int8_t> out_count_;
  std::vector<std::array<std::int32_t, 2>> out_;  // internal edge ids
  std::vector<PebbleEdge> edges_;
  std::vector<std::vector<VertexId>> components_;  // each ascending
  std::vector<bool> pair_;

  // Search scratch; not part of the observable state.
  mutable std::vector<std::uint32_t> stamp_;
  mutable std::uint32_t epoch_ = 0;
  std::vector<std::int32_t> pred_edge_;
};

}  // namespace rigidkit

#endif  // RIGIDKIT_PEBBLE_GAME_HPP_
