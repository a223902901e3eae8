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

#ifndef RIGIDKIT_ORACLE_HPP_
#define RIGIDKIT_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "rigidkit/colored_graph.hpp"
#include "rigidkit/components.hpp"

namespace rigidkit {

// Brute-force checkers straight from the counting definitions. Nothing here
// touches the pebble games or the forest index.

enum class Family { kLaman, kTwoTwo, kTwoOne, kRoss, kConeLaman };

std::string_view to_string(Family family);
// Accepts the names produced by to_string; nullopt otherwise.
std::optional<Family> parse_family(std::string_view name);

inline constexpr int kDefaultOracleBound = 20;
inline constexpr int kMaxOracleBound = 24;

// RIGIDKIT_ORACLE_BOUND when set to an integer in [0, kMaxOracleBound],
// kDefaultOracleBound otherwise.
int oracle_bound();

class OracleBoundExceeded : public std::runtime_error {
 public:
  OracleBoundExceeded(EdgeId edges, int bound);
  EdgeId edges() const { return edges_; }
  int bound() const { return bound_; }

 private:
  EdgeId edges_;
  int bound_;
};

using EdgeMask = std::uint32_t;

EdgeMask to_mask(std::span<const EdgeId> subset);
EdgeSubset from_mask(EdgeMask mask);

/*
 * Sparsity of every edge subset of one graph, computed once. A subset passes
 * the family's count when m' <= 2n' - l, with l = 3 on trivial-image subsets
 * for the colored families; it is sparse when it and all its subsets pass.
 */
class SubsetOracle {
 public:
  // bound < 0 means oracle_bound(). Throws OracleBoundExceeded when the graph
  // has more edges than the bound.
  SubsetOracle(const ColoredGraph& graph, Family family, int bound = -1);

  const ColoredGraph& graph() const { return graph_; }
  Family family() const { return family_; }
  EdgeMask full() const { return full_; }

  bool passes_count(EdgeMask subset) const;
  bool is_sparse(EdgeMask subset) const;
  bool is_tight(EdgeMask subset) const;
  bool is_circuit(EdgeMask subset) const;
  int num_spanned(EdgeMask subset) const;

  int rank() const { return rank_; }
  std::vector<EdgeMask> bases() const;
  std::vector<EdgeMask> circuits() const;
  // The unique circuit inside basis + probe. Throws std::logic_error when the
  // probe is independent of the basis.
  EdgeMask fundamental_circuit(EdgeMask basis, EdgeId probe) const;
  // Greedy basis in edge order.
  EdgeSubset greedy_basis() const;
  // Maximal vertex sets spanned by tight sparse subsets; the edges are those
  // of the first witness in subset order.
  ComponentReport components() const;

 private:
  int tight_edges(int spanned_vertices) const;

  const ColoredGraph& graph_;
  Family family_;
  EdgeMask full_ = 0;
  std::vector<std::uint64_t> vertex_mask_;
  std::vector<VertexId> local_to_vertex_;
  std::vector<std::uint8_t> passes_;
  std::vector<std::uint8_t> sparse_;
  int rank_ = 0;
};

bool oracle_is_sparse(const ColoredGraph& graph, Family family);
bool oracle_is_tight(const ColoredGraph& graph, Family family);
int oracle_max_independent(const ColoredGraph& graph, Family family);
ComponentReport oracle_components(const ColoredGraph& graph, Family family);

// Triviality of the image by walking every cycle closed by a non-forest edge
// along explicit forest paths.
bool oracle_image_trivial(const ColoredGraph& graph, std::span<const EdgeId> subset);

// Signed color sum of the cycle formed by a non-forest edge and the forest
// path joining its ends, walked from the probe's head back to its tail. The
// forest must connect the probe's ends; throws std::invalid_argument if not.
GroupElement oracle_cycle_image(const ColoredGraph& graph,
                                std::span<const EdgeId> forest, EdgeId probe);

}  // namespace rigidkit

#endif  // RIGIDKIT_ORACLE_HPP_
