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

#ifndef RIGIDKIT_FIXED_LATTICE_HPP_
#define RIGIDKIT_FIXED_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rigidkit/colored_graph.hpp"
#include "rigidkit/components.hpp"
#include "rigidkit/pebble_game.hpp"

namespace rigidkit {

enum class RossDiscardReason { kSpan22, kTrivialCircuitImage };

std::string_view to_string(RossDiscardReason reason);

struct RossDiscard {
  EdgeId edge = 0;
  RossDiscardReason reason = RossDiscardReason::kSpan22;

  friend bool operator==(const RossDiscard&, const RossDiscard&) = default;
};

/*
 * Greedy Ross-sparsity run: a (2,3) and a (2,2) pebble game played side by
 * side over the edges of a colored graph, in list order.
 *
 *   (A) dependent in the (2,2) game            -> discard
 *   (B) independent in the (2,3) game          -> insert into both games
 *   (C) otherwise take the fundamental (2,3)-circuit of the edge; if its
 *       image is trivial                        -> discard
 *   (D) otherwise                               -> insert into the (2,2) game
 *
 * The (2,2) game then holds a maximum Ross-sparse subset and its components
 * are the rigid components. Works for any group; the ross_* entry points
 * below insist on Z^2.
 */
class RossRun {
 public:
  explicit RossRun(const ColoredGraph& graph);

  // Processes edge e (edges may be fed in any order, each at most once).
  // Returns true when the edge is kept.
  bool process(EdgeId e);
  void process_all();

  const EdgeSubset& kept() const { return kept_; }
  const std::vector<RossDiscard>& discarded() const { return discarded_; }
  std::size_t processed() const { return kept_.size() + discarded_.size(); }
  ComponentReport components() const { return game22_.components(); }

  const PebbleGame& laman_game() const { return game23_; }
  const PebbleGame& two_two_game() const { return game22_; }

 private:
  const ColoredGraph& graph_;
  PebbleGame game23_;
  PebbleGame game22_;
  EdgeSubset kept_;
  std::vector<RossDiscard> discarded_;
};

enum class DecideMode {
  kMinimal,   // the input itself is a Ross graph (minimally rigid)
  kSpanning,  // the input contains a spanning Ross graph (rigid)
};

struct RossDecision {
  bool is_ross = false;
  std::size_t processed = 0;  // edges examined before the verdict
  std::optional<RossDiscard> first_discard;
};

// Throw std::invalid_argument unless the graph is Z^2-colored.
ComponentReport ross_components(const ColoredGraph& graph);
EdgeSubset ross_extract(const ColoredGraph& graph);
RossDecision ross_decide(const ColoredGraph& graph,
                         DecideMode mode = DecideMode::kMinimal);

// Ross-sparsity for either group; used by the cone algorithm on Z/kZ.
bool is_ross_sparse(const ColoredGraph& graph);

}  // namespace rigidkit

#endif  // RIGIDKIT_FIXED_LATTICE_HPP_
