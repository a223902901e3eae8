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

#ifndef RIGIDKIT_CONE_LAMAN_HPP_
#define RIGIDKIT_CONE_LAMAN_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rigidkit/colored_graph.hpp"
#include "rigidkit/components.hpp"
#include "rigidkit/fixed_lattice.hpp"
#include "rigidkit/pebble_game.hpp"

namespace rigidkit {

enum class ConeDiscardReason { kSpan21, kTrivialLamanCircuit, kCircuitNotRossRobust };

std::string_view to_string(ConeDiscardReason reason);

struct ConeDiscard {
  EdgeId edge = 0;
  ConeDiscardReason reason = ConeDiscardReason::kSpan21;

  friend bool operator==(const ConeDiscard&, const ConeDiscard&) = default;
};

/*
 * Greedy cone-Laman run for Z/kZ colors with (2,1), (2,2) and (2,3) pebble
 * games. The (2,1) game holds the kept edges, the (2,2) game a (2,2)-basis of
 * them and the (2,3) game a Laman basis.
 *
 *   (A) dependent in the (2,1) game                          -> discard
 *   loop: its own cycle is its Laman circuit; keep iff the color is non-zero
 *   (B) independent in the (2,3) game -> insert into every game where the
 *       edge is independent (always (2,3) and (2,1); (2,2) unless spanned)
 *   (C) independent in the (2,2) game: keep iff the fundamental Laman circuit
 *       has non-trivial image; insert into (2,1) and (2,2)
 *   (D) otherwise take the fundamental (2,2)-circuit C of the edge and keep
 *       iff C - f is Ross-sparse for every f in C; insert into (2,1)
 */
class ConeRun {
 public:
  // Throws std::invalid_argument unless the graph is Z/kZ-colored.
  explicit ConeRun(const ColoredGraph& graph);

  bool process(EdgeId e);
  void process_all();

  const EdgeSubset& kept() const { return kept_; }
  const std::vector<ConeDiscard>& discarded() const { return discarded_; }
  std::size_t processed() const { return kept_.size() + discarded_.size(); }
  ComponentReport components() const { return game21_.components(); }

  const PebbleGame& two_one_game() const { return game21_; }
  const PebbleGame& two_two_game() const { return game22_; }
  const PebbleGame& laman_game() const { return game23_; }

 private:
  bool keep(EdgeId e);
  bool discard(EdgeId e, ConeDiscardReason reason);
  bool circuit_is_ross_robust(const CircuitReport& circuit) const;

  const ColoredGraph& graph_;
  PebbleGame game21_;
  PebbleGame game22_;
  PebbleGame game23_;
  EdgeSubset kept_;
  std::vector<ConeDiscard> discarded_;
};

struct ConeDecision {
  bool is_cone_laman = false;
  std::size_t processed = 0;
  std::optional<ConeDiscard> first_discard;
};

ComponentReport cone_components(const ColoredGraph& graph);
EdgeSubset cone_extract(const ColoredGraph& graph);
ConeDecision cone_decide(const ColoredGraph& graph,
                         DecideMode mode = DecideMode::kMinimal);

}  // namespace rigidkit

#endif  // RIGIDKIT_CONE_LAMAN_HPP_
