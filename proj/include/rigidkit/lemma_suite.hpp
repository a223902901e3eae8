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

#ifndef RIGIDKIT_LEMMA_SUITE_HPP_
#define RIGIDKIT_LEMMA_SUITE_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rigidkit/colored_graph.hpp"

namespace rigidkit {

/*
 * Finite checks of the structural facts the algorithms rely on, all by
 * subset enumeration:
 *
 *   laman-circuits-disjoint      (2,2)-graphs: Laman circuits share no edge
 *   laman-basis-independence     (2,2)-graphs: every Laman basis has exactly
 *                                the Laman circuits as fundamental circuits
 *   ross-by-fundamental-circuits colored (2,2)-graphs: Ross iff every
 *                                fundamental Laman circuit of every Laman
 *                                basis has non-trivial image
 *   two-two-circuits-disjoint    (2,1)-graphs: (2,2)-circuits share no edge
 *   two-two-or-laman-circuit     (2,1)-graphs: a Laman circuit lies in a
 *                                (2,2)-circuit or is fundamental for every
 *                                Laman basis
 *   two-two-circuit-cone         Z/kZ-colored (2,2)-circuits: cone-Laman iff
 *                                every one-edge deletion is Ross
 *   z3-fiber-path                Z/3Z: a connected subgraph has non-trivial
 *                                image iff its lift joins two lifts of a vertex
 *   z3-lift-types                Z/3Z: trivial image lifts to three disjoint
 *                                copies, non-trivial connected to connected
 *
 * Uncolored families are loopless multigraphs on at most max_vertices.
 */
struct LemmaSuiteOptions {
  std::uint64_t seed = 1;
  VertexId max_vertices = 4;
  std::size_t colorings_per_graph = 16;
  std::size_t random_z3_graphs = 1000;
  // Reproducers are written here when set.
  std::optional<std::filesystem::path> reproducer_dir;
};

struct LemmaResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t counterexamples = 0;
  std::vector<std::filesystem::path> reproducers;
  // Serialized minimized first counterexample, empty when none.
  std::string first_counterexample;
};

struct LemmaReport {
  std::vector<LemmaResult> results;
  bool passed() const;
};

LemmaReport lemma_suite(const LemmaSuiteOptions& options);

// Greedily deletes edges and then unused trailing vertices while `fails`
// stays true. `fails(graph)` must hold on entry.
ColoredGraph minimize_counterexample(const ColoredGraph& graph,
                                     const std::function<bool(const ColoredGraph&)>& fails);

}  // namespace rigidkit

#endif  // RIGIDKIT_LEMMA_SUITE_HPP_
