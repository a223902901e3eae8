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

#ifndef RIGIDKIT_GENERATORS_HPP_
#define RIGIDKIT_GENERATORS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rigidkit/colored_graph.hpp"
#include "rigidkit/oracle.hpp"

namespace rigidkit {

struct GenSpec {
  std::uint64_t seed = 0;
  VertexId n = 1;
  EdgeId m = 0;
  Group group = Group::Z2();
  // Z^2 coordinates are drawn from [color_low, color_high]; Z/kZ colors from
  // every residue.
  std::int64_t color_low = -2;
  std::int64_t color_high = 2;
  // When set, m is replaced by the family's tight edge count for n (floored
  // at zero).
  std::optional<Family> family_bias;
};

// Uniform endpoints and colors; loops and parallel edges allowed. Identical
// specs give identical graphs.
ColoredGraph random_colored(const GenSpec& spec);

// Vertex i joined to i + 1 by a zero edge and a (1, 0) edge: a Ross graph
// with 2n - 2 edges. Requires n >= 1.
ColoredGraph ross_family(VertexId n);

// The same chain colored 0 and 1 in Z/kZ, plus a loop colored 1 at vertex 0:
// a cone-Laman graph with 2n - 1 edges. Requires n >= 1, k >= 2.
ColoredGraph cone_family(VertexId n, std::int64_t k);

// Z^2-colored path 0 - 1 - ... - (n-1) plus n chords with random endpoints.
// Colors are potential differences, so every cycle has trivial image and an
// image test has to look at all of them.
ColoredGraph path_plus_chords(VertexId n, std::uint64_t seed);

struct EnumSpec {
  Group group = Group::Z2();
  VertexId n = 1;
  EdgeId max_edges = 0;
  // Only graphs with at least this many edges are visited.
  EdgeId min_edges = 0;
  std::vector<GroupElement> colors{GroupElement{}};
  // With false, only tail < head is used for non-loops. Enough when the color
  // set is closed under negation.
  bool both_orientations = true;
  bool loops = true;
};

// Visits every multiset of edge types (tail, head, color) of the allowed
// sizes once, as a graph on n vertices with edges in type order. Returns the
// number of graphs visited.
std::size_t enumerate_multigraphs(const EnumSpec& spec,
                                  const std::function<void(const ColoredGraph&)>& visit);

}  // namespace rigidkit

#endif  // RIGIDKIT_GENERATORS_HPP_
