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

#ifndef RIGIDKIT_TESTS_TEST_SUPPORT_HPP_
#define RIGIDKIT_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <initializer_list>

#include "rigidkit/colored_graph.hpp"

namespace rigidkit::testing {

struct Z2Edge {
  VertexId tail;
  VertexId head;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

struct ZkEdge {
  VertexId tail;
  VertexId head;
  std::int64_t c = 0;
};

inline ColoredGraph z2(VertexId n, std::initializer_list<Z2Edge> edges) {
  ColoredGraph g(Group::Z2(), n);
  for (const Z2Edge& e : edges) g.add_edge(e.tail, e.head, {e.a, e.b});
  return g;
}

inline ColoredGraph zk(std::int64_t k, VertexId n, std::initializer_list<ZkEdge> edges) {
  ColoredGraph g(Group::Zk(k), n);
  for (const ZkEdge& e : edges) g.add_edge(e.tail, e.head, {e.c, 0});
  return g;
}

// Uncolored K4 on vertices 0..3, edges in lexicographic order.
inline ColoredGraph k4_zero() {
  return z2(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// A (2,2)-graph on 5 vertices that contains the uncolored K4.
inline ColoredGraph k4_in_two_two() {
  ColoredGraph g = k4_zero();
  ColoredGraph out(Group::Z2(), 5, {g.edges().begin(), g.edges().end()});
  out.add_edge(0, 4, {0, 0});
  out.add_edge(0, 4, {1, 0});
  return out;
}

// A (2,1)-graph on 4 vertices: doubled edge 0-1 colored 1 and 0 plus the
// rest of a zero K4. The whole graph is a (2,2)-circuit, and for the Laman
// basis the greedy run builds, the zero K4 is not a fundamental circuit.
inline ColoredGraph k4_in_two_two_circuit(std::int64_t k) {
  return zk(k, 4, {{0, 1, 1}, {0, 1, 0}, {0, 2, 0}, {1, 2, 0}, {0, 3, 0}, {1, 3, 0}, {2, 3, 0}});
}

}  // namespace rigidkit::testing

#endif  // RIGIDKIT_TESTS_TEST_SUPPORT_HPP_
