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

#include "rigidkit/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rigidkit {

ColoredGraph random_colored(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("random_colored needs n >= 1");
  EdgeId m = spec.m;
  if (spec.family_bias) {
    int ell = 1;
    if (*spec.family_bias == Family::kLaman) ell = 3;
    if (*spec.family_bias == Family::kTwoTwo || *spec.family_bias == Family::kRoss) ell = 2;
    m = std::max<EdgeId>(0, 2 * spec.n - ell);
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<VertexId> vertex(0, spec.n - 1);
  ColoredGraph graph(spec.group, spec.n);
  for (EdgeId e = 0; e < m; ++e) {
    const VertexId tail = vertex(rng);
    const VertexId head = vertex(rng);
    GroupElement color;
    if (spec.group.is_lattice()) {
      std::uniform_int_distribution<std::int64_t> coordinate(spec.color_low, spec.color_high);
      color.a = coordinate(rng);
      color.b = coordinate(rng);
    } else {
      std::uniform_int_distribution<std::int64_t> residue(0, spec.group.modulus() - 1);
      color.a = residue(rng);
    }
    graph.add_edge(tail, head, color);
  }
  return graph;
}

ColoredGraph ross_family(VertexId n) {
  if (n < 1) throw std::invalid_argument("ross_family needs n >= 1");
  ColoredGraph graph(Group::Z2(), n);
  for (VertexId i = 0; i + 1 < n; ++i) {
    graph.add_edge(i, i + 1, {0, 0});
    graph.add_edge(i, i + 1, {1, 0});
  }
  return graph;
}

ColoredGraph cone_family(VertexId n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("cone_family needs n >= 1");
  ColoredGraph graph(Group::Zk(k), n);
  graph.add_edge(0, 0, {1, 0});
  for (VertexId i = 0; i + 1 < n; ++i) {
    graph.add_edge(i, i + 1, {0, 0});
    graph.add_edge(i, i + 1, {1, 0});
  }
  return graph;
}

ColoredGraph path_plus_chords(VertexId n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("path_plus_chords needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coordinate(-1000, 1000);
  std::uniform_int_distribution<VertexId> vertex(0, n - 1);
  std::vector<GroupElement> potential(static_cast<std::size_t>(n));
  for (GroupElement& p : potential) p = {coordinate(rng), coordinate(rng)};
  const Group group = Group::Z2();
  auto difference = [&](VertexId tail, VertexId head) {
    return group.subtract(potential[static_cast<std::size_t>(head)],
                          potential[static_cast<std::size_t>(tail)]);
  };
  ColoredGraph graph(group, n);
  for (VertexId i = 0; i + 1 < n; ++i) graph.add_edge(i, i + 1, difference(i, i + 1));
  for (VertexId c = 0; c < n; ++c) {
    const VertexId tail = vertex(rng);
    const VertexId head = vertex(rng);
    graph.add_edge(tail, head, difference(tail, head));
  }
  return graph;
}

std::size_t enumerate_multigraphs(const EnumSpec& spec,
                                  const std::function<void(const ColoredGraph&)>& visit) {
  std::vector<ColoredEdge> types;
  for (VertexId i = 0; i < spec.n; ++i) {
    for (VertexId j = 0; j < spec.n; ++j) {
      if (i == j && !spec.loops) continue;
      if (i > j && !spec.both_orientations) continue;
      for (const GroupElement& c : spec.colors) types.push_back({i, j, c});
    }
  }
  std::size_t visited = 0;
  std::vector<std::size_t> chosen;
  // Non-decreasing type indices enumerate multisets.
  std::function<void(std::size_t)> extend = [&](std::size_t first) {
    if (static_cast<EdgeId>(chosen.size()) >= spec.min_edges) {
      ColoredGraph graph(spec.group, spec.n);
      for (std::size_t t : chosen) graph.add_edge(types[t].tail, types[t].head, types[t].color);
      visit(graph);
      ++visited;
    }
    if (static_cast<EdgeId>(chosen.size()) == spec.max_edges) return;
    for (std::size_t t = first; t < types.size(); ++t) {
      chosen.push_back(t);
      extend(t);
      chosen.pop_back();
    }
  };
  extend(0);
  return visited;
}

}  // namespace rigidkit
