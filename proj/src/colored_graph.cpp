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

#include "rigidkit/colored_graph.hpp"

#include <algorithm>
#include <numeric>

namespace rigidkit {

ColoredGraph::ColoredGraph(Group group, VertexId num_vertices,
                           std::vector<ColoredEdge> edges)
    : group_(group), num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 0) {
    throw std::invalid_argument("vertex count must be non-negative");
  }
}

EdgeId ColoredGraph::add_edge(VertexId tail, VertexId head, GroupElement color) {
  edges_.push_back({tail, head, color});
  return num_edges() - 1;
}

InvalidGraph::InvalidGraph(EdgeId edge, const std::string& reason)
    : std::invalid_argument("edge " + std::to_string(edge) + ": " + reason),
      edge_(edge),
      reason_(reason) {}

void validate(const ColoredGraph& graph) {
  const Group& group = graph.group();
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    const ColoredEdge& edge = graph.edge(e);
    if (edge.tail < 0 || edge.tail >= graph.num_vertices() || edge.head < 0 ||
        edge.head >= graph.num_vertices()) {
      throw InvalidGraph(e, "endpoint out of range");
    }
    if (group.contains(edge.color)) continue;
    if (group.is_lattice()) throw InvalidGraph(e, "color out of range");
    throw InvalidGraph(e, "color not reduced");
  }
}

SpanInfo spanned(const ColoredGraph& graph, std::span<const EdgeId> subset) {
  SpanInfo info;
  info.vertices.reserve(subset.size() * 2);
  for (EdgeId e : subset) {
    info.vertices.push_back(graph.edge(e).tail);
    info.vertices.push_back(graph.edge(e).head);
  }
  std::sort(info.vertices.begin(), info.vertices.end());
  info.vertices.erase(std::unique(info.vertices.begin(), info.vertices.end()),
                      info.vertices.end());
  info.num_vertices = static_cast<VertexId>(info.vertices.size());
  info.num_edges = static_cast<EdgeId>(subset.size());
  return info;
}

Subgraph subgraph(const ColoredGraph& graph, std::span<const EdgeId> subset) {
  SpanInfo info = spanned(graph, subset);
  auto local = [&](VertexId v) {
    return static_cast<VertexId>(
        std::lower_bound(info.vertices.begin(), info.vertices.end(), v) -
        info.vertices.begin());
  };
  std::vector<ColoredEdge> edges;
  edges.reserve(subset.size());
  for (EdgeId e : subset) {
    const ColoredEdge& edge = graph.edge(e);
    edges.push_back({local(edge.tail), local(edge.head), edge.color});
  }
  return Subgraph{ColoredGraph(graph.group(), info.num_vertices, std::move(edges)),
                  std::move(info.vertices),
                  EdgeSubset(subset.begin(), subset.end())};
}

EdgeSubset all_edges(const ColoredGraph& graph) {
  EdgeSubset ids(static_cast<std::size_t>(graph.num_edges()));
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

}  // namespace rigidkit
