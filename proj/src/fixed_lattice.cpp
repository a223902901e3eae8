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

#include "rigidkit/fixed_lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "rigidkit/gamma_image.hpp"

namespace rigidkit {
namespace {

void require_lattice(const ColoredGraph& graph) {
  if (!graph.group().is_lattice()) {
    throw std::invalid_argument("fixed-lattice algorithms need Z^2 colors, got " +
                                graph.group().describe());
  }
}

}  // namespace

std::string_view to_string(RossDiscardReason reason) {
  switch (reason) {
    case RossDiscardReason::kSpan22:
      return "span22";
    case RossDiscardReason::kTrivialCircuitImage:
      return "trivial-circuit-image";
  }
  return "unknown";
}

RossRun::RossRun(const ColoredGraph& graph)
    : graph_(graph),
      game23_(3, std::max<VertexId>(graph.num_vertices(), 1)),
      game22_(2, std::max<VertexId>(graph.num_vertices(), 1)) {}

bool RossRun::process(EdgeId e) {
  const ColoredEdge& edge = graph_.edge(e);
  const VertexId i = edge.tail;
  const VertexId j = edge.head;

  if (game22_.in_component_span(i, j)) {
    discarded_.push_back({e, RossDiscardReason::kSpan22});
    return false;
  }
  if (!game23_.in_component_span(i, j)) {
    game23_.try_insert(i, j, e);
    game22_.try_insert(i, j, e);
    kept_.push_back(e);
    return true;
  }
  const CircuitReport circuit = game23_.fundamental_circuit(i, j, e);
  if (is_trivial_image(graph_, circuit.edges)) {
    discarded_.push_back({e, RossDiscardReason::kTrivialCircuitImage});
    return false;
  }
  game22_.try_insert(i, j, e);
  kept_.push_back(e);
  return true;
}

void RossRun::process_all() {
  for (EdgeId e = 0; e < graph_.num_edges(); ++e) process(e);
}

ComponentReport ross_components(const ColoredGraph& graph) {
  require_lattice(graph);
  RossRun run(graph);
  run.process_all();
  return run.components();
}

EdgeSubset ross_extract(const ColoredGraph& graph) {
  require_lattice(graph);
  RossRun run(graph);
  run.process_all();
  return run.kept();
}

RossDecision ross_decide(const ColoredGraph& graph, DecideMode mode) {
  require_lattice(graph);
  const long target = 2L * graph.num_vertices() - 2;
  RossDecision decision;
  RossRun run(graph);
  if (mode == DecideMode::kSpanning) {
    run.process_all();
    decision.processed = run.processed();
    decision.is_ross = static_cast<long>(run.kept().size()) == target;
    if (!run.discarded().empty()) decision.first_discard = run.discarded().front();
    return decision;
  }
  if (graph.num_edges() != target) return decision;
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    if (!run.process(e)) {
      decision.processed = run.processed();
      decision.first_discard = run.discarded().back();
      return decision;
    }
  }
  decision.processed = run.processed();
  decision.is_ross = true;
  return decision;
}

bool is_ross_sparse(const ColoredGraph& graph) {
  RossRun run(graph);
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    if (!run.process(e)) return false;
  }
  return true;
}

}  // namespace rigidkit
