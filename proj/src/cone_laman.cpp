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

#include "rigidkit/cone_laman.hpp"

#include <algorithm>
#include <stdexcept>

#include "rigidkit/gamma_image.hpp"

namespace rigidkit {
namespace {

const ColoredGraph& require_cyclic(const ColoredGraph& graph) {
  if (graph.group().is_lattice()) {
    throw std::invalid_argument("cone algorithms need Z/kZ colors, got Z^2");
  }
  return graph;
}

}  // namespace

std::string_view to_string(ConeDiscardReason reason) {
  switch (reason) {
    case ConeDiscardReason::kSpan21:
      return "span21";
    case ConeDiscardReason::kTrivialLamanCircuit:
      return "trivial-laman-circuit";
    case ConeDiscardReason::kCircuitNotRossRobust:
      return "circuit-not-ross-robust";
  }
  return "unknown";
}

ConeRun::ConeRun(const ColoredGraph& graph)
    : graph_(require_cyclic(graph)),
      game21_(1, std::max<VertexId>(graph.num_vertices(), 1)),
      game22_(2, std::max<VertexId>(graph.num_vertices(), 1)),
      game23_(3, std::max<VertexId>(graph.num_vertices(), 1)) {}

bool ConeRun::keep(EdgeId e) {
  kept_.push_back(e);
  return true;
}

bool ConeRun::discard(EdgeId e, ConeDiscardReason reason) {
  discarded_.push_back({e, reason});
  return false;
}

bool ConeRun::circuit_is_ross_robust(const CircuitReport& circuit) const {
  EdgeSubset rest;
  rest.reserve(circuit.edges.size());
  for (EdgeId dropped : circuit.edges) {
    rest.clear();
    for (EdgeId f : circuit.edges) {
      if (f != dropped) rest.push_back(f);
    }
    if (!is_ross_sparse(subgraph(graph_, rest).graph)) return false;
  }
  return true;
}

bool ConeRun::process(EdgeId e) {
  const ColoredEdge& edge = graph_.edge(e);
  const VertexId i = edge.tail;
  const VertexId j = edge.head;

  if (game21_.in_component_span(i, j)) return discard(e, ConeDiscardReason::kSpan21);

  if (edge.is_loop()) {
    if (graph_.group().is_identity(edge.color)) {
      return discard(e, ConeDiscardReason::kTrivialLamanCircuit);
    }
    game21_.try_insert(i, j, e);
    return keep(e);
  }

  if (!game23_.in_component_span(i, j)) {
    game23_.try_insert(i, j, e);
    game22_.try_insert(i, j, e);  // rejected when the edge closes a (2,2)-circuit
    game21_.try_insert(i, j, e);
    return keep(e);
  }

  if (!game22_.in_component_span(i, j)) {
    const CircuitReport circuit = game23_.fundamental_circuit(i, j, e);
    if (is_trivial_image(graph_, circuit.edges)) {
      return discard(e, ConeDiscardReason::kTrivialLamanCircuit);
    }
    game22_.try_insert(i, j, e);
    game21_.try_insert(i, j, e);
    return keep(e);
  }

  const CircuitReport circuit = game22_.fundamental_circuit(i, j, e);
  if (!circuit_is_ross_robust(circuit)) {
    return discard(e, ConeDiscardReason::kCircuitNotRossRobust);
  }
  game21_.try_insert(i, j, e);
  return keep(e);
}

void ConeRun::process_all() {
  for (EdgeId e = 0; e < graph_.num_edges(); ++e) process(e);
}

ComponentReport cone_components(const ColoredGraph& graph) {
  ConeRun run(graph);
  run.process_all();
  return run.components();
}

EdgeSubset cone_extract(const ColoredGraph& graph) {
  ConeRun run(graph);
  run.process_all();
  return run.kept();
}

ConeDecision cone_decide(const ColoredGraph& graph, DecideMode mode) {
  ConeRun run(graph);
  const long target = 2L * graph.num_vertices() - 1;
  ConeDecision decision;
  if (mode == DecideMode::kSpanning) {
    run.process_all();
    decision.processed = run.processed();
    decision.is_cone_laman = static_cast<long>(run.kept().size()) == target;
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
  decision.is_cone_laman = true;
  return decision;
}

}  // namespace rigidkit
