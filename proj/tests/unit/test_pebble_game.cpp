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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "rigidkit/generators.hpp"
#include "rigidkit/oracle.hpp"
#include "rigidkit/pebble_game.hpp"
#include "test_support.hpp"

namespace rigidkit {
namespace {

Family family_for(int ell) {
  switch (ell) {
    case 1: return Family::kTwoOne;
    case 2: return Family::kTwoTwo;
    default: return Family::kLaman;
  }
}

class AuditScope {
 public:
  AuditScope() : previous_(PebbleGame::auditing()) { PebbleGame::set_auditing(true); }
  ~AuditScope() { PebbleGame::set_auditing(previous_); }

 private:
  bool previous_;
};

TEST(PebbleGame, NewGame) {
  const PebbleGame g(3, 2);
  EXPECT_EQ(g.pebbles(0), 2);
  EXPECT_EQ(g.pebbles(1), 2);
  const PebbleGame single(2, 1);
  EXPECT_EQ(single.num_vertices(), 1);
  EXPECT_EQ(single.pebbles(0), 2);
  EXPECT_THROW(PebbleGame(4, 5), std::invalid_argument);
  EXPECT_THROW(PebbleGame(0, 5), std::invalid_argument);
  EXPECT_THROW(PebbleGame(2, 0), std::invalid_argument);
}

TEST(PebbleGame, SpanOfFreshAndTightGames) {
  const PebbleGame fresh(2, 4);
  for (VertexId i = 0; i < 4; ++i) {
    for (VertexId j = 0; j < 4; ++j) {
      if (i != j) {
        EXPECT_FALSE(fresh.in_component_span(i, j));
      }
    }
  }
  PebbleGame two_two(2, 3);
  ASSERT_TRUE(two_two.try_insert(0, 1));
  EXPECT_FALSE(two_two.in_component_span(0, 1));
  ASSERT_TRUE(two_two.try_insert(0, 1));
  EXPECT_TRUE(two_two.in_component_span(0, 1));
  EXPECT_FALSE(two_two.in_component_span(1, 2));

  PebbleGame laman(3, 2);
  ASSERT_TRUE(laman.try_insert(0, 1));
  EXPECT_TRUE(laman.in_component_span(0, 1));
}

TEST(PebbleGame, ParallelEdgeCapacity) {
  PebbleGame laman(3, 2);
  EXPECT_TRUE(laman.try_insert(0, 1));
  EXPECT_FALSE(laman.try_insert(0, 1));

  PebbleGame two_two(2, 2);
  EXPECT_TRUE(two_two.try_insert(0, 1));
  EXPECT_TRUE(two_two.try_insert(1, 0));
  EXPECT_FALSE(two_two.try_insert(0, 1));

  PebbleGame two_one(1, 2);
  EXPECT_TRUE(two_one.try_insert(0, 1));
  EXPECT_TRUE(two_one.try_insert(0, 1));
  EXPECT_TRUE(two_one.try_insert(0, 1));
  EXPECT_FALSE(two_one.try_insert(0, 1));
}

TEST(PebbleGame, Loops) {
  PebbleGame two_one(1, 2);
  EXPECT_TRUE(two_one.try_insert(0, 0));
  EXPECT_FALSE(two_one.try_insert(0, 0));
  EXPECT_TRUE(two_one.try_insert(1, 1));
  for (int ell : {2, 3}) {
    PebbleGame g(ell, 1);
    EXPECT_TRUE(g.in_component_span(0, 0));
    EXPECT_FALSE(g.try_insert(0, 0));
  }
}

TEST(PebbleGame, CircuitOfDoubledEdge) {
  PebbleGame g(3, 2);
  ASSERT_TRUE(g.try_insert(0, 1, 0));
  const CircuitReport c = g.fundamental_circuit(0, 1, 1);
  EXPECT_EQ(c.vertices, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(c.edges, (std::vector<EdgeId>{0, 1}));
}

TEST(PebbleGame, CircuitOfUncoloredK4) {
  const ColoredGraph k4 = testing::k4_zero();
  PebbleGame g(3, 4);
  for (EdgeId e = 0; e < 5; ++e) ASSERT_TRUE(g.try_insert(k4.edge(e).tail, k4.edge(e).head, e));
  ASSERT_FALSE(g.try_insert(2, 3, 5));
  const CircuitReport c = g.fundamental_circuit(2, 3, 5);
  EXPECT_EQ(c.vertices, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_EQ(c.edges, (std::vector<EdgeId>{0, 1, 2, 3, 4, 5}));
}

TEST(PebbleGame, TwoTwoCircuitIgnoresTightNeighbor) {
  // Doubled 0-1 plus one 1-2 edge leaves room for a second 1-2 edge.
  PebbleGame g(2, 3);
  ASSERT_TRUE(g.try_insert(0, 1, 0));
  ASSERT_TRUE(g.try_insert(0, 1, 1));
  ASSERT_TRUE(g.try_insert(1, 2, 2));
  PebbleGame copy = g;
  EXPECT_THROW(copy.fundamental_circuit(1, 2, 3), std::logic_error);
  ASSERT_TRUE(g.try_insert(1, 2, 3));
  ASSERT_FALSE(g.try_insert(1, 2, 4));
  const CircuitReport c = g.fundamental_circuit(1, 2, 4);
  EXPECT_EQ(c.vertices, (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(c.edges, (std::vector<EdgeId>{2, 3, 4}));
}

TEST(PebbleGame, CircuitOfInsertableEdgeThrows) {
  PebbleGame g(3, 3);
  EXPECT_THROW(g.fundamental_circuit(0, 1, 0), std::logic_error);
}

TEST(PebbleGame, Components) {
  EXPECT_TRUE(PebbleGame(2, 4).components().empty());

  PebbleGame two_two(2, 4);
  ASSERT_TRUE(two_two.try_insert(0, 1, 0));
  ASSERT_TRUE(two_two.try_insert(0, 1, 1));
  ASSERT_TRUE(two_two.try_insert(2, 3, 2));
  const ComponentReport r = two_two.components();
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].vertices, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(r[0].edges, (std::vector<EdgeId>{0, 1}));

  PebbleGame laman(3, 2);
  ASSERT_TRUE(laman.try_insert(0, 1, 0));
  ASSERT_EQ(laman.components().size(), 1u);
  EXPECT_EQ(laman.components()[0].vertices, (std::vector<VertexId>{0, 1}));
}

TEST(PebbleGame, RejectionLeavesStateUnchanged) {
  AuditScope audit;
  const std::uint64_t before = PebbleGame::audit_count();
  PebbleGame g(3, 4);
  const ColoredGraph k4 = testing::k4_zero();
  for (EdgeId e = 0; e < 5; ++e) g.try_insert(k4.edge(e).tail, k4.edge(e).head, e);
  const PebbleGame snapshot = g;
  EXPECT_FALSE(g.try_insert(2, 3, 5));
  EXPECT_TRUE(g == snapshot);
  EXPECT_GT(PebbleGame::audit_count(), before);
  EXPECT_NO_THROW(g.audit());
}

struct GameTrace {
  EdgeSubset accepted;
  EdgeSubset rejected;
};

GameTrace play(const ColoredGraph& graph, int ell, PebbleGame& game) {
  GameTrace trace;
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    const ColoredEdge& edge = graph.edge(e);
    if (game.try_insert(edge.tail, edge.head, e)) {
      trace.accepted.push_back(e);
    } else {
      trace.rejected.push_back(e);
    }
    for (VertexId v = 0; v < game.num_vertices(); ++v) {
      EXPECT_EQ(game.pebbles(v) + game.out_degree(v), 2) << "ell " << ell;
    }
  }
  return trace;
}

void check_against_oracle(const ColoredGraph& graph) {
  for (int ell = 1; ell <= 3; ++ell) {
    PebbleGame game(ell, std::max<VertexId>(graph.num_vertices(), 1));
    const GameTrace trace = play(graph, ell, game);
    const SubsetOracle oracle(graph, family_for(ell));
    ASSERT_EQ(trace.accepted, oracle.greedy_basis()) << "ell " << ell;

    const EdgeMask basis = to_mask(trace.accepted);
    for (EdgeId probe : trace.rejected) {
      PebbleGame copy = game;
      const ColoredEdge& edge = graph.edge(probe);
      const CircuitReport circuit = copy.fundamental_circuit(edge.tail, edge.head, probe);
      EXPECT_EQ(circuit.edges, from_mask(oracle.fundamental_circuit(basis, probe)))
          << "ell " << ell << " probe " << probe;
    }

    ColoredGraph accepted(graph.group(), graph.num_vertices());
    for (EdgeId e : trace.accepted) accepted.add_edge(graph.edge(e).tail, graph.edge(e).head, {});
    ComponentReport expected = SubsetOracle(accepted, family_for(ell)).components();
    for (Component& c : expected) {
      for (EdgeId& e : c.edges) e = trace.accepted[static_cast<std::size_t>(e)];
    }
    canonicalize(expected);
    EXPECT_EQ(game.components(), expected) << "ell " << ell;
  }
}

TEST(PebbleGameProperty, ExhaustiveSmallGraphsWithLoops) {
  AuditScope audit;
  for (VertexId n = 1; n <= 4; ++n) {
    EnumSpec spec;
    spec.n = n;
    spec.max_edges = 8;
    spec.both_orientations = false;
    enumerate_multigraphs(spec, [](const ColoredGraph& g) { check_against_oracle(g); });
  }
}

TEST(PebbleGameProperty, ExhaustiveFiveVerticesLoopless) {
  EnumSpec spec;
  spec.n = 5;
  spec.max_edges = 8;
  spec.both_orientations = false;
  spec.loops = false;
  enumerate_multigraphs(spec, [](const ColoredGraph& g) { check_against_oracle(g); });
}

TEST(PebbleGameProperty, RandomEightVertexGraphs) {
  AuditScope audit;
  std::mt19937_64 rng(29);
  for (int t = 0; t < 1500; ++t) {
    GenSpec spec;
    spec.seed = rng();
    spec.n = 2 + static_cast<VertexId>(rng() % 7);
    spec.m = static_cast<EdgeId>(rng() % 17);
    check_against_oracle(random_colored(spec));
  }
}

}  // namespace
}  // namespace rigidkit
