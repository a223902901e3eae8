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

#include "rigidkit/fixed_lattice.hpp"
#include "rigidkit/cone_laman.hpp"
#include "rigidkit/gamma_image.hpp"
#include "rigidkit/generators.hpp"
#include "rigidkit/graph_io.hpp"
#include "rigidkit/oracle.hpp"
#include "test_support.hpp"

namespace rigidkit {
namespace {

TEST(RandomColored, Deterministic) {
  GenSpec spec;
  spec.seed = 12345;
  spec.n = 9;
  spec.m = 20;
  EXPECT_EQ(serialize_graph(random_colored(spec)), serialize_graph(random_colored(spec)));
  spec.group = Group::Zk(7);
  EXPECT_EQ(serialize_graph(random_colored(spec)), serialize_graph(random_colored(spec)));
  GenSpec other = spec;
  other.seed = 12346;
  EXPECT_NE(random_colored(spec), random_colored(other));
}

TEST(RandomColored, SmallCases) {
  GenSpec spec;
  spec.n = 1;
  spec.m = 1;
  const ColoredGraph loop = random_colored(spec);
  ASSERT_EQ(loop.num_edges(), 1);
  EXPECT_TRUE(loop.edge(0).is_loop());
  spec.n = 5;
  spec.m = 0;
  EXPECT_EQ(random_colored(spec).num_edges(), 0);
  EXPECT_EQ(random_colored(spec).num_vertices(), 5);
}

TEST(RandomColored, SizesAndColorRange) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = static_cast<VertexId>(1 + seed % 13);
    spec.m = static_cast<EdgeId>(seed % 31);
    spec.color_low = -1;
    spec.color_high = 3;
    const ColoredGraph g = random_colored(spec);
    EXPECT_EQ(g.num_vertices(), spec.n);
    EXPECT_EQ(g.num_edges(), spec.m);
    EXPECT_NO_THROW(validate(g));
    for (const ColoredEdge& e : g.edges()) {
      EXPECT_GE(e.color.a, -1);
      EXPECT_LE(e.color.a, 3);
      EXPECT_GE(e.color.b, -1);
      EXPECT_LE(e.color.b, 3);
    }
    spec.group = Group::Zk(4);
    EXPECT_NO_THROW(validate(random_colored(spec)));
  }
}

TEST(RandomColored, FamilyBiasSetsTightCount) {
  GenSpec spec;
  spec.n = 6;
  spec.m = 100;
  spec.family_bias = Family::kRoss;
  EXPECT_EQ(random_colored(spec).num_edges(), 10);
  spec.family_bias = Family::kConeLaman;
  spec.group = Group::Zk(3);
  EXPECT_EQ(random_colored(spec).num_edges(), 11);
  spec.family_bias = Family::kLaman;
  EXPECT_EQ(random_colored(spec).num_edges(), 9);
  spec.n = 1;
  EXPECT_EQ(random_colored(spec).num_edges(), 0);
}

TEST(Families, SmallCases) {
  EXPECT_EQ(ross_family(1), testing::z2(1, {}));
  EXPECT_EQ(ross_family(2), testing::z2(2, {{0, 1, 0, 0}, {0, 1, 1, 0}}));
  EXPECT_TRUE(oracle_is_tight(ross_family(2), Family::kRoss));
  EXPECT_EQ(cone_family(1, 3), testing::zk(3, 1, {{0, 0, 1}}));
  EXPECT_TRUE(oracle_is_tight(cone_family(1, 3), Family::kConeLaman));
  for (VertexId n = 1; n <= 6; ++n) {
    EXPECT_TRUE(oracle_is_tight(ross_family(n), Family::kRoss)) << n;
    for (std::int64_t k = 2; k <= 5; ++k) {
      EXPECT_EQ(cone_family(n, k).num_edges(), 2 * n - 1);
      EXPECT_TRUE(oracle_is_tight(cone_family(n, k), Family::kConeLaman)) << n << " " << k;
    }
  }
}

TEST(Families, RossFamilyIsRossUpToFourThousandVertices) {
  for (VertexId n = 1; n <= 4096; n = n < 64 ? n + 1 : n * 2) {
    const ColoredGraph g = ross_family(n);
    ASSERT_EQ(g.num_edges(), 2 * n - 2);
    EXPECT_TRUE(ross_decide(g).is_ross) << n;
  }
  EXPECT_TRUE(ross_decide(ross_family(3001)).is_ross);
}

TEST(Families, PathPlusChords) {
  const ColoredGraph g = path_plus_chords(100, 4);
  EXPECT_EQ(g.num_vertices(), 100);
  EXPECT_EQ(g.num_edges(), 199);
  EXPECT_TRUE(is_trivial_image(g));
  EXPECT_EQ(g, path_plus_chords(100, 4));
}

TEST(Enumeration, CountsMultisets) {
  EnumSpec spec;
  spec.n = 2;
  spec.max_edges = 2;
  spec.both_orientations = false;
  // Three edge types; multisets of size 0, 1, 2.
  EXPECT_EQ(enumerate_multigraphs(spec, [](const ColoredGraph&) {}), 1u + 3u + 6u);
  spec.min_edges = 2;
  std::size_t seen = 0;
  enumerate_multigraphs(spec, [&](const ColoredGraph& g) {
    EXPECT_EQ(g.num_edges(), 2);
    ++seen;
  });
  EXPECT_EQ(seen, 6u);
  spec.min_edges = 0;
  spec.loops = false;
  spec.both_orientations = true;
  spec.colors = {{0, 0}, {1, 0}};
  // Types (0,1,c), (1,0,c) for two colors.
  EXPECT_EQ(enumerate_multigraphs(spec, [](const ColoredGraph&) {}), 1u + 4u + 10u);
}

}  // namespace
}  // namespace rigidkit
