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

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "rigidkit/development.hpp"
#include "rigidkit/generators.hpp"
#include "rigidkit/oracle.hpp"
#include "test_support.hpp"

namespace rigidkit {
namespace {

using testing::zk;

std::pair<VertexId, VertexId> ends(VertexId u, VertexId v) {
  return {std::min(u, v), std::max(u, v)};
}
std::pair<VertexId, VertexId> ends(const LiftedEdge& e) { return ends(e.u, e.v); }

TEST(Development, LoopColoredOneIsATriangle) {
  const Development dev = develop(zk(3, 1, {{0, 0, 1}}));
  ASSERT_EQ(dev.num_vertices(), 3);
  ASSERT_EQ(dev.num_edges(), 3);
  std::set<std::pair<VertexId, VertexId>> edges;
  for (const LiftedEdge& e : dev.edges()) edges.insert(ends(e));
  EXPECT_EQ(edges, (std::set<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {0, 2}}));
}

TEST(Development, LoopColoredZeroIsThreeLoops) {
  const Development dev = develop(zk(3, 1, {{0, 0, 0}}));
  for (EdgeId e = 0; e < 3; ++e) {
    EXPECT_EQ(dev.edge(e).u, dev.edge(e).v);
    EXPECT_EQ(dev.edge(e).u, e);
  }
}

TEST(Development, LiftRule) {
  const Development dev = develop(zk(3, 3, {{0, 2, 2}, {1, 0, 1}}));
  for (int z = 0; z < 3; ++z) {
    EXPECT_EQ(dev.edge(3 + z).u, Development::lift(1, z));
    EXPECT_EQ(dev.edge(3 + z).v, Development::lift(0, (z + 1) % 3));
    EXPECT_EQ(dev.edge(z).v, Development::lift(2, (z + 2) % 3));
  }
  EXPECT_EQ(dev.vertex_fiber(2), (std::array<VertexId, 3>{6, 7, 8}));
  EXPECT_EQ(dev.edge_fiber(1), (std::array<EdgeId, 3>{3, 4, 5}));
  EXPECT_EQ(Development::base_edge(5), 1);
  EXPECT_EQ(Development::base_vertex(7), 2);
  EXPECT_EQ(Development::layer(7), 1);
}

TEST(Development, RejectsOtherGroups) {
  EXPECT_THROW(develop(zk(4, 1, {})), std::invalid_argument);
  EXPECT_THROW(develop(testing::k4_zero()), std::invalid_argument);
}

TEST(Development, DotOutput) {
  std::ostringstream out;
  develop(zk(3, 1, {{0, 0, 1}})).write_dot(out);
  const std::string dot = out.str();
  EXPECT_NE(dot.find("graph development"), std::string::npos);
  EXPECT_NE(dot.find("0_2"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '-') / 2, 3);
}

TEST(Development, AsColoredGraph) {
  const ColoredGraph lifted = develop(zk(3, 2, {{0, 1, 1}})).as_colored_graph();
  EXPECT_EQ(lifted.group(), Group::Zk(3));
  EXPECT_EQ(lifted.num_vertices(), 6);
  EXPECT_EQ(lifted.num_edges(), 3);
  for (const ColoredEdge& e : lifted.edges()) EXPECT_EQ(e.color, (GroupElement{}));
}

TEST(Projection, Examples) {
  const ColoredGraph g = zk(3, 2, {{0, 1, 1}, {0, 1, 2}, {1, 1, 1}});
  const Development dev(g);
  LiftedSubgraph all;
  for (VertexId v = 0; v < dev.num_vertices(); ++v) all.vertices.push_back(v);
  for (EdgeId e = 0; e < dev.num_edges(); ++e) all.edges.push_back(e);
  EXPECT_EQ(project(dev, all), all_edges(g));
  const auto fiber = dev.edge_fiber(1);
  EXPECT_EQ(project(dev, {{}, {fiber.begin(), fiber.end()}}), (EdgeSubset{1}));
  EXPECT_TRUE(project(dev, {}).empty());
  EXPECT_TRUE(is_symmetric(dev, all));
  EXPECT_TRUE(is_symmetric(dev, {{}, {fiber.begin(), fiber.end()}}));
}

TEST(Orbit, TriangleEdgeAndSingleVertex) {
  const Development dev = develop(zk(3, 1, {{0, 0, 1}}));
  const LiftedSubgraph one{{0, 1}, {0}};
  const LiftedSubgraph closed = orbit(dev, one);
  EXPECT_EQ(closed.vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(closed.edges, (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_FALSE(is_symmetric(dev, one));
  EXPECT_TRUE(is_symmetric(dev, closed));
  EXPECT_FALSE(is_symmetric(dev, {{1}, {}}));
  const auto fiber = dev.vertex_fiber(0);
  EXPECT_TRUE(is_symmetric(dev, {{fiber.begin(), fiber.end()}, {}}));
}

TEST(Cone3, LoopExamples) {
  const Cone3Result one = cone3_components(zk(3, 1, {{0, 0, 1}}));
  ASSERT_EQ(one.components.size(), 1u);
  EXPECT_EQ(one.components[0].vertices, (std::vector<VertexId>{0}));
  EXPECT_EQ(one.components[0].edges, (std::vector<EdgeId>{0}));
  EXPECT_EQ(one.lifted_accepted, 3u);
  EXPECT_TRUE(one.asymmetric.empty());
  EXPECT_TRUE(cone3_decide(zk(3, 1, {{0, 0, 1}})).is_cone_laman);

  const Cone3Result zero = cone3_components(zk(3, 1, {{0, 0, 0}}));
  EXPECT_TRUE(zero.components.empty());
  EXPECT_EQ(zero.lifted_accepted, 0u);
  const Cone3Decision d = cone3_decide(zk(3, 1, {{0, 0, 0}}));
  EXPECT_FALSE(d.is_cone_laman);
  EXPECT_EQ(d.first_rejected_lift, std::optional<EdgeId>{0});
}

TEST(Cone3, ParallelEdgesAllColors) {
  const ColoredGraph g = zk(3, 2, {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
  const Development dev(g);
  EXPECT_EQ(dev.num_vertices(), 6);
  EXPECT_EQ(dev.num_edges(), 9);
  std::set<std::pair<VertexId, VertexId>> distinct;
  for (const LiftedEdge& e : dev.edges()) distinct.insert(ends(e));
  EXPECT_EQ(distinct.size(), 9u);
  EXPECT_EQ(cone3_decide(g).is_cone_laman, oracle_is_tight(g, Family::kConeLaman));
  EXPECT_TRUE(cone3_decide(g).is_cone_laman);
}

TEST(Cone3, AsymmetricComponentsAreDiagnostics) {
  // A zero triangle lifts to three disjoint triangles, none of them symmetric.
  const Cone3Result r = cone3_components(zk(3, 3, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}));
  EXPECT_TRUE(r.components.empty());
  EXPECT_EQ(r.asymmetric.size(), 3u);
}

ColoredGraph random_z3(std::mt19937_64& rng) {
  GenSpec spec;
  spec.seed = rng();
  spec.group = Group::Zk(3);
  spec.n = 1 + static_cast<VertexId>(rng() % 9);
  spec.m = static_cast<EdgeId>(rng() % 18);
  return random_colored(spec);
}

TEST(DevelopmentProperty, SizesAndFreeAction) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 1000; ++t) {
    const ColoredGraph g = random_z3(rng);
    const Development dev(g);
    ASSERT_EQ(dev.num_vertices(), 3 * g.num_vertices());
    ASSERT_EQ(dev.num_edges(), 3 * g.num_edges());
    std::multiset<std::pair<VertexId, VertexId>> edges;
    for (const LiftedEdge& e : dev.edges()) edges.insert(ends(e));
    for (int z = 0; z < 3; ++z) {
      std::multiset<std::pair<VertexId, VertexId>> image;
      for (EdgeId e = 0; e < dev.num_edges(); ++e) {
        const LiftedEdge& moved = dev.edge(dev.act_on_edge(z, e));
        const auto expected = ends(Development::act(z, dev.edge(e).u),
                                   Development::act(z, dev.edge(e).v));
        EXPECT_EQ(ends(moved), expected);
        image.insert(ends(moved));
      }
      EXPECT_EQ(image, edges);
      for (VertexId v = 0; v < dev.num_vertices(); ++v) {
        if (z == 0) {
          EXPECT_EQ(Development::act(z, v), v);
        } else {
          EXPECT_NE(Development::act(z, v), v);
        }
      }
    }
    for (VertexId v = 0; v < dev.num_vertices(); ++v) {
      EXPECT_EQ(Development::act(1, Development::act(1, v)), Development::act(2, v));
    }
  }
}

TEST(DevelopmentProperty, ComponentsMatchOracle) {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 500; ++t) {
    const ColoredGraph g = random_z3(rng);
    const Cone3Result r = cone3_components(g);
    EXPECT_EQ(vertex_sets(r.components), vertex_sets(oracle_components(g, Family::kConeLaman)));
    for (const Component& c : r.components) {
      for (EdgeId e : c.edges) {
        EXPECT_TRUE(std::binary_search(c.vertices.begin(), c.vertices.end(), g.edge(e).tail));
        EXPECT_TRUE(std::binary_search(c.vertices.begin(), c.vertices.end(), g.edge(e).head));
      }
    }
    EXPECT_LE(r.lifted_accepted,
              static_cast<std::size_t>(std::max(2 * 3 * g.num_vertices() - 3, 0)));
  }
}

}  // namespace
}  // namespace rigidkit
