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

#include "rigidkit/group.hpp"

namespace rigidkit {
namespace {

GroupElement sample(const Group& g, std::mt19937_64& rng) {
  if (g.is_lattice()) {
    std::uniform_int_distribution<std::int64_t> c(-1000, 1000);
    return {c(rng), c(rng)};
  }
  std::uniform_int_distribution<std::int64_t> r(0, g.modulus() - 1);
  return {r(rng), 0};
}

TEST(Group, RejectsSmallModulus) {
  EXPECT_THROW(Group::Zk(1), std::invalid_argument);
  EXPECT_THROW(Group::Zk(0), std::invalid_argument);
  EXPECT_NO_THROW(Group::Zk(2));
}

TEST(Group, CyclicArithmeticStaysReduced) {
  const Group g = Group::Zk(5);
  EXPECT_EQ(g.add({3, 0}, {4, 0}), (GroupElement{2, 0}));
  EXPECT_EQ(g.negate({2, 0}), (GroupElement{3, 0}));
  EXPECT_EQ(g.negate({0, 0}), (GroupElement{0, 0}));
  EXPECT_EQ(g.residue(-7), (GroupElement{3, 0}));
  EXPECT_FALSE(g.contains({5, 0}));
  EXPECT_FALSE(g.contains({-1, 0}));
  EXPECT_TRUE(g.contains({4, 0}));
}

TEST(Group, LatticeBounds) {
  const Group g = Group::Z2();
  EXPECT_TRUE(g.contains({kMaxLatticeCoordinate, -kMaxLatticeCoordinate}));
  EXPECT_FALSE(g.contains({kMaxLatticeCoordinate + 1, 0}));
  EXPECT_EQ(g.describe(), "Z^2");
  EXPECT_EQ(Group::Zk(7).describe(), "Z/7Z");
  EXPECT_THROW(g.residue(3), std::logic_error);
}

TEST(GroupProperty, AbelianLaws) {
  std::mt19937_64 rng(7);
  for (const Group& g : {Group::Z2(), Group::Zk(2), Group::Zk(3), Group::Zk(12)}) {
    for (int t = 0; t < 2000; ++t) {
      const GroupElement x = sample(g, rng), y = sample(g, rng), z = sample(g, rng);
      EXPECT_EQ(g.add(g.add(x, y), z), g.add(x, g.add(y, z)));
      EXPECT_EQ(g.add(x, y), g.add(y, x));
      EXPECT_TRUE(g.is_identity(g.add(x, g.negate(x))));
      EXPECT_EQ(g.add(x, g.identity()), x);
      if (!g.is_lattice()) {
        const GroupElement s = g.add(x, y);
        EXPECT_TRUE(s.a >= 0 && s.a < g.modulus() && s.b == 0);
        EXPECT_TRUE(g.contains(g.negate(x)));
      }
    }
  }
}

}  // namespace
}  // namespace rigidkit
