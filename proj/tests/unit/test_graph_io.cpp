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

#include <filesystem>
#include <random>
#include <sstream>

#include "rigidkit/generators.hpp"
#include "rigidkit/graph_io.hpp"
#include "test_support.hpp"

namespace rigidkit {
namespace {

int error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(GraphIo, ParsesBothGroups) {
  const ColoredGraph g = parse_graph(
      "# doubled edge\n"
      "group z2\n"
      "n 2\n"
      "\n"
      "e 0 1 0 0   # zero\n"
      "e 0 1 1 0\n");
  EXPECT_EQ(g, testing::z2(2, {{0, 1, 0, 0}, {0, 1, 1, 0}}));
  const ColoredGraph h = parse_graph("group zk 3\nn 1\ne 0 0 1\n");
  EXPECT_EQ(h, testing::zk(3, 1, {{0, 0, 1}}));
  EXPECT_EQ(parse_graph("group zk 5\nn 0\n").num_vertices(), 0);
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("n 2\n"), 1);
  EXPECT_EQ(error_line("group z3\nn 2\n"), 1);
  EXPECT_EQ(error_line("group zk 1\nn 2\n"), 1);
  EXPECT_EQ(error_line("group z2\n# c\nm 2\n"), 3);
  EXPECT_EQ(error_line("group z2\nn -1\n"), 2);
  EXPECT_EQ(error_line("group z2\nn 2\ne 0 1 0\n"), 3);
  EXPECT_EQ(error_line("group zk 3\nn 2\ne 0 1 0 0\n"), 3);
  EXPECT_EQ(error_line("group z2\nn 2\ne 0 1 0 0\n\ne 0 5 0 0\n"), 5);
  EXPECT_EQ(error_line("group zk 3\nn 2\ne 0 1 3\n"), 3);
  EXPECT_EQ(error_line("group z2\nn 2\ne 0 1 x 0\n"), 3);
  EXPECT_EQ(error_line("group z2\nn 2\nf 0 1 0 0\n"), 3);
  EXPECT_EQ(error_line("group z2\n"), 0);
  EXPECT_EQ(error_line(""), 0);
  try {
    parse_graph("group z2\nn 2\ne 0 5 0 0\n");
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "line 3: endpoint out of range");
    EXPECT_EQ(e.detail(), "endpoint out of range");
  }
}

TEST(GraphIo, MissingFile) {
  EXPECT_THROW(read_graph_file("/nonexistent/rigidkit.graph"), ParseError);
}

TEST(GraphIo, SerializationIsCanonical) {
  const ColoredGraph g = testing::zk(4, 3, {{0, 1, 3}, {2, 2, 0}});
  EXPECT_EQ(serialize_graph(g), "group zk 4\nn 3\ne 0 1 3\ne 2 2 0\n");
  EXPECT_EQ(serialize_graph(testing::z2(1, {{0, 0, -1, 2}})), "group z2\nn 1\ne 0 0 -1 2\n");
}

TEST(GraphIoProperty, RoundTrip) {
  std::mt19937_64 rng(89);
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "rigidkit_io_test";
  std::filesystem::create_directories(dir);
  for (int t = 0; t < 500; ++t) {
    GenSpec spec;
    spec.seed = rng();
    spec.n = static_cast<VertexId>(1 + rng() % 20);
    spec.m = static_cast<EdgeId>(rng() % 40);
    if (rng() % 2) spec.group = Group::Zk(2 + static_cast<std::int64_t>(rng() % 9));
    spec.color_low = -1000;
    spec.color_high = 1000;
    const ColoredGraph g = random_colored(spec);
    const std::string text = serialize_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);
    const std::filesystem::path file = dir / "g.graph";
    write_graph_file(file, g);
    EXPECT_EQ(read_graph_file(file), g);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace rigidkit
