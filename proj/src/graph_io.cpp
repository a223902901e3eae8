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

#include "rigidkit/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace rigidkit {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t to_integer(std::string_view token, int line, const char* what) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

VertexId to_vertex(std::string_view token, int line) {
  const std::int64_t v = to_integer(token, line, "vertex");
  if (v < 0 || v > std::numeric_limits<VertexId>::max()) {
    throw ParseError(line, "endpoint out of range");
  }
  return static_cast<VertexId>(v);
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line),
      detail_(message) {}

ColoredGraph parse_graph(std::istream& in) {
  std::optional<Group> group;
  std::optional<ColoredGraph> graph;
  std::vector<int> edge_lines;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string_view keyword = tokens[0];
    if (!group) {
      if (keyword != "group") throw ParseError(line, "expected 'group' header");
      if (tokens.size() == 2 && tokens[1] == "z2") {
        group = Group::Z2();
      } else if (tokens.size() == 3 && tokens[1] == "zk") {
        const std::int64_t k = to_integer(tokens[2], line, "modulus");
        if (k < 2) throw ParseError(line, "modulus must be at least 2");
        group = Group::Zk(k);
      } else {
        throw ParseError(line, "expected 'group z2' or 'group zk <k>'");
      }
      continue;
    }
    if (!graph) {
      if (keyword != "n" || tokens.size() != 2) throw ParseError(line, "expected 'n <count>'");
      const std::int64_t n = to_integer(tokens[1], line, "vertex count");
      if (n < 0 || n > std::numeric_limits<VertexId>::max() / 3) {
        throw ParseError(line, "vertex count out of range");
      }
      graph.emplace(*group, static_cast<VertexId>(n));
      continue;
    }
    if (keyword != "e") throw ParseError(line, "unknown record '" + std::string(keyword) + "'");
    const std::size_t expected = group->is_lattice() ? 5 : 4;
    if (tokens.size() != expected) {
      throw ParseError(line, group->is_lattice() ? "expected 'e <tail> <head> <a> <b>'"
                                                 : "expected 'e <tail> <head> <residue>'");
    }
    GroupElement color{to_integer(tokens[3], line, "color"), 0};
    if (group->is_lattice()) color.b = to_integer(tokens[4], line, "color");
    graph->add_edge(to_vertex(tokens[1], line), to_vertex(tokens[2], line), color);
    edge_lines.push_back(line);
  }
  if (!group) throw ParseError(0, "missing 'group' header");
  if (!graph) throw ParseError(0, "missing 'n <count>' line");
  try {
    validate(*graph);
  } catch (const InvalidGraph& bad) {
    throw ParseError(edge_lines[static_cast<std::size_t>(bad.edge())], bad.reason());
  }
  return std::move(*graph);
}

ColoredGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

ColoredGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_graph(in);
}

void write_graph(std::ostream& out, const ColoredGraph& graph) {
  const Group& group = graph.group();
  if (group.is_lattice()) {
    out << "group z2\n";
  } else {
    out << "group zk " << group.modulus() << "\n";
  }
  out << "n " << graph.num_vertices() << "\n";
  for (const ColoredEdge& e : graph.edges()) {
    out << "e " << e.tail << " " << e.head << " " << e.color.a;
    if (group.is_lattice()) out << " " << e.color.b;
    out << "\n";
  }
}

std::string serialize_graph(const ColoredGraph& graph) {
  std::ostringstream out;
  write_graph(out, graph);
  return out.str();
}

void write_graph_file(const std::filesystem::path& path, const ColoredGraph& graph) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_graph(out, graph);
}

}  // namespace rigidkit
