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

#ifndef RIGIDKIT_GRAPH_IO_HPP_
#define RIGIDKIT_GRAPH_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rigidkit/colored_graph.hpp"

namespace rigidkit {

/*
 * Text format, one record per line:
 *
 *   group z2            or   group zk <k>
 *   n <count>
 *   e <tail> <head> <a> <b>    (z2)   or   e <tail> <head> <residue>   (zk)
 *
 * '#' starts a comment. Blank lines are skipped. Edge order is kept.
 */
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  // 1-based; 0 when the problem is not tied to one line.
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  std::string detail_;
};

// Parses and validates. Throws ParseError.
ColoredGraph parse_graph(std::istream& in);
ColoredGraph parse_graph(std::string_view text);
ColoredGraph read_graph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const ColoredGraph& graph);
std::string serialize_graph(const ColoredGraph& graph);
void write_graph_file(const std::filesystem::path& path, const ColoredGraph& graph);

}  // namespace rigidkit

#endif  // RIGIDKIT_GRAPH_IO_HPP_
