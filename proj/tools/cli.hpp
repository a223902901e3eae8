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

#ifndef RIGIDKIT_TOOLS_CLI_HPP_
#define RIGIDKIT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigidkit/colored_graph.hpp"
#include "rigidkit/components.hpp"
#include "rigidkit/development.hpp"
#include "rigidkit/gamma_image.hpp"

namespace rigidkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

struct Discard {
  EdgeId edge = 0;
  std::string reason;
};

// Everything a subcommand reports. Serialized with a fixed key set.
struct ResultDocument {
  std::string command;
  std::optional<std::string> model;
  std::string algorithm;
  Group group = Group::Z2();
  VertexId n = 0;
  EdgeId m = 0;
  std::optional<std::string> verdict;
  std::optional<std::size_t> processed;
  std::vector<EdgeId> kept;
  std::vector<Discard> discarded;
  ComponentReport components;
  std::vector<ComponentImage> images;
  std::vector<LiftedSubgraph> asymmetric_components;
  std::vector<std::string> mismatches;
  double total_ms = 0.0;
};

nlohmann::json to_json(const ResultDocument& doc);
void write_text(std::ostream& out, const ResultDocument& doc);

// Entry point shared by the executable and the tests. args[0] is the program
// name. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigidkit::cli

#endif  // RIGIDKIT_TOOLS_CLI_HPP_
