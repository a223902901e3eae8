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

#ifndef RIGIDKIT_COMPONENTS_HPP_
#define RIGIDKIT_COMPONENTS_HPP_

#include <vector>

#include "rigidkit/colored_graph.hpp"

namespace rigidkit {

// A rigid component: its vertex set and the independent edges it spans.
struct Component {
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending

  friend auto operator<=>(const Component&, const Component&) = default;
};

using ComponentReport = std::vector<Component>;

// Sorts vertex and edge lists, then the components themselves.
void canonicalize(ComponentReport& report);

// Vertex sets only, canonical order. Two reports built from different
// independent sets of the same graph agree on these.
std::vector<std::vector<VertexId>> vertex_sets(const ComponentReport& report);

}  // namespace rigidkit

#endif  // RIGIDKIT_COMPONENTS_HPP_
