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

#include "rigidkit/components.hpp"

#include <algorithm>

namespace rigidkit {

void canonicalize(ComponentReport& report) {
  for (Component& c : report) {
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end());
  }
  std::sort(report.begin(), report.end());
}

std::vector<std::vector<VertexId>> vertex_sets(const ComponentReport& report) {
  std::vector<std::vector<VertexId>> sets;
  sets.reserve(report.size());
  for (const Component& c : report) {
    sets.push_back(c.vertices);
    std::sort(sets.back().begin(), sets.back().end());
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace rigidkit
