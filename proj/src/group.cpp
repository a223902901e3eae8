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

#include "rigidkit/group.hpp"

#include <stdexcept>

namespace rigidkit {

Group Group::Zk(std::int64_t modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("Z/kZ modulus must be at least 2, got " +
                                std::to_string(modulus));
  }
  return Group(GroupKind::kZk, modulus);
}

GroupElement Group::add(const GroupElement& x, const GroupElement& y) const {
  if (kind_ == GroupKind::kZ2) return {x.a + y.a, x.b + y.b};
  std::int64_t s = x.a + y.a;
  if (s >= modulus_) s -= modulus_;
  return {s, 0};
}

GroupElement Group::negate(const GroupElement& x) const {
  if (kind_ == GroupKind::kZ2) return {-x.a, -x.b};
  return {x.a == 0 ? 0 : modulus_ - x.a, 0};
}

bool Group::contains(const GroupElement& x) const {
  if (kind_ == GroupKind::kZ2) {
    return x.a >= -kMaxLatticeCoordinate && x.a <= kMaxLatticeCoordinate &&
           x.b >= -kMaxLatticeCoordinate && x.b <= kMaxLatticeCoordinate;
  }
  return x.b == 0 && x.a >= 0 && x.a < modulus_;
}

GroupElement Group::residue(std::int64_t value) const {
  if (kind_ == GroupKind::kZ2) {
    throw std::logic_error("residue() called on Z^2");
  }
  std::int64_t r = value % modulus_;
  if (r < 0) r += modulus_;
  return {r, 0};
}

std::string Group::describe() const {
  if (kind_ == GroupKind::kZ2) return "Z^2";
  return "Z/" + std::to_string(modulus_) + "Z";
}

std::string Group::format(const GroupElement& x) const {
  if (kind_ == GroupKind::kZ2) {
    return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
  }
  return std::to_string(x.a);
}

}  // namespace rigidkit
