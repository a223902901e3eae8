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

#ifndef RIGIDKIT_GROUP_HPP_
#define RIGIDKIT_GROUP_HPP_

#include <compare>
#include <cstdint>
#include <string>

namespace rigidkit {

// Input colors in Z^2 are bounded by this magnitude per coordinate, so sums
// along any path of at most 2^31 edges stay exact in 64-bit arithmetic.
inline constexpr std::int64_t kMaxLatticeCoordinate = std::int64_t{1} << 30;

enum class GroupKind { kZ2, kZk };

// An element of Z^2 (a, b) or of Z/kZ (residue a, with b == 0).
struct GroupElement {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Descriptor of the abelian group colors live in. Arithmetic goes through the
// descriptor because Z/kZ needs the modulus.
class Group {
 public:
  static Group Z2() { return Group(GroupKind::kZ2, 0); }
  // Throws std::invalid_argument when modulus < 2.
  static Group Zk(std::int64_t modulus);

  GroupKind kind() const { return kind_; }
  // Zero for Z^2.
  std::int64_t modulus() const { return modulus_; }
  bool is_lattice() const { return kind_ == GroupKind::kZ2; }

  GroupElement identity() const { return {}; }
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement negate(const GroupElement& x) const;
  GroupElement subtract(const GroupElement& x, const GroupElement& y) const {
    return add(x, negate(y));
  }
  bool is_identity(const GroupElement& x) const { return x.a == 0 && x.b == 0; }

  // True when x is a canonical element of this group: a reduced residue for
  // Z/kZ, or a pair within the coordinate bound for Z^2.
  bool contains(const GroupElement& x) const;

  // Z/kZ element from any integer, reduced into [0, k).
  GroupElement residue(std::int64_t value) const;

  std::string describe() const;
  std::string format(const GroupElement& x) const;

  friend bool operator==(const Group&, const Group&) = default;

 private:
  Group(GroupKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  GroupKind kind_;
  std::int64_t modulus_;
};

}  // namespace rigidkit

#endif  // RIGIDKIT_GROUP_HPP_
