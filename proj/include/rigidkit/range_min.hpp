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

#ifndef RIGIDKIT_RANGE_MIN_HPP_
#define RIGIDKIT_RANGE_MIN_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rigidkit {

/*
 * Range-minimum index: a sparse table over fixed-size block minima plus a
 * linear scan inside the (at most two) partial blocks of a query. Linear
 * space and preprocessing; queries touch at most 2 * kBlockSize entries.
 */
class RangeMinIndex {
 public:
  static constexpr std::size_t kBlockSize = 16;

  RangeMinIndex() = default;
  explicit RangeMinIndex(std::vector<std::int64_t> values);

  std::size_t size() const { return values_.size(); }
  std::int64_t value(std::size_t i) const { return values_[i]; }

  // Index of the leftmost minimum in the closed range [first, last].
  // Assumes first <= last < size().
  std::size_t argmin(std::size_t first, std::size_t last) const;

  // Address of the first value a query starting or ending at i scans.
  const void* block_address(std::size_t i) const {
    return values_.data() + (i / kBlockSize) * kBlockSize;
  }

 private:
  std::size_t scan(std::size_t first, std::size_t last) const;
  std::size_t better(std::size_t x, std::size_t y) const {
    return values_[y] < values_[x] ? y : x;
  }

  std::vector<std::int64_t> values_;
  // table_[k][b]: argmin over blocks b .. b + 2^k - 1
  std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace rigidkit

#endif  // RIGIDKIT_RANGE_MIN_HPP_
