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

#include "rigidkit/range_min.hpp"

#include <algorithm>
#include <bit>

namespace rigidkit {

RangeMinIndex::RangeMinIndex(std::vector<std::int64_t> values)
    : values_(std::move(values)) {
  const std::size_t blocks = (values_.size() + kBlockSize - 1) / kBlockSize;
  if (blocks == 0) return;
  std::vector<std::uint32_t> base(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t first = b * kBlockSize;
    const std::size_t last = std::min(values_.size(), first + kBlockSize) - 1;
    base[b] = static_cast<std::uint32_t>(scan(first, last));
  }
  table_.push_back(std::move(base));
  for (std::size_t width = 2; width <= blocks; width *= 2) {
    const auto& prev = table_.back();
    std::vector<std::uint32_t> row(blocks - width + 1);
    const std::size_t half = width / 2;
    for (std::size_t b = 0; b < row.size(); ++b) {
      row[b] = static_cast<std::uint32_t>(better(prev[b], prev[b + half]));
    }
    table_.push_back(std::move(row));
  }
}

std::size_t RangeMinIndex::scan(std::size_t first, std::size_t last) const {
  std::size_t best = first;
  for (std::size_t i = first + 1; i <= last; ++i) {
    if (values_[i] < values_[best]) best = i;
  }
  return best;
}

std::size_t RangeMinIndex::argmin(std::size_t first, std::size_t last) const {
  const std::size_t first_block = first / kBlockSize;
  const std::size_t last_block = last / kBlockSize;
  if (first_block == last_block) return scan(first, last);

  std::size_t best = scan(first, (first_block + 1) * kBlockSize - 1);
  if (last_block - first_block >= 2) {
    const std::size_t lo = first_block + 1;
    const std::size_t count = last_block - lo;
    const std::size_t level = std::bit_width(count) - 1;
    const auto& row = table_[level];
    best = better(best, row[lo]);
    best = better(best, row[last_block - (std::size_t{1} << level)]);
  }
  return better(best, scan(last_block * kBlockSize, last));
}

}  // namespace rigidkit
