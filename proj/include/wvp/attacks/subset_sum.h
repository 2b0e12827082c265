// Copyright 2026 The wvprivacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WVP_ATTACKS_SUBSET_SUM_H_
#define WVP_ATTACKS_SUBSET_SUM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wvp/core/weight.h"

namespace wvp {

// All 2^m subset sums of m non-negative items in ascending order, built by
// repeated merging in O(2^m) time. When masks are kept, masks[k] is the
// bitmask (over item positions) of a subset with sum sums[k].
class SubsetSums {
 public:
  static constexpr size_t kMaxItems = 31;

  // Throws std::invalid_argument for more than kMaxItems items or negative
  // items.
  static SubsetSums Enumerate(std::span<const Units> items, bool keep_masks);

  std::span<const Units> sums() const { return sums_; }
  std::span<const uint64_t> masks() const { return masks_; }
  size_t size() const { return sums_.size(); }

 private:
  std::vector<Units> sums_;
  std::vector<uint64_t> masks_;
};

// Meet-in-the-middle split of a set of items: sort positions by weight
// descending (ties by position) and deal them alternately to the two halves.
struct HalfSplit {
  std::vector<size_t> left;
  std::vector<size_t> right;
};
HalfSplit SplitAlternating(std::span<const Units> items);

// Is there l in left, r in right with l + r == target? Two-pointer scan.
bool HasPairSum(const SubsetSums& left, const SubsetSums& right, Units target);

// Does some subset of `items` sum exactly to `target`?
// Meet in the middle: O(2^(m/2)) time and memory.
bool HasSubsetWithSum(std::span<const Units> items, Units target);

// Every subset of `items` summing to `target`, as position masks. Stops after
// `limit` matches and sets *truncated.
std::vector<uint64_t> SubsetsWithSum(std::span<const Units> items,
                                     Units target, size_t limit,
                                     bool* truncated);

enum class Feasibility { kNo, kYes, kUnknown };

// Can `items` be partitioned into |targets| groups whose sums are exactly
// `targets`? Two targets reduce to one subset-sum query; more targets peel
// off one group at a time and recurse. When a peel step would enumerate more
// than `match_limit` candidate groups the answer is kUnknown, never a guess.
Feasibility PartitionFeasibility(std::span<const Units> items,
                                 std::span<const Units> targets,
                                 size_t match_limit = 4096);

}  // namespace wvp

#endif  // WVP_ATTACKS_SUBSET_SUM_H_
