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

#include "wvp/attacks/subset_sum.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wvp {
namespace {

constexpr size_t kMaxSplitItems = 2 * SubsetSums::kMaxItems;

std::vector<Units> Gather(std::span<const Units> items,
                          const std::vector<size_t>& positions) {
  std::vector<Units> out;
  out.reserve(positions.size());
  for (size_t p : positions) out.push_back(items[p]);
  return out;
}

uint64_t ToItemMask(uint64_t half_mask, const std::vector<size_t>& positions) {
  uint64_t out = 0;
  for (size_t b = 0; half_mask != 0; ++b, half_mask >>= 1) {
    if (half_mask & 1) out |= uint64_t{1} << positions[b];
  }
  return out;
}

void CheckSplittable(std::span<const Units> items) {
  if (items.size() > kMaxSplitItems) {
    throw std::invalid_argument("subset-sum instance has more than " +
                                std::to_string(kMaxSplitItems) + " items");
  }
}

}  // namespace

SubsetSums SubsetSums::Enumerate(std::span<const Units> items,
                                 bool keep_masks) {
  if (items.size() > kMaxItems) {
    throw std::invalid_argument("too many items for one half enumeration");
  }
  SubsetSums out;
  const size_t total = size_t{1} << items.size();
  out.sums_.reserve(total);
  out.sums_.push_back(0);
  if (keep_masks) {
    out.masks_.reserve(total);
    out.masks_.push_back(0);
  }
  std::vector<Units> merged_sums;
  std::vector<uint64_t> merged_masks;
  merged_sums.reserve(total);
  if (keep_masks) merged_masks.reserve(total);

  for (size_t k = 0; k < items.size(); ++k) {
    const Units item = items[k];
    if (item < 0) throw std::invalid_argument("negative subset-sum item");
    const uint64_t bit = uint64_t{1} << k;
    const size_t count = out.sums_.size();
    merged_sums.clear();
    merged_masks.clear();
    // Merge the current sorted list with itself shifted by `item`.
    size_t a = 0;
    size_t b = 0;
    while (a < count || b < count) {
      const bool take_a =
          b == count || (a < count && out.sums_[a] <= out.sums_[b] + item);
      if (take_a) {
        merged_sums.push_back(out.sums_[a]);
        if (keep_masks) merged_masks.push_back(out.masks_[a]);
        ++a;
      } else {
        merged_sums.push_back(out.sums_[b] + item);
        if (keep_masks) merged_masks.push_back(out.masks_[b] | bit);
        ++b;
      }
    }
    out.sums_.swap(merged_sums);
    if (keep_masks) out.masks_.swap(merged_masks);
  }
  return out;
}

HalfSplit SplitAlternating(std::span<const Units> items) {
  std::vector<size_t> order(items.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return items[a] > items[b];
  });
  HalfSplit split;
  for (size_t k = 0; k < order.size(); ++k) {
    (k % 2 == 0 ? split.left : split.right).push_back(order[k]);
  }
  return split;
}

bool HasPairSum(const SubsetSums& left, const SubsetSums& right,
                Units target) {
  const auto l = left.sums();
  const auto r = right.sums();
  if (l.empty() || r.empty()) return false;
  size_t i = 0;
  size_t j = r.size();
  while (i < l.size() && j > 0) {
    const Units s = l[i] + r[j - 1];
    if (s == target) return true;
    if (s < target) {
      ++i;
    } else {
      --j;
    }
  }
  return false;
}

bool HasSubsetWithSum(std::span<const Units> items, Units target) {
  CheckSplittable(items);
  if (target < 0) return false;
  const HalfSplit split = SplitAlternating(items);
  const auto left = SubsetSums::Enumerate(Gather(items, split.left), false);
  const auto right = SubsetSums::Enumerate(Gather(items, split.right), false);
  return HasPairSum(left, right, target);
}

std::vector<uint64_t> SubsetsWithSum(std::span<const Units> items,
                                     Units target, size_t limit,
                                     bool* truncated) {
  CheckSplittable(items);
  *truncated = false;
  std::vector<uint64_t> found;
  if (target < 0) return found;
  const HalfSplit split = SplitAlternating(items);
  const auto left = SubsetSums::Enumerate(Gather(items, split.left), true);
  const auto right = SubsetSums::Enumerate(Gather(items, split.right), true);
  const auto ls = left.sums();
  const auto rs = right.sums();
  size_t i = 0;
  size_t j = rs.size();
  while (i < ls.size() && j > 0) {
    const Units s = ls[i] + rs[j - 1];
    if (s < target) {
      ++i;
      continue;
    }
    if (s > target) {
      --j;
      continue;
    }
    // Runs of equal sums on both sides; every cross pair matches.
    size_t i_end = i;
    while (i_end < ls.size() && ls[i_end] == ls[i]) ++i_end;
    size_t j_begin = j - 1;
    while (j_begin > 0 && rs[j_begin - 1] == rs[j - 1]) --j_begin;
    for (size_t a = i; a < i_end; ++a) {
      const uint64_t left_mask = ToItemMask(left.masks()[a], split.left);
      for (size_t b = j_begin; b < j; ++b) {
        if (found.size() == limit) {
          *truncated = true;
          return found;
        }
        found.push_back(left_mask | ToItemMask(right.masks()[b], split.right));
      }
    }
    i = i_end;
    j = j_begin;
  }
  return found;
}

Feasibility PartitionFeasibility(std::span<const Units> items,
                                 std::span<const Units> targets,
                                 size_t match_limit) {
  if (targets.empty()) return items.empty() ? Feasibility::kYes
                                            : Feasibility::kNo;
  Units item_sum = 0;
  for (Units w : items) item_sum += w;
  Units target_sum = 0;
  for (Units t : targets) {
    if (t < 0) return Feasibility::kNo;
    target_sum += t;
  }
  if (item_sum != target_sum) return Feasibility::kNo;
  if (targets.size() == 1) return Feasibility::kYes;
  if (targets.size() == 2) {
    return HasSubsetWithSum(items, targets[0]) ? Feasibility::kYes
                                               : Feasibility::kNo;
  }

  bool truncated = false;
  const auto groups = SubsetsWithSum(items, targets[0], match_limit, &truncated);
  bool unknown = truncated;
  std::vector<Units> rest;
  rest.reserve(items.size());
  for (uint64_t mask : groups) {
    rest.clear();
    for (size_t p = 0; p < items.size(); ++p) {
      if (!(mask >> p & 1)) rest.push_back(items[p]);
    }
    switch (PartitionFeasibility(rest, targets.subspan(1), match_limit)) {
      case Feasibility::kYes:
        return Feasibility::kYes;
      case Feasibility::kUnknown:
        unknown = true;
        break;
      case Feasibility::kNo:
        break;
    }
  }
  return unknown ? Feasibility::kUnknown : Feasibility::kNo;
}

}  // namespace wvp
