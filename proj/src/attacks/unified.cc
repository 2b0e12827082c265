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

#include <vector>

#include "wvp/attacks/attacks.h"
#include "wvp/attacks/subset_sum.h"

namespace wvp {
namespace {

// Which choices voter i could have made given the other undetermined voters
// `others` and the residual totals. kUnknown answers count as possible.
std::vector<int> PossibleChoices(Units w_i, std::span<const Units> others,
                                 const std::vector<Units>& residual) {
  std::vector<int> possible;
  const size_t num_choices = residual.size();
  if (num_choices == 2) {
    // With two targets, a group summing to s_j - w_i leaves a complement
    // that sums to the other target exactly when the totals balance.
    Units others_sum = 0;
    for (Units w : others) others_sum += w;
    if (others_sum + w_i != residual[0] + residual[1]) return possible;
    const HalfSplit split = SplitAlternating(others);
    std::vector<Units> left, right;
    for (size_t p : split.left) left.push_back(others[p]);
    for (size_t p : split.right) right.push_back(others[p]);
    const auto left_sums = SubsetSums::Enumerate(left, false);
    const auto right_sums = SubsetSums::Enumerate(right, false);
    for (int j = 0; j < 2; ++j) {
      const Units target = residual[static_cast<size_t>(j)] - w_i;
      if (target >= 0 && HasPairSum(left_sums, right_sums, target)) {
        possible.push_back(j);
      }
    }
    return possible;
  }
  std::vector<Units> targets = residual;
  for (size_t j = 0; j < num_choices; ++j) {
    if (residual[j] < w_i) continue;
    targets[j] = residual[j] - w_i;
    if (PartitionFeasibility(others, targets) != Feasibility::kNo) {
      possible.push_back(static_cast<int>(j));
    }
    targets[j] = residual[j];
  }
  return possible;
}

}  // namespace

SubsetSumStatus SubsetSumStage(std::span<const Units> weights,
                               AttackState& state, size_t max_voters) {
  if (state.undetermined.size() > max_voters) {
    return SubsetSumStatus::kSkippedTooLarge;
  }
  const std::vector<size_t> pass = state.undetermined;
  std::vector<Units> others;
  for (size_t i : pass) {
    others.clear();
    for (size_t k : state.undetermined) {
      if (k != i) others.push_back(weights[k]);
    }
    const auto possible = PossibleChoices(weights[i], others, state.residual);
    if (possible.size() == 1) state.Assign(i, possible.front(), weights[i]);
  }
  return SubsetSumStatus::kCompleted;
}

AttackResult SubsetSumAttack(std::span<const Units> weights,
                             std::span<const Units> residual_totals,
                             size_t max_voters) {
  AttackState state = AttackState::Initial(weights.size(), residual_totals);
  const auto status = SubsetSumStage(weights, state, max_voters);
  return SummarizeAttack(weights, std::move(state.determined), status);
}

AttackResult UnifiedAttack(std::span<const Units> weights,
                           std::span<const Units> totals, size_t max_voters) {
  AttackState state = AttackState::Initial(weights.size(), totals);
  WhaleStage(weights, state);
  const auto status = SubsetSumStage(weights, state, max_voters);
  return SummarizeAttack(weights, std::move(state.determined), status);
}

}  // namespace wvp
