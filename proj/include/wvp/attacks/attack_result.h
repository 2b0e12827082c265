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

#ifndef WVP_ATTACKS_ATTACK_RESULT_H_
#define WVP_ATTACKS_ATTACK_RESULT_H_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "wvp/core/weight.h"

namespace wvp {

enum class SubsetSumStatus {
  kNotRun,
  kCompleted,
  // More undetermined voters than the configured cap; nothing was attempted.
  kSkippedTooLarge,
};

// Ballots recovered from a published tally.
//
// `determined` and `undetermined` partition the voter indices; leak
// percentages are relative to all voters and to the total weight.
struct AttackResult {
  std::map<size_t, int> determined;
  std::vector<size_t> undetermined;
  double ballots_leaked_pct = 0.0;
  double weight_leaked_pct = 0.0;
  bool deniability_broken = false;
  bool full_recovery = false;
  SubsetSumStatus subset_sum = SubsetSumStatus::kNotRun;
};

// Fills the derived fields from `determined`.
AttackResult SummarizeAttack(std::span<const Units> weights,
                             std::map<size_t, int> determined,
                             SubsetSumStatus subset_sum);
AttackResult SummarizeAttack(std::span<const double> weights,
                             std::map<size_t, int> determined,
                             SubsetSumStatus subset_sum);

}  // namespace wvp

#endif  // WVP_ATTACKS_ATTACK_RESULT_H_
