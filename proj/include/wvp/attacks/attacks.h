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

#ifndef WVP_ATTACKS_ATTACKS_H_
#define WVP_ATTACKS_ATTACKS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wvp/attacks/attack_result.h"
#include "wvp/core/tally.h"
#include "wvp/core/weight.h"

namespace wvp {

// The "practical for n <~ 45" limit of the meet-in-the-middle stage.
inline constexpr size_t kDefaultSubsetSumCap = 45;

// Progress of an exact-tally attack: which voters are pinned down and what
// remains of each per-choice total once their weight is removed.
struct AttackState {
  std::vector<Units> residual;
  std::vector<size_t> undetermined;  // ascending
  std::map<size_t, int> determined;

  static AttackState Initial(size_t num_voters, std::span<const Units> totals);
  void Assign(size_t voter, int choice, Units weight);
};

// Iterated whale deduction. Each round takes the leading choice j* and the
// second-largest total s2; every undetermined voter heavier than s2 cannot
// belong to any other choice and is assigned j*, and their weight leaves
// s_{j*}. Rounds repeat (the leader may flip) until no voter exceeds s2.
void WhaleStage(std::span<const Units> weights, AttackState& state);

// One pass over the undetermined voters. For voter i, choice j is possible
// when the remaining voters can make up s_j - w_i while the rest fill the
// other choices exactly; i is assigned when exactly one choice is possible.
// Returns kSkippedTooLarge, leaving the state untouched, when more than
// `max_voters` voters are undetermined.
SubsetSumStatus SubsetSumStage(std::span<const Units> weights,
                               AttackState& state,
                               size_t max_voters = kDefaultSubsetSumCap);

AttackResult WhaleAttack(std::span<const Units> weights,
                         std::span<const Units> totals);

// Subset-sum stage alone; `weights` are the voters still in play and
// `residual_totals` the tally they must explain.
AttackResult SubsetSumAttack(std::span<const Units> weights,
                             std::span<const Units> residual_totals,
                             size_t max_voters = kDefaultSubsetSumCap);

// Whale stage to its fixpoint, then the subset-sum stage on what is left.
AttackResult UnifiedAttack(std::span<const Units> weights,
                           std::span<const Units> totals,
                           size_t max_voters = kDefaultSubsetSumCap);

// Whale deduction against noised totals. A voter is excluded from choice j
// only when w_i > s~_j + d*W, so the iteration assigns j* to voters heavier
// than s~_2 + d*W. When the true winner is published, a voter holding more
// than half of W is assigned to it outright. There is no subset-sum stage:
// noised totals are not exact sums.
AttackResult NoisedWhaleAttack(std::span<const double> weights,
                               std::span<const double> noised_totals,
                               std::optional<int> true_winner,
                               double perturbation_d, double total_weight);

std::vector<Units> ToUnits(std::span<const Weight> weights);

}  // namespace wvp

#endif  // WVP_ATTACKS_ATTACKS_H_
