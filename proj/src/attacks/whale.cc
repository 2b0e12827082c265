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

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "wvp/attacks/attacks.h"

namespace wvp {

AttackState AttackState::Initial(size_t num_voters,
                                 std::span<const Units> totals) {
  if (totals.size() < 2) {
    throw std::invalid_argument("a tally needs at least two choices");
  }
  AttackState state;
  state.residual.assign(totals.begin(), totals.end());
  state.undetermined.resize(num_voters);
  std::iota(state.undetermined.begin(), state.undetermined.end(), size_t{0});
  return state;
}

void AttackState::Assign(size_t voter, int choice, Units weight) {
  determined[voter] = choice;
  residual[static_cast<size_t>(choice)] -= weight;
  undetermined.erase(
      std::lower_bound(undetermined.begin(), undetermined.end(), voter));
}

void WhaleStage(std::span<const Units> weights, AttackState& state) {
  std::vector<Units> sorted;
  while (true) {
    const auto& s = state.residual;
    const int leader =
        static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
    sorted.assign(s.begin(), s.end());
    std::nth_element(sorted.begin(), sorted.begin() + 1, sorted.end(),
                     std::greater<>());
    const Units second = sorted[1];

    std::vector<size_t> whales;
    for (size_t i : state.undetermined) {
      if (weights[i] > second) whales.push_back(i);
    }
    if (whales.empty()) break;
    for (size_t i : whales) state.Assign(i, leader, weights[i]);
  }
}

AttackResult WhaleAttack(std::span<const Units> weights,
                         std::span<const Units> totals) {
  AttackState state = AttackState::Initial(weights.size(), totals);
  WhaleStage(weights, state);
  return SummarizeAttack(weights, std::move(state.determined),
                         SubsetSumStatus::kNotRun);
}

std::vector<Units> ToUnits(std::span<const Weight> weights) {
  std::vector<Units> out;
  out.reserve(weights.size());
  for (Weight w : weights) out.push_back(w.units());
  return out;
}

}  // namespace wvp
