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

AttackResult NoisedWhaleAttack(std::span<const double> weights,
                               std::span<const double> noised_totals,
                               std::optional<int> true_winner,
                               double perturbation_d, double total_weight) {
  if (noised_totals.size() < 2) {
    throw std::invalid_argument("a tally needs at least two choices");
  }
  if (true_winner &&
      (*true_winner < 0 ||
       static_cast<size_t>(*true_winner) >= noised_totals.size())) {
    throw std::invalid_argument("true winner index out of range");
  }
  const double slack = perturbation_d * total_weight;
  std::vector<double> s(noised_totals.begin(), noised_totals.end());
  std::vector<size_t> undetermined(weights.size());
  std::iota(undetermined.begin(), undetermined.end(), size_t{0});
  std::map<size_t, int> determined;

  auto assign = [&](size_t i, int choice) {
    determined[i] = choice;
    s[static_cast<size_t>(choice)] -= weights[i];
  };

  // A voter with more than half of W decides the vote, so the published
  // winner is theirs.
  if (true_winner) {
    for (size_t i : undetermined) {
      if (weights[i] > total_weight / 2) assign(i, *true_winner);
    }
  }

  std::vector<double> sorted;
  while (true) {
    std::erase_if(undetermined, [&](size_t i) { return determined.count(i); });
    const int leader =
        static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
    sorted.assign(s.begin(), s.end());
    std::nth_element(sorted.begin(), sorted.begin() + 1, sorted.end(),
                     std::greater<>());
    const double threshold = sorted[1] + slack;

    std::vector<size_t> whales;
    for (size_t i : undetermined) {
      if (weights[i] > threshold) whales.push_back(i);
    }
    if (whales.empty()) break;
    for (size_t i : whales) assign(i, leader);
  }
  return SummarizeAttack(weights, std::move(determined),
                         SubsetSumStatus::kNotRun);
}

}  // namespace wvp
