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

#include "wvp/attacks/attack_result.h"

#include <utility>

namespace wvp {
namespace {

template <typename T, typename ToDouble>
AttackResult Summarize(std::span<const T> weights,
                       std::map<size_t, int> determined,
                       SubsetSumStatus subset_sum, ToDouble to_double) {
  AttackResult out;
  T total{};
  T leaked{};
  for (size_t i = 0; i < weights.size(); ++i) {
    total += weights[i];
    if (determined.count(i)) {
      leaked += weights[i];
    } else {
      out.undetermined.push_back(i);
    }
  }
  const size_t n = weights.size();
  out.ballots_leaked_pct =
      n == 0 ? 0.0 : 100.0 * static_cast<double>(determined.size()) / n;
  out.weight_leaked_pct =
      total == T{} ? 0.0 : 100.0 * to_double(leaked, total);
  out.deniability_broken = !determined.empty();
  out.full_recovery = n > 0 && determined.size() == n;
  out.determined = std::move(determined);
  out.subset_sum = subset_sum;
  return out;
}

}  // namespace

AttackResult SummarizeAttack(std::span<const Units> weights,
                             std::map<size_t, int> determined,
                             SubsetSumStatus subset_sum) {
  return Summarize(weights, std::move(determined), subset_sum,
                   [](Units part, Units whole) {
                     return static_cast<double>(
                         static_cast<long double>(part) /
                         static_cast<long double>(whole));
                   });
}

AttackResult SummarizeAttack(std::span<const double> weights,
                             std::map<size_t, int> determined,
                             SubsetSumStatus subset_sum) {
  return Summarize(weights, std::move(determined), subset_sum,
                   [](double part, double whole) { return part / whole; });
}

}  // namespace wvp
