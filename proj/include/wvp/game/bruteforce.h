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

#ifndef WVP_GAME_BRUTEFORCE_H_
#define WVP_GAME_BRUTEFORCE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "wvp/game/policy.h"

namespace wvp {

inline constexpr size_t kMaxBruteForceVoters = 16;

// Grid for integrating over a continuous Laplace-noised outcome, in units
// of the noise scale b.
struct Discretization {
  double half_width = 12.0;  // grid extends this many b past the extreme means
  double step = 1.0 / 200;
};

// Voter i's view of one policy, obtained by enumerating every yes/no profile
// of the other voters (X_j ~ Bernoulli(p_j)). Yes wins iff the yes total is
// at least W/2.
//   alpha_star  sum over outcomes of max(P(o | yes) - P(o | no), 0)
//   epd         sum over outcomes of P(o) * PD(o), where
//               PD(o) = min over choices c with prior > 0 of P(o | c) / P(o)
//   pivotality  Pr[sum_{j != i} w_j X_j in [W/2 - w_i, W/2)]
// For discrete policies outcome_pd and outcome_prob list every outcome with
// P(o) > 0; they stay empty for noised policies, whose sums are integrals
// over a grid.
struct DeniabilityReport {
  double alpha_star = 0.0;
  double epd = 0.0;
  double pivotality = 0.0;
  std::vector<double> outcome_pd;
  std::vector<double> outcome_prob;
};

// Throws std::invalid_argument for more than kMaxBruteForceVoters voters,
// mismatched lengths, probabilities outside [0, 1] or voter out of range.
DeniabilityReport AnalyzeVoter(std::span<const double> weights,
                               std::span<const double> yes_probs, size_t voter,
                               const TallyPolicy& policy,
                               const Discretization& grid = {});

// Density of sum_k prob[k] * Laplace(location[k], scale) at start + m * step
// for m in [0, count). `locations` must be sorted ascending.
std::vector<double> LaplaceMixtureOnGrid(std::span<const double> locations,
                                         std::span<const double> probs,
                                         double scale, double start,
                                         double step, size_t count);

}  // namespace wvp

#endif  // WVP_GAME_BRUTEFORCE_H_
