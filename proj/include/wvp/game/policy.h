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

#ifndef WVP_GAME_POLICY_H_
#define WVP_GAME_POLICY_H_

#include <string>
#include <variant>

#include "wvp/core/noise.h"

namespace wvp {

struct FullDisclosure {};
struct WinnerOnly {};
// Noised yes total plus the true winner.
struct CorrectedNoised {
  NoiseSpec noise;
};
// Laplace mechanism with scale w_max / epsilon, no winner attached.
struct DpNoised {
  double epsilon = 1.0;
};

using TallyPolicy =
    std::variant<FullDisclosure, WinnerOnly, CorrectedNoised, DpNoised>;

std::string PolicyName(const TallyPolicy& policy);

// Whether the bribe margin depends on the voter's pivotality.
bool MarginDependsOnPivotality(const TallyPolicy& policy);

// Bribe margin under the optimal condition function (or its upper bound):
//   FullDisclosure   1
//   WinnerOnly       pivotality
//   CorrectedNoised  pivotality + (1 - pivotality) * (1 - exp(-w / (2b)))
//   DpNoised         1 - exp(-epsilon)
// The corrected-noised expression is an upper bound, so budgets computed
// from it are lower bounds. b == 0 is the noiseless limit, where the
// distance term is 1.
//
// Throws std::invalid_argument for pivotality outside [0, 1], negative
// weight, negative noise scale or non-positive epsilon.
double BribeMargin(const TallyPolicy& policy, double pivotality,
                   double weight);

// Total variation distance between Laplace(0, b) and Laplace(w, b).
double LaplaceShiftDistance(double weight, double scale);

}  // namespace wvp

#endif  // WVP_GAME_POLICY_H_
