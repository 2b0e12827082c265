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

#ifndef WVP_GAME_EQUILIBRIUM_H_
#define WVP_GAME_EQUILIBRIUM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wvp/game/monte_carlo.h"
#include "wvp/game/policy.h"

namespace wvp {

// Gaussian voter utilities. mu[i] is the mean utility of the "no" outcome
// for voter i: +1 for a voter observed on the winning ("no") side, -1
// otherwise. At zero bribe a voter picks yes with probability
// Phi(-mu[i] / sigma).
struct UtilityModel {
  std::vector<double> mu;
  double sigma = 1.0;

  // mu = +1 for voters who chose `winner`, -1 for the rest.
  static UtilityModel FromChoices(std::span<const int> choices, int winner,
                                  double sigma = 1.0);
};

inline constexpr double kDefaultRelaxation = 0.7;
inline constexpr double kDefaultTolerance = 1e-3;
inline constexpr int kDefaultMaxIterations = 200;
// Pivotality below this is treated as zero when dividing by it.
inline constexpr double kPivotalityFloor = 1e-12;

struct EquilibriumOptions {
  size_t samples = 1000;
  uint64_t seed = 0;
  double relaxation = kDefaultRelaxation;
  double tolerance = kDefaultTolerance;
  int max_iterations = kDefaultMaxIterations;
  // Lower bound on delta inside the incentive. Unset means half of one
  // sample, 0.5 / samples: an estimate of zero from a finite sample only
  // says delta is below the sample resolution. Zero keeps raw estimates.
  std::optional<double> pivotality_floor;
};

// Resolves options.pivotality_floor.
double EffectivePivotalityFloor(const EquilibriumOptions& options);

struct EquilibriumState {
  std::vector<double> delta;
  std::vector<double> delta_std_error;
  std::vector<double> alpha;
  std::vector<double> yes_prob;
  bool converged = false;
  int iterations = 0;
};

// Bribe incentive alpha * b / max(delta, floor) that enters the yes
// threshold. Under WinnerOnly alpha / delta == 1 and the incentive is b
// itself. Otherwise, when max(delta, floor) is below kPivotalityFloor, it
// is +inf when alpha * b > 0 and 0 otherwise.
double BribeIncentive(const TallyPolicy& policy, double alpha, double bribe,
                      double delta, double floor = 0.0);

// Pr[yes] = Phi((incentive - mu) / sigma).
double YesProbability(double incentive, double mu, double sigma);

// Fixed point of delta -> F(p(alpha(delta), delta)) with under-relaxation
// delta <- r * F + (1 - r) * delta. Every iteration reuses the same sample
// matrix, so the map is deterministic. Stops when the largest change in
// the unrelaxed update falls below the tolerance; alpha and p in the result
// are evaluated at the returned delta.
//
// `matrix`, when given, replaces the pivotality stream of options.seed.
//
// Throws std::invalid_argument for mismatched lengths, sigma <= 0, negative
// bribes, a relaxation outside (0, 1] or a non-positive tolerance.
EquilibriumState SolveEquilibrium(std::span<const double> weights,
                                  const UtilityModel& utility,
                                  std::span<const double> bribes,
                                  const TallyPolicy& policy,
                                  const EquilibriumOptions& options,
                                  const UniformMatrix* matrix = nullptr);

}  // namespace wvp

#endif  // WVP_GAME_EQUILIBRIUM_H_
