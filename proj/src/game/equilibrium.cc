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

#include "wvp/game/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "wvp/game/normal.h"

namespace wvp {

UtilityModel UtilityModel::FromChoices(std::span<const int> choices,
                                       int winner, double sigma) {
  UtilityModel model;
  model.sigma = sigma;
  model.mu.reserve(choices.size());
  for (int c : choices) model.mu.push_back(c == winner ? 1.0 : -1.0);
  return model;
}

double EffectivePivotalityFloor(const EquilibriumOptions& options) {
  if (options.pivotality_floor) return *options.pivotality_floor;
  return options.samples > 0 ? 0.5 / static_cast<double>(options.samples)
                             : 0.0;
}

double BribeIncentive(const TallyPolicy& policy, double alpha, double bribe,
                      double delta, double floor) {
  if (bribe == 0) return 0.0;
  if (std::holds_alternative<WinnerOnly>(policy)) return bribe;
  delta = std::max(delta, floor);
  if (delta >= kPivotalityFloor) return alpha * bribe / delta;
  return alpha * bribe > 0 ? std::numeric_limits<double>::infinity() : 0.0;
}

double YesProbability(double incentive, double mu, double sigma) {
  if (std::isinf(incentive)) return incentive > 0 ? 1.0 : 0.0;
  return NormalCdf((incentive - mu) / sigma);
}

namespace {

void UpdateChoices(std::span<const double> weights,
                   const UtilityModel& utility, std::span<const double> bribes,
                   const TallyPolicy& policy, double floor,
                   EquilibriumState& state) {
  for (size_t i = 0; i < weights.size(); ++i) {
    state.alpha[i] = BribeMargin(policy, state.delta[i], weights[i]);
    const double incentive =
        BribeIncentive(policy, state.alpha[i], bribes[i], state.delta[i], floor);
    state.yes_prob[i] = YesProbability(incentive, utility.mu[i], utility.sigma);
  }
}

}  // namespace

EquilibriumState SolveEquilibrium(std::span<const double> weights,
                                  const UtilityModel& utility,
                                  std::span<const double> bribes,
                                  const TallyPolicy& policy,
                                  const EquilibriumOptions& options,
                                  const UniformMatrix* matrix) {
  const size_t n = weights.size();
  if (utility.mu.size() != n || bribes.size() != n) {
    throw std::invalid_argument("weights, utilities and bribes differ in length");
  }
  if (!(utility.sigma > 0)) throw std::invalid_argument("sigma must be positive");
  if (!(options.relaxation > 0 && options.relaxation <= 1)) {
    throw std::invalid_argument("relaxation must lie in (0, 1]");
  }
  if (!(options.tolerance > 0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  for (double b : bribes) {
    if (!(b >= 0)) throw std::invalid_argument("bribes must be non-negative");
  }
  const double floor = EffectivePivotalityFloor(options);
  if (!(floor >= 0)) {
    throw std::invalid_argument("pivotality floor must be non-negative");
  }

  std::optional<UniformMatrix> own;
  if (!matrix) matrix = &own.emplace(options.seed, kPivotalityStream);

  EquilibriumState state;
  state.alpha.assign(n, 0.0);
  state.yes_prob.resize(n);
  for (size_t i = 0; i < n; ++i) {
    state.yes_prob[i] = YesProbability(0.0, utility.mu[i], utility.sigma);
  }
  auto estimate =
      EstimatePivotality(weights, state.yes_prob, options.samples, *matrix);
  state.delta = std::move(estimate.delta);
  state.delta_std_error = std::move(estimate.std_error);

  const double r = options.relaxation;
  while (state.iterations < options.max_iterations) {
    ++state.iterations;
    UpdateChoices(weights, utility, bribes, policy, floor, state);
    estimate =
        EstimatePivotality(weights, state.yes_prob, options.samples, *matrix);
    double change = 0.0;
    for (size_t i = 0; i < n; ++i) {
      change = std::max(change, std::fabs(estimate.delta[i] - state.delta[i]));
      state.delta[i] = r * estimate.delta[i] + (1 - r) * state.delta[i];
    }
    state.delta_std_error = std::move(estimate.std_error);
    if (change < options.tolerance) {
      state.converged = true;
      break;
    }
  }
  UpdateChoices(weights, utility, bribes, policy, floor, state);
  return state;
}

}  // namespace wvp
