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

#ifndef WVP_OPTIMIZER_BPRIVACY_H_
#define WVP_OPTIMIZER_BPRIVACY_H_

#include <optional>
#include <span>
#include <vector>

#include "wvp/game/equilibrium.h"
#include "wvp/game/monte_carlo.h"
#include "wvp/game/policy.h"
#include "wvp/optimizer/allocation.h"

namespace wvp {

// Budgets are in the same units as the utility model.
struct BisectSpec {
  double initial_budget = 1.0;
  double max_budget = 1e9;
  double relative_width = 1e-2;
  // Bisection also stops once hi - lo falls below this, so a search whose
  // lower end stays at zero terminates.
  double absolute_width = 1e-9;
};

struct BPrivacyOptions {
  double target_p = 0.9;
  double sigma = 1.0;
  std::vector<AllocationStrategy> strategies = DefaultStrategies();
  // Seeds the equilibrium and success sample matrices. The same matrices
  // serve every budget probe, so p_succ(B) is a deterministic function of B.
  uint64_t seed = 0;
  size_t samples = 1000;
  size_t escalated_samples = 10000;
  double escalation_window = 0.01;
  double relaxation = kDefaultRelaxation;
  double tolerance = kDefaultTolerance;
  int max_iterations = kDefaultMaxIterations;
  std::optional<double> pivotality_floor;  // see EquilibriumOptions
  BisectSpec search;
};

struct StrategyOutcome {
  AllocationStrategy strategy;
  bool feasible = false;
  double budget = 0.0;  // meaningful only when feasible
  double achieved_p_succ = 0.0;
  int probes = 0;
  // Probe pairs where a larger budget gave a lower p_succ.
  int monotonicity_violations = 0;
  bool equilibrium_converged = true;
};

struct BPrivacyResult {
  bool feasible = false;
  double budget = 0.0;
  std::vector<double> bribes;
  AllocationStrategy strategy;
  double achieved_p_succ = 0.0;
  TallyPolicy policy;
  std::optional<double> relative;
  std::vector<StrategyOutcome> per_strategy;
};

// Sample matrices shared by every probe of one instance, materialized up
// front when they fit in memory.
struct SamplingMatrices {
  UniformMatrix pivotality;
  UniformMatrix success;

  SamplingMatrices(size_t voters, const BPrivacyOptions& options);
};

struct SuccessEvaluation {
  double p_succ = 0.0;
  EquilibriumState equilibrium;
};

// Equilibrium under `bribes`, then the success probability at it.
SuccessEvaluation EvaluateBribes(const BriberyInstance& instance,
                                 const TallyPolicy& policy,
                                 std::span<const double> bribes,
                                 const BPrivacyOptions& options,
                                 const SamplingMatrices* matrices = nullptr);

// Smallest budget reaching target_p for one strategy: p_succ(0) first, then
// doubling from initial_budget up to max_budget (stopping early as
// infeasible once doubling leaves the equilibrium unchanged), then
// bisection until
// hi - lo <= max(relative_width * hi, absolute_width); returns hi.
StrategyOutcome SearchBudget(const BriberyInstance& instance,
                             const TallyPolicy& policy,
                             const AllocationStrategy& strategy,
                             const BPrivacyOptions& options,
                             const SamplingMatrices* matrices = nullptr);

// Minimum over options.strategies. Throws std::invalid_argument unless
// 0.5 < target_p < 1 and the strategy list is non-empty.
BPrivacyResult ComputeBPrivacy(const BriberyInstance& instance,
                               const TallyPolicy& policy,
                               const BPrivacyOptions& options,
                               const SamplingMatrices* matrices = nullptr);

// B*(policy) / B*(full disclosure); empty when either is infeasible or the
// baseline budget is zero.
std::optional<double> RelativeBPrivacy(const BPrivacyResult& result,
                                       const BPrivacyResult& baseline);

// Geometric mean of positive values; empty input gives nullopt.
std::optional<double> GeometricMean(std::span<const double> values);

}  // namespace wvp

#endif  // WVP_OPTIMIZER_BPRIVACY_H_
