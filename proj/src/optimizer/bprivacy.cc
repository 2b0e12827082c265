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

#include "wvp/optimizer/bprivacy.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace wvp {

SamplingMatrices::SamplingMatrices(size_t voters,
                                   const BPrivacyOptions& options)
    : pivotality(options.seed, kPivotalityStream),
      success(options.seed, kSuccessStream) {
  pivotality.Reserve((options.samples + 1) / 2, voters);
  success.Reserve(
      (std::max(options.samples, options.escalated_samples) + 1) / 2, voters);
}

SuccessEvaluation EvaluateBribes(const BriberyInstance& instance,
                                 const TallyPolicy& policy,
                                 std::span<const double> bribes,
                                 const BPrivacyOptions& options,
                                 const SamplingMatrices* matrices) {
  UtilityModel utility{instance.mu, options.sigma};
  EquilibriumOptions eq;
  eq.samples = options.samples;
  eq.seed = options.seed;
  eq.relaxation = options.relaxation;
  eq.tolerance = options.tolerance;
  eq.max_iterations = options.max_iterations;
  eq.pivotality_floor = options.pivotality_floor;

  SuccessEvaluation out;
  out.equilibrium =
      SolveEquilibrium(instance.weights, utility, bribes, policy, eq,
                       matrices ? &matrices->pivotality : nullptr);
  MonteCarloSpec mc;
  mc.samples = options.samples;
  mc.escalated_samples = options.escalated_samples;
  mc.escalation_window = options.escalation_window;
  mc.seed = options.seed;
  out.p_succ = SuccessProbability(instance.weights, out.equilibrium.yes_prob,
                                  mc, options.target_p,
                                  matrices ? &matrices->success : nullptr)
                   .probability;
  return out;
}

StrategyOutcome SearchBudget(const BriberyInstance& instance,
                             const TallyPolicy& policy,
                             const AllocationStrategy& strategy,
                             const BPrivacyOptions& options,
                             const SamplingMatrices* matrices) {
  std::optional<SamplingMatrices> own;
  if (!matrices) matrices = &own.emplace(instance.weights.size(), options);
  StrategyOutcome out;
  out.strategy = strategy;
  const auto targets = SelectTargets(strategy, instance);
  std::map<double, double> probed;  // budget -> p_succ

  std::vector<double> yes_prob;  // at the latest probe
  auto probe = [&](double budget) {
    const auto bribes =
        Allocate(strategy, instance.weights, targets, budget);
    auto eval = EvaluateBribes(instance, policy, bribes, options, matrices);
    ++out.probes;
    out.equilibrium_converged &= eval.equilibrium.converged;
    probed[budget] = eval.p_succ;
    yes_prob = std::move(eval.equilibrium.yes_prob);
    return eval.p_succ;
  };
  auto finish = [&](double budget, double p) {
    out.feasible = true;
    out.budget = budget;
    out.achieved_p_succ = p;
    double previous = -1.0;
    for (const auto& [b, p_b] : probed) {
      if (p_b < previous) ++out.monotonicity_violations;
      previous = p_b;
    }
    return out;
  };

  const double p0 = probe(0.0);
  if (p0 >= options.target_p) return finish(0.0, p0);
  if (targets.empty()) return out;

  double lo = 0.0, hi = options.search.initial_budget;
  double p_hi = probe(hi);
  while (p_hi < options.target_p) {
    lo = hi;
    hi *= 2;
    if (hi > options.search.max_budget) return out;
    const auto before = yes_prob;
    p_hi = probe(hi);
    // Every target already votes yes with probability 1: more budget
    // cannot change the equilibrium.
    if (p_hi < options.target_p && yes_prob == before) return out;
  }
  while (hi - lo > std::max(options.search.relative_width * hi,
                            options.search.absolute_width)) {
    const double mid = 0.5 * (lo + hi);
    const double p_mid = probe(mid);
    if (p_mid >= options.target_p) {
      hi = mid;
      p_hi = p_mid;
    } else {
      lo = mid;
    }
  }
  return finish(hi, p_hi);
}

BPrivacyResult ComputeBPrivacy(const BriberyInstance& instance,
                               const TallyPolicy& policy,
                               const BPrivacyOptions& options,
                               const SamplingMatrices* matrices) {
  if (!(options.target_p > 0.5 && options.target_p < 1)) {
    throw std::invalid_argument("target p must lie in (0.5, 1)");
  }
  if (options.strategies.empty()) {
    throw std::invalid_argument("no allocation strategies");
  }
  BPrivacyResult result;
  result.policy = policy;
  const StrategyOutcome* best = nullptr;
  std::optional<SamplingMatrices> own;
  if (!matrices) matrices = &own.emplace(instance.weights.size(), options);
  for (const auto& strategy : options.strategies) {
    result.per_strategy.push_back(
        SearchBudget(instance, policy, strategy, options, matrices));
  }
  for (const auto& outcome : result.per_strategy) {
    if (outcome.feasible && (!best || outcome.budget < best->budget)) {
      best = &outcome;
    }
  }
  if (!best) return result;
  result.feasible = true;
  result.budget = best->budget;
  result.strategy = best->strategy;
  result.achieved_p_succ = best->achieved_p_succ;
  result.bribes = Allocate(best->strategy, instance.weights,
                           SelectTargets(best->strategy, instance),
                           best->budget);
  return result;
}

std::optional<double> RelativeBPrivacy(const BPrivacyResult& result,
                                       const BPrivacyResult& baseline) {
  if (!result.feasible || !baseline.feasible || !(baseline.budget > 0)) {
    return std::nullopt;
  }
  return result.budget / baseline.budget;
}

std::optional<double> GeometricMean(std::span<const double> values) {
  if (values.empty()) return std::nullopt;
  double log_sum = 0.0;
  for (double v : values) {
    if (!(v > 0)) throw std::invalid_argument("geometric mean needs positives");
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(values.size()));
}

}  // namespace wvp
