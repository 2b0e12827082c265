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

#include "wvp/game/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wvp/core/rng.h"

namespace wvp {
namespace {

void Validate(std::span<const double> weights,
              std::span<const double> yes_probs, size_t samples) {
  if (weights.size() != yes_probs.size()) {
    throw std::invalid_argument("weights and probabilities differ in length");
  }
  if (weights.empty()) throw std::invalid_argument("no voters");
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  for (double p : yes_probs) {
    if (!(p >= 0 && p <= 1)) {
      throw std::invalid_argument("probabilities must lie in [0, 1]");
    }
  }
}

size_t PairsFor(size_t samples) { return (samples + 1) / 2; }

// Mean and standard error from per-pair means.
void PairStatistics(double sum, double sum_sq, size_t pairs, double* mean,
                    double* std_error) {
  const double m = sum / static_cast<double>(pairs);
  *mean = m;
  if (pairs < 2) {
    *std_error = 0.0;
    return;
  }
  const double var =
      std::max(0.0, (sum_sq - pairs * m * m) / static_cast<double>(pairs - 1));
  *std_error = std::sqrt(var / static_cast<double>(pairs));
}

// x holds 0/1, so unselected voters add exactly +0.
double YesTotal(std::span<const double> weights, const std::vector<double>& x) {
  double total = 0.0;
  for (size_t j = 0; j < x.size(); ++j) total += x[j] * weights[j];
  return total;
}

}  // namespace

UniformMatrix::UniformMatrix(uint64_t seed, uint64_t stream)
    : key_(DeriveSeed(seed, {stream})) {}

double UniformMatrix::Uniform(size_t pair, size_t column) const {
  if (pair < cached_pairs_ && column < cached_columns_) {
    return cache_[pair * cached_columns_ + column];
  }
  const uint64_t bits = MixSeed(MixSeed(key_, pair), column);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

void UniformMatrix::Reserve(size_t pairs, size_t columns) {
  if (pairs <= cached_pairs_ && columns == cached_columns_) return;
  if (pairs * columns > kMaxCachedUniforms) return;
  std::vector<double> cache(pairs * columns);
  for (size_t r = 0; r < pairs; ++r) {
    const uint64_t row_key = MixSeed(key_, r);
    for (size_t j = 0; j < columns; ++j) {
      cache[r * columns + j] =
          static_cast<double>(MixSeed(row_key, j) >> 11) * 0x1.0p-53;
    }
  }
  cache_ = std::move(cache);
  cached_pairs_ = pairs;
  cached_columns_ = columns;
}

double UniformMatrix::At(size_t row, size_t column) const {
  const double u = Uniform(row / 2, column);
  return (row & 1) ? 1.0 - u : u;
}

void UniformMatrix::PairDecisions(size_t pair, std::span<const double> p,
                                  std::vector<double>& x,
                                  std::vector<double>& mirror) const {
  const size_t n = p.size();
  x.resize(n);
  mirror.resize(n);
  if (pair < cached_pairs_ && n == cached_columns_) {
    const double* u = cache_.data() + pair * n;
    for (size_t j = 0; j < n; ++j) {
      x[j] = u[j] < p[j] ? 1.0 : 0.0;
      mirror[j] = 1.0 - u[j] < p[j] ? 1.0 : 0.0;
    }
    return;
  }
  const uint64_t row_key = MixSeed(key_, pair);
  for (size_t j = 0; j < n; ++j) {
    const double u = static_cast<double>(MixSeed(row_key, j) >> 11) * 0x1.0p-53;
    x[j] = u < p[j] ? 1.0 : 0.0;
    mirror[j] = 1.0 - u < p[j] ? 1.0 : 0.0;
  }
}

PivotalityEstimate EstimatePivotality(std::span<const double> weights,
                                      std::span<const double> yes_probs,
                                      size_t samples,
                                      const UniformMatrix& matrix) {
  Validate(weights, yes_probs, samples);
  const size_t n = weights.size();
  const size_t pairs = PairsFor(samples);
  const double half = std::accumulate(weights.begin(), weights.end(), 0.0) / 2;

  std::vector<double> low(n);
  for (size_t i = 0; i < n; ++i) low[i] = half - weights[i];
  std::vector<double> sum(n, 0.0), sum_sq(n, 0.0);
  std::vector<double> x, mirror;
  for (size_t pair = 0; pair < pairs; ++pair) {
    matrix.PairDecisions(pair, yes_probs, x, mirror);
    const double total = YesTotal(weights, x);
    const double total_mirror = YesTotal(weights, mirror);
    for (size_t i = 0; i < n; ++i) {
      const double a = total - x[i] * weights[i];
      const double b = total_mirror - mirror[i] * weights[i];
      const double m = 0.5 * (static_cast<double>((a >= low[i]) & (a < half)) +
                              static_cast<double>((b >= low[i]) & (b < half)));
      sum[i] += m;
      sum_sq[i] += m * m;
    }
  }
  PivotalityEstimate out;
  out.samples = 2 * pairs;
  out.delta.resize(n);
  out.std_error.resize(n);
  for (size_t i = 0; i < n; ++i) {
    PairStatistics(sum[i], sum_sq[i], pairs, &out.delta[i], &out.std_error[i]);
  }
  return out;
}

PivotalityEstimate EstimatePivotality(std::span<const double> weights,
                                      std::span<const double> yes_probs,
                                      size_t samples, uint64_t seed) {
  return EstimatePivotality(weights, yes_probs, samples,
                            UniformMatrix(seed, kPivotalityStream));
}

SuccessEstimate EstimateSuccess(std::span<const double> weights,
                                std::span<const double> yes_probs,
                                size_t samples, const UniformMatrix& matrix) {
  Validate(weights, yes_probs, samples);
  const size_t pairs = PairsFor(samples);
  const double half = std::accumulate(weights.begin(), weights.end(), 0.0) / 2;

  double sum = 0.0, sum_sq = 0.0;
  std::vector<double> x, mirror;
  for (size_t pair = 0; pair < pairs; ++pair) {
    matrix.PairDecisions(pair, yes_probs, x, mirror);
    const double m = 0.5 * ((YesTotal(weights, x) > half) +
                            (YesTotal(weights, mirror) > half));
    sum += m;
    sum_sq += m * m;
  }
  SuccessEstimate out;
  out.samples = 2 * pairs;
  PairStatistics(sum, sum_sq, pairs, &out.probability, &out.std_error);
  return out;
}

SuccessEstimate EstimateSuccess(std::span<const double> weights,
                                std::span<const double> yes_probs,
                                size_t samples, uint64_t seed) {
  return EstimateSuccess(weights, yes_probs, samples,
                         UniformMatrix(seed, kSuccessStream));
}

SuccessEstimate SuccessProbability(std::span<const double> weights,
                                   std::span<const double> yes_probs,
                                   const MonteCarloSpec& spec,
                                   std::optional<double> target,
                                   const UniformMatrix* matrix) {
  std::optional<UniformMatrix> own;
  if (!matrix) matrix = &own.emplace(spec.seed, kSuccessStream);
  SuccessEstimate estimate =
      EstimateSuccess(weights, yes_probs, spec.samples, *matrix);
  if (target && spec.escalated_samples > spec.samples &&
      std::fabs(estimate.probability - *target) <
          std::max(spec.escalation_window, 3 * estimate.std_error)) {
    estimate =
        EstimateSuccess(weights, yes_probs, spec.escalated_samples, *matrix);
  }
  return estimate;
}

}  // namespace wvp
