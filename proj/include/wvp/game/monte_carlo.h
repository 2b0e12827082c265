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

#ifndef WVP_GAME_MONTE_CARLO_H_
#define WVP_GAME_MONTE_CARLO_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wvp {

// Stream labels for the two sample matrices drawn from one seed.
inline constexpr uint64_t kPivotalityStream = 0x5049564f;  // "PIVO"
inline constexpr uint64_t kSuccessStream = 0x53554343;     // "SUCC"

// Largest number of uniforms a UniformMatrix keeps in memory.
inline constexpr size_t kMaxCachedUniforms = size_t{1} << 24;

struct MonteCarloSpec {
  size_t samples = 1000;
  size_t escalated_samples = 10000;
  // Escalate when the success estimate lies within this distance (or three
  // standard errors, if larger) of the target.
  double escalation_window = 0.01;
  uint64_t seed = 0;
};

// Shared uniforms for common random numbers. Entry (r, j) is a pure function
// of (seed, stream, r / 2, j); odd rows are the antithetic mirror 1 - u of
// the row before, so a matrix of R rows is a prefix of any longer one.
class UniformMatrix {
 public:
  UniformMatrix(uint64_t seed, uint64_t stream);

  // Materializes the first `pairs` row pairs for `columns` voters when that
  // fits in kMaxCachedUniforms; otherwise entries stay computed on demand.
  // Either way the values are identical.
  void Reserve(size_t pairs, size_t columns);

  double At(size_t row, size_t column) const;

  // Voter decisions for rows 2 * pair and 2 * pair + 1 as 0/1 values:
  // x[j] = u < p[j] and mirror[j] = 1 - u < p[j].
  void PairDecisions(size_t pair, std::span<const double> p,
                     std::vector<double>& x, std::vector<double>& mirror) const;

 private:
  double Uniform(size_t pair, size_t column) const;

  uint64_t key_;
  size_t cached_pairs_ = 0;
  size_t cached_columns_ = 0;
  std::vector<double> cache_;
};

// Antithetic pairs are averaged before the variance is taken, so the
// standard errors reflect the variance reduction actually achieved.
struct PivotalityEstimate {
  std::vector<double> delta;
  std::vector<double> std_error;
  size_t samples = 0;
};

struct SuccessEstimate {
  double probability = 0.0;
  double std_error = 0.0;
  size_t samples = 0;
};

// F_i = Pr[sum_{j != i} w_j X_j in [W/2 - w_i, W/2)] with X_j ~ Bernoulli(p_j),
// for every voter from one shared sample matrix: each row's total is formed
// once and voter i's own contribution removed. `samples` is rounded up to
// an even count. Throws std::invalid_argument on size mismatch, p outside
// [0, 1] or zero samples.
PivotalityEstimate EstimatePivotality(std::span<const double> weights,
                                      std::span<const double> yes_probs,
                                      size_t samples,
                                      const UniformMatrix& matrix);
PivotalityEstimate EstimatePivotality(std::span<const double> weights,
                                      std::span<const double> yes_probs,
                                      size_t samples, uint64_t seed);

// Pr[sum_i w_i X_i > W/2] over `samples` rows.
SuccessEstimate EstimateSuccess(std::span<const double> weights,
                                std::span<const double> yes_probs,
                                size_t samples, const UniformMatrix& matrix);
SuccessEstimate EstimateSuccess(std::span<const double> weights,
                                std::span<const double> yes_probs,
                                size_t samples, uint64_t seed);

// EstimateSuccess at spec.samples, re-run at spec.escalated_samples when the
// first estimate lies within max(spec.escalation_window, 3 standard errors)
// of `target`. Uses
// `matrix` when given, else the success stream of spec.seed.
SuccessEstimate SuccessProbability(std::span<const double> weights,
                                   std::span<const double> yes_probs,
                                   const MonteCarloSpec& spec,
                                   std::optional<double> target,
                                   const UniformMatrix* matrix = nullptr);

}  // namespace wvp

#endif  // WVP_GAME_MONTE_CARLO_H_
