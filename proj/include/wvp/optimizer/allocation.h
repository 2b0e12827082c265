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

#ifndef WVP_OPTIMIZER_ALLOCATION_H_
#define WVP_OPTIMIZER_ALLOCATION_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wvp/core/transcript.h"

namespace wvp {

// A binary proposal seen from the adversary, who pushes "yes". The observed
// winner is relabeled "no": its voters are the opposing ones, with utility
// mean +1; everyone else has mean -1.
struct BriberyInstance {
  std::string id;
  std::vector<double> weights;
  std::vector<double> mu;
  std::vector<unsigned char> opposing;
  size_t mdc = 0;

  // Throws std::invalid_argument for non-binary transcripts.
  static BriberyInstance FromTranscript(const VotingTranscript& t);
  double total_weight() const;
};

enum class AllocationKind {
  kEqualSplit,
  kLinear,
  kSquareRoot,
  kQuadratic,
  kLogarithmic,
  kLinearSloped,
};

enum class TargetRule { kAllOpposing, kTopK, kTopPercent, kTopMdc };

// Floor applied to log(w) so that voters with w <= 1 keep a share.
inline constexpr double kLogWeightFloor = 1e-6;

struct AllocationStrategy {
  AllocationKind kind = AllocationKind::kLinear;
  double slope = 0.0;  // kLinearSloped only
  TargetRule target = TargetRule::kAllOpposing;
  size_t top_k = 0;       // kTopK
  double percent = 0.0;   // kTopPercent, in (0, 100]

  // Short stable label, e.g. "linear/all", "log/top-mdc", "linear/top10%".
  std::string Name() const;
};

// Parses a Name() label; "sloped(0.5)/all" selects kLinearSloped with slope
// 0.5. Throws std::invalid_argument for unknown labels.
AllocationStrategy ParseStrategy(const std::string& label);

// Linear x {all, top 10, top 10%, top 1%}, log x {top MDC, top 1%},
// sqrt x all and equal x top MDC.
std::vector<AllocationStrategy> DefaultStrategies();

// Opposing voters chosen by the target rule, heaviest first with ties
// broken by index. Top-percent keeps ceil(percent% of the opposing count),
// at least one.
std::vector<size_t> SelectTargets(const AllocationStrategy& strategy,
                                  const BriberyInstance& instance);

// Bribe vector over all voters summing to `budget`, zero outside `targets`.
// Throws std::invalid_argument for a negative budget or for an empty target
// set with a positive budget.
std::vector<double> Allocate(const AllocationStrategy& strategy,
                             std::span<const double> weights,
                             std::span<const size_t> targets, double budget);

}  // namespace wvp

#endif  // WVP_OPTIMIZER_ALLOCATION_H_
