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

#include "wvp/optimizer/allocation.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wvp/core/tally.h"
#include "wvp/optimizer/mdc.h"

namespace wvp {

BriberyInstance BriberyInstance::FromTranscript(const VotingTranscript& t) {
  if (!t.is_binary()) {
    throw std::invalid_argument("bribery needs a binary proposal");
  }
  BriberyInstance instance;
  instance.id = t.proposal_id();
  instance.weights = t.WeightsAsDouble();
  const int winner = TallyWinner(t).winner;
  for (int c : t.choices()) {
    const bool opposing = c == winner;
    instance.opposing.push_back(opposing);
    instance.mu.push_back(opposing ? 1.0 : -1.0);
  }
  instance.mdc = MinimumDecisiveCoalition(t);
  return instance;
}

double BriberyInstance::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

namespace {

std::string FormatNumber(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

}  // namespace

std::string AllocationStrategy::Name() const {
  std::string name;
  switch (kind) {
    case AllocationKind::kEqualSplit: name = "equal"; break;
    case AllocationKind::kLinear: name = "linear"; break;
    case AllocationKind::kSquareRoot: name = "sqrt"; break;
    case AllocationKind::kQuadratic: name = "quadratic"; break;
    case AllocationKind::kLogarithmic: name = "log"; break;
    case AllocationKind::kLinearSloped:
      name = "sloped(" + FormatNumber(slope) + ")";
      break;
  }
  switch (target) {
    case TargetRule::kAllOpposing: return name + "/all";
    case TargetRule::kTopK: return name + "/top" + std::to_string(top_k);
    case TargetRule::kTopPercent:
      return name + "/top" + FormatNumber(percent) + "%";
    case TargetRule::kTopMdc: return name + "/top-mdc";
  }
  return name;
}

AllocationStrategy ParseStrategy(const std::string& label) {
  const auto slash = label.find('/');
  if (slash == std::string::npos) {
    throw std::invalid_argument("strategy label needs kind/target: " + label);
  }
  const std::string kind = label.substr(0, slash);
  const std::string target = label.substr(slash + 1);
  AllocationStrategy s;
  try {
    if (kind == "equal") {
      s.kind = AllocationKind::kEqualSplit;
    } else if (kind == "linear") {
      s.kind = AllocationKind::kLinear;
    } else if (kind == "sqrt") {
      s.kind = AllocationKind::kSquareRoot;
    } else if (kind == "quadratic") {
      s.kind = AllocationKind::kQuadratic;
    } else if (kind == "log") {
      s.kind = AllocationKind::kLogarithmic;
    } else if (kind.starts_with("sloped(") && kind.ends_with(")")) {
      s.kind = AllocationKind::kLinearSloped;
      s.slope = std::stod(kind.substr(7, kind.size() - 8));
    } else {
      throw std::invalid_argument("unknown allocation kind: " + kind);
    }
    if (target == "all") {
      s.target = TargetRule::kAllOpposing;
    } else if (target == "top-mdc") {
      s.target = TargetRule::kTopMdc;
    } else if (target.starts_with("top") && target.ends_with("%")) {
      s.target = TargetRule::kTopPercent;
      s.percent = std::stod(target.substr(3, target.size() - 4));
      if (!(s.percent > 0 && s.percent <= 100)) {
        throw std::invalid_argument("percent must lie in (0, 100]");
      }
    } else if (target.starts_with("top")) {
      s.target = TargetRule::kTopK;
      size_t used = 0;
      const std::string digits = target.substr(3);
      const long k = std::stol(digits, &used);
      if (used != digits.size() || k <= 0) {
        throw std::invalid_argument("top-k needs a positive integer");
      }
      s.top_k = static_cast<size_t>(k);
    } else {
      throw std::invalid_argument("unknown target rule: " + target);
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad strategy label: " + label);
  }
  return s;
}

std::vector<AllocationStrategy> DefaultStrategies() {
  std::vector<AllocationStrategy> out;
  for (const char* label :
       {"linear/all", "linear/top10", "linear/top10%", "linear/top1%",
        "log/top-mdc", "log/top1%", "sqrt/all", "equal/top-mdc"}) {
    out.push_back(ParseStrategy(label));
  }
  return out;
}

std::vector<size_t> SelectTargets(const AllocationStrategy& strategy,
                                  const BriberyInstance& instance) {
  std::vector<size_t> ranked;
  for (size_t i = 0; i < instance.weights.size(); ++i) {
    if (instance.opposing[i]) ranked.push_back(i);
  }
  const auto& w = instance.weights;
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](size_t a, size_t b) { return w[a] > w[b]; });
  size_t keep = ranked.size();
  switch (strategy.target) {
    case TargetRule::kAllOpposing: break;
    case TargetRule::kTopK: keep = strategy.top_k; break;
    case TargetRule::kTopPercent:
      keep = std::max<size_t>(
          1, static_cast<size_t>(std::ceil(strategy.percent / 100.0 *
                                           static_cast<double>(ranked.size()))));
      break;
    case TargetRule::kTopMdc: keep = instance.mdc; break;
  }
  ranked.resize(std::min(keep, ranked.size()));
  return ranked;
}

namespace {

// b_i = max(s * w_i + c, 0) with c chosen so the bribes sum to the budget.
std::vector<double> SlopedShares(double slope, std::span<const double> weights,
                                 std::span<const size_t> targets,
                                 double budget) {
  std::vector<double> base;
  for (size_t i : targets) base.push_back(slope * weights[i]);
  std::vector<double> sorted = base;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  // With the k largest base values active, c = (B - sum) / k; the first k
  // for which the next value stays inactive is the solution.
  double prefix = 0.0, c = 0.0;
  for (size_t k = 1; k <= sorted.size(); ++k) {
    prefix += sorted[k - 1];
    c = (budget - prefix) / static_cast<double>(k);
    if (k == sorted.size() || sorted[k] + c <= 0) break;
  }
  std::vector<double> shares;
  for (double v : base) shares.push_back(std::max(v + c, 0.0));
  return shares;
}

}  // namespace

std::vector<double> Allocate(const AllocationStrategy& strategy,
                             std::span<const double> weights,
                             std::span<const size_t> targets, double budget) {
  if (!(budget >= 0)) throw std::invalid_argument("budget must be >= 0");
  std::vector<double> bribes(weights.size(), 0.0);
  if (budget == 0) return bribes;
  if (targets.empty()) {
    throw std::invalid_argument("positive budget with no targets");
  }
  std::vector<double> shares;
  if (strategy.kind == AllocationKind::kLinearSloped) {
    shares = SlopedShares(strategy.slope, weights, targets, budget);
  } else {
    for (size_t i : targets) {
      const double w = weights[i];
      switch (strategy.kind) {
        case AllocationKind::kEqualSplit: shares.push_back(1.0); break;
        case AllocationKind::kLinear: shares.push_back(w); break;
        case AllocationKind::kSquareRoot: shares.push_back(std::sqrt(w)); break;
        case AllocationKind::kQuadratic: shares.push_back(w * w); break;
        case AllocationKind::kLogarithmic:
          shares.push_back(std::max(std::log(w), kLogWeightFloor));
          break;
        case AllocationKind::kLinearSloped: break;
      }
    }
  }
  double sum = std::accumulate(shares.begin(), shares.end(), 0.0);
  if (!(sum > 0)) {
    // All-zero weights: fall back to an equal split.
    shares.assign(targets.size(), 1.0);
    sum = static_cast<double>(targets.size());
  }
  for (size_t k = 0; k < targets.size(); ++k) {
    bribes[targets[k]] += budget * shares[k] / sum;
  }
  return bribes;
}

}  // namespace wvp
