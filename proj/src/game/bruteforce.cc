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

#include "wvp/game/bruteforce.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wvp/core/tally.h"

namespace wvp {
namespace {

struct Profile {
  double others = 0.0;  // yes weight of the other voters
  double prob = 1.0;
  size_t index = 0;  // profile id, distinguishes equal sums
};

std::vector<Profile> EnumerateOthers(std::span<const double> weights,
                                     std::span<const double> p, size_t voter) {
  std::vector<Profile> profiles{Profile{}};
  for (size_t j = 0; j < weights.size(); ++j) {
    if (j == voter) continue;
    std::vector<Profile> next;
    next.reserve(profiles.size() * 2);
    for (const Profile& pr : profiles) {
      if (p[j] > 0) {
        next.push_back({pr.others + weights[j], pr.prob * p[j], 2 * pr.index + 1});
      }
      if (p[j] < 1) {
        next.push_back({pr.others, pr.prob * (1 - p[j]), 2 * pr.index});
      }
    }
    profiles = std::move(next);
  }
  return profiles;
}

// Locations sorted with their probabilities.
struct Mixture {
  std::vector<double> locations;
  std::vector<double> probs;

  void Add(double location, double prob) {
    locations.push_back(location);
    probs.push_back(prob);
  }
  void Sort() {
    std::vector<size_t> order(locations.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return locations[a] < locations[b]; });
    Mixture sorted;
    for (size_t k : order) sorted.Add(locations[k], probs[k]);
    *this = std::move(sorted);
  }
};

// Accumulates sum max(a - b, 0) and sum min(a, b) between the outcome
// densities under yes and under no.
struct Overlap {
  double excess = 0.0;
  double common = 0.0;
};

Overlap IntegrateOverlap(Mixture yes, Mixture no, double scale,
                         const Discretization& grid) {
  Overlap out;
  if (yes.locations.empty() && no.locations.empty()) return out;
  yes.Sort();
  no.Sort();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Mixture* m : {&yes, &no}) {
    if (m->locations.empty()) continue;
    lo = std::min(lo, m->locations.front());
    hi = std::max(hi, m->locations.back());
  }
  const double step = grid.step * scale;
  const double start = lo - grid.half_width * scale;
  const auto count = static_cast<size_t>(
      std::ceil((hi - lo + 2 * grid.half_width * scale) / step)) + 1;
  const auto a = LaplaceMixtureOnGrid(yes.locations, yes.probs, scale, start,
                                      step, count);
  const auto b = LaplaceMixtureOnGrid(no.locations, no.probs, scale, start,
                                      step, count);
  for (size_t m = 0; m < count; ++m) {
    out.excess += std::max(a[m] - b[m], 0.0) * step;
    out.common += std::min(a[m], b[m]) * step;
  }
  return out;
}

void CheckInputs(std::span<const double> weights, std::span<const double> p,
                 size_t voter) {
  if (weights.size() > kMaxBruteForceVoters) {
    throw std::invalid_argument("instance too large for enumeration");
  }
  if (weights.size() != p.size()) {
    throw std::invalid_argument("weights and probabilities differ in length");
  }
  if (voter >= weights.size()) throw std::invalid_argument("voter out of range");
  for (double q : p) {
    if (!(q >= 0 && q <= 1)) {
      throw std::invalid_argument("probabilities must lie in [0, 1]");
    }
  }
  for (double w : weights) {
    if (!(w >= 0)) throw std::invalid_argument("weights must be non-negative");
  }
}

}  // namespace

std::vector<double> LaplaceMixtureOnGrid(std::span<const double> locations,
                                         std::span<const double> probs,
                                         double scale, double start,
                                         double step, size_t count) {
  std::vector<double> density(count, 0.0);
  if (locations.empty() || count == 0) return density;
  const double decay = std::exp(-step / scale);
  // Left sweep: mass at or below x, decaying as x moves right.
  double left = 0.0;
  size_t k = 0;
  for (size_t m = 0; m < count; ++m) {
    const double x = start + m * step;
    left *= decay;
    while (k < locations.size() && locations[k] <= x) {
      left += probs[k] * std::exp(-(x - locations[k]) / scale);
      ++k;
    }
    density[m] = left;
  }
  // Right sweep: mass strictly above x.
  double right = 0.0;
  size_t r = locations.size();
  for (size_t m = count; m-- > 0;) {
    const double x = start + m * step;
    right *= decay;
    while (r > 0 && locations[r - 1] > x) {
      --r;
      right += probs[r] * std::exp(-(locations[r] - x) / scale);
    }
    density[m] = (density[m] + right) / (2 * scale);
  }
  return density;
}

DeniabilityReport AnalyzeVoter(std::span<const double> weights,
                               std::span<const double> yes_probs, size_t voter,
                               const TallyPolicy& policy,
                               const Discretization& grid) {
  CheckInputs(weights, yes_probs, voter);
  const double w = weights[voter];
  const double half = std::accumulate(weights.begin(), weights.end(), 0.0) / 2;
  const auto profiles = EnumerateOthers(weights, yes_probs, voter);
  const double prior_yes = yes_probs[voter];

  DeniabilityReport report;
  for (const Profile& pr : profiles) {
    if (pr.others >= half - w && pr.others < half) report.pivotality += pr.prob;
  }

  const bool noised = std::holds_alternative<CorrectedNoised>(policy) ||
                      std::holds_alternative<DpNoised>(policy);
  if (!noised) {
    // Outcome key -> (P(o | yes), P(o | no)).
    std::map<size_t, std::pair<double, double>> outcomes;
    const bool full = std::holds_alternative<FullDisclosure>(policy);
    for (const Profile& pr : profiles) {
      size_t key_yes, key_no;
      if (full) {
        key_yes = 2 * pr.index + 1;
        key_no = 2 * pr.index;
      } else {
        key_yes = pr.others + w >= half ? kYes : kNo;
        key_no = pr.others >= half ? kYes : kNo;
      }
      outcomes[key_yes].first += pr.prob;
      outcomes[key_no].second += pr.prob;
    }
    for (const auto& [key, cond] : outcomes) {
      const auto [given_yes, given_no] = cond;
      report.alpha_star += std::max(given_yes - given_no, 0.0);
      const double p_o = prior_yes * given_yes + (1 - prior_yes) * given_no;
      if (p_o <= 0) continue;
      double pd;
      if (prior_yes > 0 && prior_yes < 1) {
        pd = std::min(given_yes, given_no) / p_o;
      } else {
        pd = (prior_yes > 0 ? given_yes : given_no) / p_o;
      }
      report.outcome_pd.push_back(pd);
      report.outcome_prob.push_back(p_o);
      report.epd += p_o * pd;
    }
    return report;
  }

  double scale;
  if (const auto* cn = std::get_if<CorrectedNoised>(&policy)) {
    scale = cn->noise.scale;
  } else {
    const double epsilon = std::get<DpNoised>(policy).epsilon;
    if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
    scale = *std::max_element(weights.begin(), weights.end()) / epsilon;
  }
  if (!(scale > 0)) throw std::invalid_argument("noise scale must be positive");

  // The published noised total is the yes total plus Laplace noise; the
  // corrected policy also publishes the winner, splitting outcomes by it.
  const bool split = std::holds_alternative<CorrectedNoised>(policy);
  Mixture yes[2], no[2];
  for (const Profile& pr : profiles) {
    const int win_yes = split && !(pr.others + w >= half);
    const int win_no = split && !(pr.others >= half);
    yes[win_yes].Add(pr.others + w, pr.prob);
    no[win_no].Add(pr.others, pr.prob);
  }
  double common = 0.0;
  for (int k = 0; k < 2; ++k) {
    const Overlap o = IntegrateOverlap(yes[k], no[k], scale, grid);
    report.alpha_star += o.excess;
    common += o.common;
  }
  // With a degenerate prior, PD(o) = P(o | c) / P(o) for the single
  // possible choice, so the expectation is 1.
  report.epd = (prior_yes > 0 && prior_yes < 1) ? common : 1.0;
  return report;
}

}  // namespace wvp
