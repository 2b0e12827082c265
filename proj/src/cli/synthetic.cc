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

#include "wvp/cli/synthetic.h"

#include <cmath>
#include <stdexcept>

#include "wvp/core/rng.h"
#include "wvp/game/normal.h"
#include "wvp/optimizer/mdc.h"

namespace wvp {
namespace {

constexpr uint64_t kSizeStream = 1;
constexpr uint64_t kProposalStream = 2;

// Fixed-point weight with six significant decimals from `w` and the rest
// random, never zero.
Weight ToWeight(double w, int scale, Rng& rng) {
  const int coarse = std::min(scale, 6);
  const Units unit = PowerOfTen(scale - coarse);
  Units units = static_cast<Units>(std::floor(w * std::pow(10.0, coarse))) * unit;
  if (unit > 1) {
    const Units noise = (static_cast<Units>(rng.NextU64()) << 64 |
                         static_cast<Units>(rng.NextU64()));
    units += (noise < 0 ? -noise : noise) % unit;
  }
  return Weight::FromUnits(std::max<Units>(units, 1));
}

double LogNormal(Rng& rng, double spread) {
  return std::exp(spread * NormalQuantile(rng.UniformOpen()));
}

VotingTranscript Build(const std::string& id, const std::vector<double>& w,
                       std::vector<int> choices, int scale, Rng& rng) {
  std::vector<Weight> weights;
  for (double x : w) weights.push_back(ToWeight(x, scale, rng));
  return VotingTranscript::Create(id, 2, std::move(weights),
                                  std::move(choices), scale);
}

}  // namespace

const char* CohortName(Cohort cohort) {
  switch (cohort) {
    case Cohort::kMixed: return "mixed";
    case Cohort::kMajorityWhale: return "whale";
    case Cohort::kDispersed: return "dispersed";
  }
  return "mixed";
}

Cohort ParseCohort(const std::string& name) {
  if (name == "mixed") return Cohort::kMixed;
  if (name == "whale") return Cohort::kMajorityWhale;
  if (name == "dispersed") return Cohort::kDispersed;
  throw std::invalid_argument("unknown cohort: " + name);
}

Proposal GenerateProposal(const SyntheticSpec& spec, size_t index, size_t n) {
  if (n < 2) throw std::invalid_argument("need at least two voters");
  const std::string id =
      spec.dao + "-" + CohortName(spec.cohort) + "-" + std::to_string(index);
  Rng rng = Rng::Stream(spec.seed, {kProposalStream, index});
  std::vector<double> w(n);
  std::vector<int> c(n);

  switch (spec.cohort) {
    case Cohort::kMixed: {
      const double spread = 0.5 + 2.0 * rng.Uniform();
      const double yes_share = 0.3 + 0.4 * rng.Uniform();
      for (size_t i = 0; i < n; ++i) {
        w[i] = LogNormal(rng, spread);
        c[i] = rng.Uniform() < yes_share ? kYes : kNo;
      }
      break;
    }
    case Cohort::kMajorityWhale: {
      const int winner = rng.Uniform() < 0.5 ? kYes : kNo;
      double others = 0.0;
      for (size_t i = 1; i < n; ++i) {
        w[i] = LogNormal(rng, 1.0);
        others += w[i];
        c[i] = rng.Uniform() < 0.5 ? kYes : kNo;
      }
      w[0] = 1.5 * others;
      c[0] = winner;
      break;
    }
    case Cohort::kDispersed: {
      for (int attempt = 0;; ++attempt) {
        if (attempt == 100) {
          throw std::runtime_error("cannot reach MDC >= 5 with " +
                                   std::to_string(n) + " voters");
        }
        const int winner = rng.Uniform() < 0.5 ? kYes : kNo;
        for (size_t i = 0; i < n; ++i) {
          w[i] = LogNormal(rng, 0.3);
          c[i] = rng.Uniform() < 0.7 ? winner : 1 - winner;
        }
        auto t = Build(id, w, c, spec.scale, rng);
        if (MinimumDecisiveCoalition(t) >= 5) return {spec.dao, std::move(t)};
      }
    }
  }
  return {spec.dao, Build(id, w, std::move(c), spec.scale, rng)};
}

std::vector<Proposal> GenerateCorpus(const SyntheticSpec& spec) {
  if (spec.min_voters > spec.max_voters) {
    throw std::invalid_argument("min_voters exceeds max_voters");
  }
  Rng sizes = Rng::Stream(spec.seed, {kSizeStream});
  std::vector<Proposal> out;
  out.reserve(spec.count);
  const size_t span = spec.max_voters - spec.min_voters + 1;
  for (size_t k = 0; k < spec.count; ++k) {
    const size_t n = spec.min_voters + sizes.NextU64() % span;
    out.push_back(GenerateProposal(spec, k, n));
  }
  return out;
}

}  // namespace wvp
