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

#include "wvp/core/tally.h"

#include <algorithm>
#include <stdexcept>

#include "wvp/core/rng.h"

namespace wvp {
namespace {

// Stream labels keep the draws of different tally algorithms independent
// even when the caller reuses a seed.
constexpr uint64_t kNoisedStream = 0x6e6f69736564ULL;
constexpr uint64_t kDpStream = 0x6470ULL;

std::vector<double> ToDoubles(const RawOutcome& raw, int scale) {
  std::vector<double> out;
  out.reserve(raw.totals.size());
  for (Weight w : raw.totals) out.push_back(w.ToDouble(scale));
  return out;
}

}  // namespace

RawOutcome TallyRaw(const VotingTranscript& t) {
  RawOutcome out;
  out.totals.assign(static_cast<size_t>(t.num_choices()), Weight());
  const auto weights = t.weights();
  const auto choices = t.choices();
  for (size_t i = 0; i < t.size(); ++i) {
    out.totals[static_cast<size_t>(choices[i])] += weights[i];
  }
  return out;
}

int ArgmaxLowestIndex(const std::vector<Weight>& totals) {
  // max_element returns the first maximal element.
  return static_cast<int>(std::max_element(totals.begin(), totals.end()) -
                          totals.begin());
}

WinnerOutcome TallyWinner(const VotingTranscript& t) {
  return {ArgmaxLowestIndex(TallyRaw(t).totals)};
}

NoisedOutcome ApplyPairedNoise(const RawOutcome& raw, int scale, double y) {
  if (raw.totals.size() != 2) {
    throw std::invalid_argument("paired noise requires a binary tally");
  }
  NoisedOutcome out{ToDoubles(raw, scale)};
  out.totals[kYes] -= y;
  out.totals[kNo] += y;
  return out;
}

NoisedOutcome TallyNoised(const VotingTranscript& t, const NoiseSpec& spec,
                          uint64_t seed, NoiseMode mode) {
  if (spec.scale < 0) throw std::invalid_argument("noise scale is negative");
  const RawOutcome raw = TallyRaw(t);
  Rng rng = Rng::Stream(seed, {kNoisedStream});
  if (mode == NoiseMode::kPaired) {
    if (!t.is_binary()) {
      throw std::invalid_argument("paired noise requires a binary transcript");
    }
    return ApplyPairedNoise(raw, t.scale(), rng.Laplace(spec.scale));
  }
  NoisedOutcome out{ToDoubles(raw, t.scale())};
  for (double& total : out.totals) total += rng.Laplace(spec.scale);
  return out;
}

CorrectedNoisedOutcome TallyCorrectedNoised(const VotingTranscript& t,
                                            const NoiseSpec& spec,
                                            uint64_t seed, NoiseMode mode) {
  return {TallyNoised(t, spec, seed, mode).totals, TallyWinner(t).winner};
}

double DpNoiseScale(const VotingTranscript& t, double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  const auto weights = t.weights();
  const Weight w_max = *std::max_element(weights.begin(), weights.end());
  return w_max.ToDouble(t.scale()) / epsilon;
}

NoisedOutcome TallyDp(const VotingTranscript& t, double epsilon,
                      uint64_t seed) {
  if (!t.is_binary()) {
    throw std::invalid_argument("the DP tally is defined for binary votes");
  }
  const double scale = DpNoiseScale(t, epsilon);
  Rng rng = Rng::Stream(seed, {kDpStream});
  return ApplyPairedNoise(TallyRaw(t), t.scale(), rng.Laplace(scale));
}

}  // namespace wvp
