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

#ifndef WVP_CORE_TALLY_H_
#define WVP_CORE_TALLY_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "wvp/core/noise.h"
#include "wvp/core/transcript.h"
#include "wvp/core/weight.h"

namespace wvp {

struct WinnerOutcome {
  int winner = 0;
};

// Exact per-choice totals; they always sum to the transcript's total weight.
struct RawOutcome {
  std::vector<Weight> totals;
};

struct NoisedOutcome {
  std::vector<double> totals;
};

// Noised totals published together with the true (un-noised) winner.
struct CorrectedNoisedOutcome {
  std::vector<double> noised_totals;
  int winner = 0;
};

struct FullOutcome {
  VotingTranscript transcript;
};

using TallyOutcome = std::variant<WinnerOutcome, RawOutcome, NoisedOutcome,
                                  CorrectedNoisedOutcome, FullOutcome>;

// How noise is applied to per-choice totals.
//   kPaired: binary only. One draw Y moves weight between the two totals,
//            (yes - Y, no + Y), so the noised totals still sum to W.
//   kIndependent: an independent draw Y_j is added to every choice total.
enum class NoiseMode { kPaired, kIndependent };

RawOutcome TallyRaw(const VotingTranscript& t);

// Argmax of the raw totals; ties go to the lowest choice index.
WinnerOutcome TallyWinner(const VotingTranscript& t);
int ArgmaxLowestIndex(const std::vector<Weight>& totals);

// kPaired requires a binary transcript (std::invalid_argument otherwise).
NoisedOutcome TallyNoised(const VotingTranscript& t, const NoiseSpec& spec,
                          uint64_t seed, NoiseMode mode = NoiseMode::kPaired);

CorrectedNoisedOutcome TallyCorrectedNoised(
    const VotingTranscript& t, const NoiseSpec& spec, uint64_t seed,
    NoiseMode mode = NoiseMode::kPaired);

// Applies a given paired draw to binary raw totals. Exposed so that callers
// can replay a specific noise realisation.
NoisedOutcome ApplyPairedNoise(const RawOutcome& raw, int scale, double y);

// Laplace mechanism on the yes total with scale w_max / epsilon, published in
// paired form. Throws std::invalid_argument for non-binary transcripts or
// epsilon <= 0.
NoisedOutcome TallyDp(const VotingTranscript& t, double epsilon,
                      uint64_t seed);
double DpNoiseScale(const VotingTranscript& t, double epsilon);

}  // namespace wvp

#endif  // WVP_CORE_TALLY_H_
