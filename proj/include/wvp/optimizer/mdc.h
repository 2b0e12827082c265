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

#ifndef WVP_OPTIMIZER_MDC_H_
#define WVP_OPTIMIZER_MDC_H_

#include <cstddef>
#include <vector>

#include "wvp/core/transcript.h"

namespace wvp {

// Minimum decisive coalition: the fewest winner-side voters whose switch to
// the other choice changes the winner (ties go to the lower choice index).
// Taking the heaviest winner-side voters first is optimal for cardinality.
// A tie is a yes win, so it takes one yes voter to break. Throws std::invalid_argument for non-binary
// transcripts.
size_t MinimumDecisiveCoalition(const VotingTranscript& t);

// The voters of that coalition, heaviest first (ties by index).
std::vector<size_t> DecisiveCoalition(const VotingTranscript& t);

}  // namespace wvp

#endif  // WVP_OPTIMIZER_MDC_H_
