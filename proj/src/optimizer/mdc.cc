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

#include "wvp/optimizer/mdc.h"

#include <algorithm>
#include <stdexcept>

#include "wvp/core/tally.h"

namespace wvp {

std::vector<size_t> DecisiveCoalition(const VotingTranscript& t) {
  if (!t.is_binary()) throw std::invalid_argument("MDC needs a binary proposal");
  const auto raw = TallyRaw(t);
  Units yes = raw.totals[kYes].units();
  Units no = raw.totals[kNo].units();
  const int winner = yes >= no ? kYes : kNo;

  std::vector<size_t> side;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t.choices()[i] == winner) side.push_back(i);
  }
  const auto w = t.weights();
  std::stable_sort(side.begin(), side.end(),
                   [&](size_t a, size_t b) { return w[a] > w[b]; });

  std::vector<size_t> coalition;
  for (size_t i : side) {
    coalition.push_back(i);
    const Units moved = w[i].units();
    if (winner == kYes) {
      yes -= moved;
      no += moved;
      if (no > yes) return coalition;
    } else {
      no -= moved;
      yes += moved;
      if (yes >= no) return coalition;
    }
  }
  throw std::logic_error("moving the whole winning side must flip the outcome");
}

size_t MinimumDecisiveCoalition(const VotingTranscript& t) {
  return DecisiveCoalition(t).size();
}

}  // namespace wvp
