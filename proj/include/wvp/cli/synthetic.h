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

#ifndef WVP_CLI_SYNTHETIC_H_
#define WVP_CLI_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wvp/cli/ingest.h"

namespace wvp {

enum class Cohort {
  // Lognormal weights whose log-spread varies per proposal.
  kMixed,
  // One voter on the winning side holds 60% of the weight (MDC 1).
  kMajorityWhale,
  // Near-equal weights and a wide margin, regenerated until MDC >= 5.
  kDispersed,
};

const char* CohortName(Cohort cohort);
Cohort ParseCohort(const std::string& name);

struct SyntheticSpec {
  size_t count = 50;
  size_t min_voters = 20;
  size_t max_voters = 200;
  Cohort cohort = Cohort::kMixed;
  int scale = kDefaultDecimalScale;
  uint64_t seed = 0;
  std::string dao = "synthetic";
};

// Binary proposals whose weights carry `scale` random decimals, so weights
// are distinct with overwhelming probability. Equal SyntheticSpecs give
// equal corpora.
std::vector<Proposal> GenerateCorpus(const SyntheticSpec& spec);

// A single proposal with n voters; `index` selects the sub-stream.
Proposal GenerateProposal(const SyntheticSpec& spec, size_t index, size_t n);

}  // namespace wvp

#endif  // WVP_CLI_SYNTHETIC_H_
