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

#ifndef WVP_CLI_CONFIG_H_
#define WVP_CLI_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wvp/cli/ingest.h"
#include "wvp/core/tally.h"
#include "wvp/optimizer/bprivacy.h"

namespace wvp {

// Environment variable holding the default worker count.
inline constexpr const char* kThreadsEnv = "WVP_THREADS";

struct RunConfig {
  uint64_t seed = 1;
  double perturbation_d = 0.1;
  double frequency_q = 0.95;
  double target_p = 0.9;
  double sigma = 1.0;
  size_t mc_samples = 1000;
  size_t mc_escalated_samples = 10000;
  size_t subset_sum_cap = 45;
  size_t noised_trials = 10;
  // Allocation strategy labels (see ParseStrategy); empty means defaults.
  std::vector<std::string> strategies;
  std::vector<double> sweep_d = {0.0, 0.02, 0.05, 0.1, 0.3, 1.0};
  // "auto" pairs the noise on binary proposals and draws per choice
  // otherwise; "paired" or "independent" force one form.
  std::string noise_mode = "auto";
  double initial_budget = 1.0;
  double max_budget = 1e9;
  int scale = kDefaultDecimalScale;
  size_t max_voters = kDefaultMaxVoters;
  std::optional<int> abstain_choice;
  size_t threads = 0;  // 0: WVP_THREADS, else hardware concurrency
};

// Overlays the keys present in `j` onto `config`. Keys use the field names
// above. Throws std::invalid_argument for unknown keys or wrong types.
void ApplyConfigJson(const nlohmann::json& j, RunConfig& config);
RunConfig LoadConfigFile(const std::filesystem::path& path,
                         const RunConfig& base = {});
nlohmann::json ConfigToJson(const RunConfig& config);

// Throws std::invalid_argument when a value is out of range.
void ValidateConfig(const RunConfig& config);

size_t ResolveThreads(const RunConfig& config);
NoiseMode ResolveNoiseMode(const RunConfig& config, int num_choices);
IngestOptions ToIngestOptions(const RunConfig& config, IngestMode mode);
BPrivacyOptions ToBPrivacyOptions(const RunConfig& config, uint64_t seed);

}  // namespace wvp

#endif  // WVP_CLI_CONFIG_H_
