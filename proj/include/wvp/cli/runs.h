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

#ifndef WVP_CLI_RUNS_H_
#define WVP_CLI_RUNS_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wvp/attacks/attacks.h"
#include "wvp/cli/config.h"
#include "wvp/cli/ingest.h"
#include "wvp/optimizer/bprivacy.h"

namespace wvp {

// Structured JSONL log of progress and per-proposal timings. Safe to call
// from worker threads; a default-constructed log discards everything.
class RunLog {
 public:
  RunLog() = default;
  explicit RunLog(const std::filesystem::path& path);

  void Write(const nlohmann::json& event);
  void Proposal(const std::string& run, size_t index, const std::string& id,
                double seconds, const std::string& error = {});

 private:
  std::mutex mutex_;
  std::ofstream out_;
};

// Sub-stream labels under (run seed, proposal index).
inline constexpr uint64_t kNoiseTrialStream = 0x4e4f4953;  // "NOIS"
inline constexpr uint64_t kBriberyStream = 0x42524942;     // "BRIB"

struct AttackRow {
  std::string id;
  std::string dao;
  size_t voters = 0;
  int num_choices = 2;
  AttackResult result;
  std::string error;
};

std::vector<AttackRow> RunAttacks(const Corpus& corpus, const RunConfig& config,
                                  RunLog& log);

// Corrected-noised tallies drawn noised_trials times per proposal, each
// attacked with the noised whale rule; leak figures are trial means.
struct NoisedAttackRow {
  std::string id;
  std::string dao;
  size_t voters = 0;
  int num_choices = 2;
  double noise_scale = 0.0;
  size_t trials = 0;
  double mean_determined = 0.0;
  size_t max_determined = 0;
  size_t raw_determined = 0;  // unified attack on the exact tally
  double ballots_leaked_pct = 0.0;
  double weight_leaked_pct = 0.0;
  double deniability_broken_rate = 0.0;
  double full_recovery_rate = 0.0;
  std::string error;
};

std::vector<NoisedAttackRow> RunAttacksNoised(const Corpus& corpus,
                                              const RunConfig& config,
                                              RunLog& log);

// Public, corrected-noised (at config.perturbation_d) and winner-only
// budgets for one binary proposal.
struct BPrivacyRow {
  std::string id;
  std::string dao;
  size_t voters = 0;
  size_t mdc = 0;
  double total_weight = 0.0;
  double noise_scale = 0.0;
  BPrivacyResult full;
  BPrivacyResult noised;
  BPrivacyResult winner;
  std::optional<double> relative_noised;
  std::optional<double> relative_winner;
  // Whether the heaviest opposing voter is bribed in all three plans.
  bool top_voter_bribed = false;
  std::string error;
};

std::vector<BPrivacyRow> RunBPrivacy(const Corpus& corpus,
                                     const RunConfig& config, RunLog& log);

struct SweepPoint {
  double d = 0.0;
  double noise_scale = 0.0;
  BPrivacyResult noised;
  std::optional<double> relative;
};

struct SweepRow {
  std::string id;
  std::string dao;
  size_t voters = 0;
  size_t mdc = 0;
  BPrivacyResult full;
  BPrivacyResult winner;  // winner-only reference for the sweep
  std::optional<double> relative_winner;
  std::vector<SweepPoint> points;  // one per config.sweep_d, in order
  std::string error;
};

std::vector<SweepRow> RunSweep(const Corpus& corpus, const RunConfig& config,
                               RunLog& log);

// Corrected-noised policy calibrated to (d, q) on a proposal of weight W.
TallyPolicy NoisedPolicy(double d, double q, double total_weight);

// Rows for one proposal, exposed for direct use on a single instance.
BPrivacyRow ComputeBPrivacyRow(const Proposal& proposal,
                               const RunConfig& config, uint64_t seed);

}  // namespace wvp

#endif  // WVP_CLI_RUNS_H_
