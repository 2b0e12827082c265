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

#include "wvp/cli/runs.h"

#include <algorithm>
#include <chrono>

#include "wvp/cli/worker_pool.h"
#include "wvp/core/rng.h"

namespace wvp {

using nlohmann::json;

RunLog::RunLog(const std::filesystem::path& path) : out_(path) {
  if (!out_) throw std::runtime_error("cannot open log " + path.string());
}

void RunLog::Write(const json& event) {
  std::lock_guard lock(mutex_);
  if (out_.is_open()) out_ << event.dump() << std::endl;
}

void RunLog::Proposal(const std::string& run, size_t index,
                      const std::string& id, double seconds,
                      const std::string& error) {
  json event = {{"event", "proposal"}, {"run", run},         {"index", index},
                {"id", id},            {"seconds", seconds}};
  if (!error.empty()) event["error"] = error;
  Write(event);
}

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs fill(i, row) for each proposal on the worker pool. Exceptions are
// recorded in row.error so one bad proposal does not stop the run.
template <typename Row, typename Fill>
std::vector<Row> ForEachProposal(const Corpus& corpus, const RunConfig& config,
                                 RunLog& log, const char* run, Fill fill) {
  std::vector<Row> rows(corpus.proposals.size());
  log.Write({{"event", "start"}, {"run", run},
             {"proposals", corpus.proposals.size()}});
  const auto started = Clock::now();
  ParallelFor(rows.size(), ResolveThreads(config), [&](size_t i) {
    const auto& p = corpus.proposals[i];
    Row& row = rows[i];
    row.id = p.transcript.proposal_id();
    row.dao = p.dao;
    row.voters = p.transcript.size();
    const auto t0 = Clock::now();
    try {
      fill(i, p, row);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    log.Proposal(run, i, row.id, SecondsSince(t0), row.error);
  });
  log.Write({{"event", "done"}, {"run", run},
             {"seconds", SecondsSince(started)}});
  return rows;
}

}  // namespace

std::vector<AttackRow> RunAttacks(const Corpus& corpus, const RunConfig& config,
                                  RunLog& log) {
  return ForEachProposal<AttackRow>(
      corpus, config, log, "attack",
      [&](size_t, const Proposal& p, AttackRow& row) {
        const auto& t = p.transcript;
        row.num_choices = t.num_choices();
        const auto weights = ToUnits(t.weights());
        const auto totals = ToUnits(TallyRaw(t).totals);
        row.result = UnifiedAttack(weights, totals, config.subset_sum_cap);
      });
}

std::vector<NoisedAttackRow> RunAttacksNoised(const Corpus& corpus,
                                              const RunConfig& config,
                                              RunLog& log) {
  return ForEachProposal<NoisedAttackRow>(
      corpus, config, log, "attack-noised",
      [&](size_t index, const Proposal& p, NoisedAttackRow& row) {
        const auto& t = p.transcript;
        row.num_choices = t.num_choices();
        const double total = t.TotalWeightAsDouble();
        const NoiseSpec spec =
            CalibrateNoise(config.perturbation_d, config.frequency_q, total);
        row.noise_scale = spec.scale;
        const NoiseMode mode = ResolveNoiseMode(config, t.num_choices());
        const auto weights = t.WeightsAsDouble();
        row.raw_determined =
            UnifiedAttack(ToUnits(t.weights()), ToUnits(TallyRaw(t).totals),
                          config.subset_sum_cap)
                .determined.size();
        row.trials = config.noised_trials;
        for (size_t trial = 0; trial < config.noised_trials; ++trial) {
          const uint64_t seed =
              DeriveSeed(config.seed, {index, kNoiseTrialStream, trial});
          const auto outcome = TallyCorrectedNoised(t, spec, seed, mode);
          const auto r =
              NoisedWhaleAttack(weights, outcome.noised_totals, outcome.winner,
                                config.perturbation_d, total);
          row.mean_determined += static_cast<double>(r.determined.size());
          row.max_determined = std::max(row.max_determined, r.determined.size());
          row.ballots_leaked_pct += r.ballots_leaked_pct;
          row.weight_leaked_pct += r.weight_leaked_pct;
          row.deniability_broken_rate += r.deniability_broken;
          row.full_recovery_rate += r.full_recovery;
        }
        const double n = static_cast<double>(config.noised_trials);
        row.mean_determined /= n;
        row.ballots_leaked_pct /= n;
        row.weight_leaked_pct /= n;
        row.deniability_broken_rate /= n;
        row.full_recovery_rate /= n;
      });
}

TallyPolicy NoisedPolicy(double d, double q, double total_weight) {
  return CorrectedNoised{CalibrateNoise(d, q, total_weight)};
}

namespace {

bool Bribed(const BPrivacyResult& r, size_t voter) {
  return r.feasible && voter < r.bribes.size() && r.bribes[voter] > 0;
}

}  // namespace

BPrivacyRow ComputeBPrivacyRow(const Proposal& proposal,
                               const RunConfig& config, uint64_t seed) {
  BPrivacyRow row;
  row.id = proposal.transcript.proposal_id();
  row.dao = proposal.dao;
  row.voters = proposal.transcript.size();
  const auto instance = BriberyInstance::FromTranscript(proposal.transcript);
  row.mdc = instance.mdc;
  row.total_weight = instance.total_weight();
  const auto options = ToBPrivacyOptions(config, seed);
  const TallyPolicy noised = NoisedPolicy(
      config.perturbation_d, config.frequency_q, row.total_weight);
  row.noise_scale = std::get<CorrectedNoised>(noised).noise.scale;
  const SamplingMatrices matrices(instance.weights.size(), options);
  row.full = ComputeBPrivacy(instance, FullDisclosure{}, options, &matrices);
  row.noised = ComputeBPrivacy(instance, noised, options, &matrices);
  row.winner = ComputeBPrivacy(instance, WinnerOnly{}, options, &matrices);
  row.relative_noised = RelativeBPrivacy(row.noised, row.full);
  row.relative_winner = RelativeBPrivacy(row.winner, row.full);
  row.noised.relative = row.relative_noised;
  row.winner.relative = row.relative_winner;
  if (row.full.feasible) row.full.relative = 1.0;

  size_t top = instance.weights.size();
  for (size_t i = 0; i < instance.weights.size(); ++i) {
    if (instance.opposing[i] &&
        (top == instance.weights.size() ||
         instance.weights[i] > instance.weights[top])) {
      top = i;
    }
  }
  row.top_voter_bribed = Bribed(row.full, top) && Bribed(row.noised, top) &&
                         Bribed(row.winner, top);
  return row;
}

std::vector<BPrivacyRow> RunBPrivacy(const Corpus& corpus,
                                     const RunConfig& config, RunLog& log) {
  return ForEachProposal<BPrivacyRow>(
      corpus, config, log, "bprivacy",
      [&](size_t index, const Proposal& p, BPrivacyRow& row) {
        row = ComputeBPrivacyRow(
            p, config, DeriveSeed(config.seed, {index, kBriberyStream}));
      });
}

std::vector<SweepRow> RunSweep(const Corpus& corpus, const RunConfig& config,
                               RunLog& log) {
  return ForEachProposal<SweepRow>(
      corpus, config, log, "sweep",
      [&](size_t index, const Proposal& p, SweepRow& row) {
        const auto instance = BriberyInstance::FromTranscript(p.transcript);
        row.mdc = instance.mdc;
        const auto options = ToBPrivacyOptions(
            config, DeriveSeed(config.seed, {index, kBriberyStream}));
        const SamplingMatrices matrices(instance.weights.size(), options);
        row.full =
            ComputeBPrivacy(instance, FullDisclosure{}, options, &matrices);
        if (row.full.feasible) row.full.relative = 1.0;
        row.winner = ComputeBPrivacy(instance, WinnerOnly{}, options, &matrices);
        row.relative_winner = RelativeBPrivacy(row.winner, row.full);
        row.winner.relative = row.relative_winner;
        const double total = instance.total_weight();
        for (double d : config.sweep_d) {
          SweepPoint point;
          point.d = d;
          const TallyPolicy policy =
              NoisedPolicy(d, config.frequency_q, total);
          point.noise_scale = std::get<CorrectedNoised>(policy).noise.scale;
          point.noised =
              ComputeBPrivacy(instance, policy, options, &matrices);
          point.relative = RelativeBPrivacy(point.noised, row.full);
          point.noised.relative = point.relative;
          row.points.push_back(std::move(point));
        }
      });
}

}  // namespace wvp
