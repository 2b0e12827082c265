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

// wvp: ballot-extraction attacks and B-privacy runs over NDJSON corpora.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wvp/cli/config.h"
#include "wvp/cli/ingest.h"
#include "wvp/cli/report.h"
#include "wvp/cli/runs.h"
#include "wvp/cli/synthetic.h"
#include "wvp/core/noise.h"

namespace {

using wvp::RunConfig;

// Flags shared by the corpus subcommands. Values are applied on top of the
// config file only when given on the command line.
struct CommonFlags {
  std::string input;
  std::string out = "wvp_out";
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<double> d, q, target_p, sigma, initial_budget, max_budget;
  std::optional<size_t> mc, cap, trials, threads, max_voters;
  std::optional<int> scale, abstain;
  std::optional<std::string> noise_mode;
  std::vector<std::string> strategies;
  std::vector<double> sweep_d;
};

void AddCommon(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("input", f.input, "NDJSON file or directory")->required();
  cmd->add_option("--out", f.out, "output directory")->capture_default_str();
  cmd->add_option("--config", f.config_path, "JSON config file");
  cmd->add_option("--seed", f.seed, "run seed");
  cmd->add_option("--threads", f.threads, "worker threads (default $WVP_THREADS)");
  cmd->add_option("--scale", f.scale, "decimal places of weights");
  cmd->add_option("--max-voters", f.max_voters, "skip larger proposals");
  cmd->add_option("--abstain", f.abstain, "choice index treated as abstention");
}

void AddNoise(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--d", f.d, "tally perturbation d");
  cmd->add_option("--q", f.q, "perturbation frequency q");
}

void AddBribery(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--target-p", f.target_p, "adversary success target");
  cmd->add_option("--sigma", f.sigma, "utility standard deviation");
  cmd->add_option("--mc", f.mc, "Monte Carlo samples");
  cmd->add_option("--strategy", f.strategies,
                  "allocation strategy label, repeatable (e.g. linear/top10%)");
  cmd->add_option("--initial-budget", f.initial_budget, "first budget probe");
  cmd->add_option("--max-budget", f.max_budget, "give up beyond this budget");
}

template <typename T>
void Overlay(const std::optional<T>& flag, T& field) {
  if (flag) field = *flag;
}

RunConfig Resolve(const CommonFlags& f) {
  RunConfig c;
  if (!f.config_path.empty()) c = wvp::LoadConfigFile(f.config_path, c);
  Overlay(f.seed, c.seed);
  Overlay(f.d, c.perturbation_d);
  Overlay(f.q, c.frequency_q);
  Overlay(f.target_p, c.target_p);
  Overlay(f.sigma, c.sigma);
  Overlay(f.initial_budget, c.initial_budget);
  Overlay(f.max_budget, c.max_budget);
  Overlay(f.mc, c.mc_samples);
  Overlay(f.cap, c.subset_sum_cap);
  Overlay(f.trials, c.noised_trials);
  Overlay(f.threads, c.threads);
  Overlay(f.max_voters, c.max_voters);
  Overlay(f.scale, c.scale);
  Overlay(f.noise_mode, c.noise_mode);
  if (f.abstain) c.abstain_choice = *f.abstain;
  if (!f.strategies.empty()) c.strategies = f.strategies;
  if (!f.sweep_d.empty()) c.sweep_d = f.sweep_d;
  wvp::ValidateConfig(c);
  return c;
}

void PrintIngest(const wvp::Corpus& corpus) {
  const auto& r = corpus.report;
  std::fprintf(stderr,
               "ingested %zu of %zu records (malformed %zu, not binary %zu, "
               "too many voters %zu, empty %zu)\n",
               r.accepted, r.lines, r.malformed, r.not_binary,
               r.too_many_voters, r.no_voters_left);
  for (const auto& d : r.diagnostics) std::fprintf(stderr, "  %s\n", d.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted-voting privacy toolkit"};
  app.require_subcommand(1);

  CommonFlags attack, noised, bpriv, sweep, mdc;

  auto* attack_cmd =
      app.add_subcommand("attack", "whale and subset-sum attacks on raw tallies");
  AddCommon(attack_cmd, attack);
  attack_cmd->add_option("--cap", attack.cap, "subset-sum voter cap");

  auto* noised_cmd = app.add_subcommand(
      "attack-noised", "whale attack on corrected noised tallies");
  AddCommon(noised_cmd, noised);
  AddNoise(noised_cmd, noised);
  noised_cmd->add_option("--trials", noised.trials, "noise draws per proposal");
  noised_cmd->add_option("--cap", noised.cap, "subset-sum cap for the raw baseline");
  noised_cmd->add_option("--noise-mode", noised.noise_mode,
                         "auto, paired or independent");

  auto* bpriv_cmd = app.add_subcommand(
      "bprivacy", "B-privacy of public, noised and winner-only tallies");
  AddCommon(bpriv_cmd, bpriv);
  AddNoise(bpriv_cmd, bpriv);
  AddBribery(bpriv_cmd, bpriv);

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "relative B-privacy of noised tallies across perturbations d");
  AddCommon(sweep_cmd, sweep);
  AddNoise(sweep_cmd, sweep);
  AddBribery(sweep_cmd, sweep);
  sweep_cmd->add_option("--sweep-d", sweep.sweep_d, "perturbation values");

  auto* mdc_cmd = app.add_subcommand("mdc", "minimum decisive coalitions");
  AddCommon(mdc_cmd, mdc);

  double cal_d = 0.1, cal_q = 0.95, cal_w = 1.0;
  auto* cal_cmd =
      app.add_subcommand("calibrate", "Laplace scale for a tally perturbation");
  cal_cmd->add_option("--d", cal_d, "tally perturbation d")->capture_default_str();
  cal_cmd->add_option("--q", cal_q, "perturbation frequency q")->capture_default_str();
  cal_cmd->add_option("--W", cal_w, "total weight")->capture_default_str();

  wvp::SyntheticSpec synth;
  std::string synth_cohort = "mixed", synth_out = "-";
  auto* synth_cmd =
      app.add_subcommand("synth", "write a synthetic NDJSON corpus");
  synth_cmd->add_option("--count", synth.count)->capture_default_str();
  synth_cmd->add_option("--min-voters", synth.min_voters)->capture_default_str();
  synth_cmd->add_option("--max-voters", synth.max_voters)->capture_default_str();
  synth_cmd->add_option("--cohort", synth_cohort, "mixed, whale or dispersed")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed)->capture_default_str();
  synth_cmd->add_option("--scale", synth.scale)->capture_default_str();
  synth_cmd->add_option("--dao", synth.dao)->capture_default_str();
  synth_cmd->add_option("--out", synth_out, "file, or - for stdout")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cal_cmd) {
      const auto spec = wvp::CalibrateNoise(cal_d, cal_q, cal_w);
      nlohmann::json j = {{"perturbation_d", spec.perturbation_d},
                          {"frequency_q", spec.frequency_q},
                          {"total_weight", spec.total_weight},
                          {"laplace_scale", spec.scale}};
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (*synth_cmd) {
      synth.cohort = wvp::ParseCohort(synth_cohort);
      const auto corpus = wvp::GenerateCorpus(synth);
      std::ofstream file;
      if (synth_out != "-") {
        file.open(synth_out);
        if (!file) throw std::runtime_error("cannot write " + synth_out);
      }
      std::ostream& out = synth_out == "-" ? std::cout : file;
      for (const auto& p : corpus) {
        out << wvp::SerializeProposalRecord(
                   wvp::RecordFromTranscript(p.transcript, p.dao))
            << '\n';
      }
      return 0;
    }

    struct Selected {
      CLI::App* cmd;
      CommonFlags* flags;
      wvp::IngestMode mode;
    };
    Selected selected{};
    for (const Selected& s :
         {Selected{attack_cmd, &attack, wvp::IngestMode::kAttack},
          Selected{noised_cmd, &noised, wvp::IngestMode::kAttack},
          Selected{bpriv_cmd, &bpriv, wvp::IngestMode::kBPrivacy},
          Selected{sweep_cmd, &sweep, wvp::IngestMode::kBPrivacy},
          Selected{mdc_cmd, &mdc, wvp::IngestMode::kBPrivacy}}) {
      if (*s.cmd) selected = s;
    }
    const RunConfig config = Resolve(*selected.flags);
    const auto corpus = wvp::IngestCorpus(
        selected.flags->input, wvp::ToIngestOptions(config, selected.mode));
    PrintIngest(corpus);
    const std::filesystem::path out = selected.flags->out;
    std::filesystem::create_directories(out);
    wvp::RunLog log(out / "run_log.jsonl");

    if (selected.cmd == attack_cmd) {
      wvp::WriteAttackReport(out, wvp::RunAttacks(corpus, config, log), corpus,
                             config);
    } else if (selected.cmd == noised_cmd) {
      wvp::WriteNoisedAttackReport(
          out, wvp::RunAttacksNoised(corpus, config, log), corpus, config);
    } else if (selected.cmd == bpriv_cmd) {
      wvp::WriteBPrivacyReport(out, wvp::RunBPrivacy(corpus, config, log),
                               corpus, config);
    } else if (selected.cmd == sweep_cmd) {
      wvp::WriteSweepReport(out, wvp::RunSweep(corpus, config, log), corpus,
                            config);
    } else {
      wvp::WriteMdcReport(out, corpus, config);
    }
    std::fprintf(stderr, "wrote %s\n", out.string().c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "wvp: %s\n", e.what());
    return 1;
  }
  return 0;
}
