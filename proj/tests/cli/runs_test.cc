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

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "wvp/cli/config.h"
#include "wvp/cli/ingest.h"
#include "wvp/cli/report.h"
#include "wvp/cli/runs.h"
#include "wvp/cli/synthetic.h"
#include "wvp/cli/worker_pool.h"
#include "wvp/core/tally.h"
#include "wvp/optimizer/mdc.h"

namespace wvp {
namespace {

namespace fs = std::filesystem;

std::string Slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("wvp_runs_" + std::to_string(::getpid()) + "_" + name);
  fs::remove_all(dir);
  return dir;
}

Corpus FromProposals(std::vector<Proposal> proposals) {
  Corpus corpus;
  corpus.proposals = std::move(proposals);
  corpus.report.accepted = corpus.proposals.size();
  corpus.report.lines = corpus.proposals.size();
  return corpus;
}

TEST(WorkerPoolTest, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(100);
  ParallelFor(hits.size(), 4, [&](size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  ParallelFor(0, 4, [](size_t) { FAIL(); });
}

TEST(WorkerPoolTest, RethrowsTaskErrors) {
  EXPECT_THROW(ParallelFor(10, 3,
                           [](size_t i) {
                             if (i == 7) throw std::runtime_error("boom");
                           }),
               std::runtime_error);
}

TEST(ReportTest, Formatting) {
  EXPECT_EQ(MdcCohort(0), "0");
  EXPECT_EQ(MdcCohort(1), "1");
  EXPECT_EQ(MdcCohort(4), "3-4");
  EXPECT_EQ(MdcCohort(9), "5+");
  EXPECT_EQ(FormatFixed(12.3456, 2), "12.35");
  EXPECT_EQ(FormatSignificant(1.0 / 3), "0.3333333333");
  EXPECT_EQ(FormatOptional(std::nullopt), "");
}

TEST(ReportTest, CsvQuoting) {
  const auto dir = Scratch("csv");
  fs::create_directories(dir);
  {
    CsvWriter csv(dir / "t.csv");
    csv.Row({"plain", "a,b", "say \"hi\"", ""});
  }
  EXPECT_EQ(Slurp(dir / "t.csv"), "plain,\"a,b\",\"say \"\"hi\"\"\",\n");
  fs::remove_all(dir);
}

TEST(SyntheticTest, DeterministicAndDistinct) {
  SyntheticSpec spec;
  spec.count = 5;
  spec.seed = 3;
  const auto a = GenerateCorpus(spec);
  const auto b = GenerateCorpus(spec);
  ASSERT_EQ(a.size(), 5u);
  for (size_t k = 0; k < a.size(); ++k) {
    const auto& t = a[k].transcript;
    EXPECT_EQ(RecordFromTranscript(t, "x").weights,
              RecordFromTranscript(b[k].transcript, "x").weights);
    EXPECT_GE(t.size(), spec.min_voters);
    EXPECT_LE(t.size(), spec.max_voters);
    std::vector<Weight> w(t.weights().begin(), t.weights().end());
    std::sort(w.begin(), w.end());
    EXPECT_EQ(std::adjacent_find(w.begin(), w.end()), w.end());
  }
}

TEST(SyntheticTest, CohortMdc) {
  SyntheticSpec spec;
  spec.count = 6;
  spec.seed = 1;
  spec.cohort = Cohort::kMajorityWhale;
  for (const auto& p : GenerateCorpus(spec)) {
    EXPECT_EQ(MinimumDecisiveCoalition(p.transcript), 1u);
  }
  spec.cohort = Cohort::kDispersed;
  for (const auto& p : GenerateCorpus(spec)) {
    EXPECT_GE(MinimumDecisiveCoalition(p.transcript), 5u);
  }
  EXPECT_EQ(ParseCohort(CohortName(Cohort::kDispersed)), Cohort::kDispersed);
  EXPECT_THROW(ParseCohort("huge"), std::invalid_argument);
}

TEST(RunsTest, DistinctWeightCorpusIsFullyRecovered) {
  SyntheticSpec spec;
  spec.count = 6;
  spec.min_voters = 10;
  spec.max_voters = 30;
  spec.seed = 2;
  const auto corpus = FromProposals(GenerateCorpus(spec));
  RunConfig config;
  config.threads = 2;
  RunLog log;
  for (const auto& row : RunAttacks(corpus, config, log)) {
    EXPECT_TRUE(row.error.empty()) << row.error;
    EXPECT_TRUE(row.result.full_recovery) << row.id;
  }
}

TEST(RunsTest, EqualWeightCorpusKeepsDeniability) {
  std::vector<Proposal> proposals;
  for (int k = 0; k < 4; ++k) {
    std::vector<std::string> w(8 + k, "1");
    std::vector<int> c;
    for (size_t i = 0; i < w.size(); ++i) c.push_back(static_cast<int>(i % 2));
    proposals.push_back(
        {"eq", VotingTranscript::FromDecimals("e" + std::to_string(k), 2, w, c)});
  }
  const auto corpus = FromProposals(std::move(proposals));
  RunLog log;
  for (const auto& row : RunAttacks(corpus, RunConfig{}, log)) {
    EXPECT_FALSE(row.result.deniability_broken) << row.id;
  }
}

TEST(RunsTest, NoisedAttacksDetermineFewerVoters) {
  SyntheticSpec spec;
  spec.count = 6;
  spec.min_voters = 10;
  spec.max_voters = 30;
  spec.seed = 5;
  const auto corpus = FromProposals(GenerateCorpus(spec));
  RunConfig config;
  RunLog log;
  for (const auto& row : RunAttacksNoised(corpus, config, log)) {
    EXPECT_TRUE(row.error.empty()) << row.error;
    EXPECT_EQ(row.trials, 10u);
    EXPECT_LT(row.mean_determined, static_cast<double>(row.raw_determined));
  }
}

TEST(RunsTest, BPrivacyRowsAndDeterministicReports) {
  SyntheticSpec spec;
  spec.count = 2;
  spec.min_voters = 8;
  spec.max_voters = 12;
  spec.seed = 7;
  const auto corpus = FromProposals(GenerateCorpus(spec));
  RunConfig config;
  config.strategies = {"linear/all", "equal/top-mdc"};
  config.threads = 2;
  RunLog log;
  const auto rows = RunBPrivacy(corpus, config, log);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.error.empty()) << row.error;
    ASSERT_TRUE(row.full.feasible);
    EXPECT_EQ(row.full.relative, 1.0);
  }
  const auto a = Scratch("bp_a");
  const auto b = Scratch("bp_b");
  WriteBPrivacyReport(a, rows, corpus, config);
  config.threads = 1;
  WriteBPrivacyReport(b, RunBPrivacy(corpus, config, log), corpus, config);
  for (const char* f : {"per_proposal.csv", "per_dao.csv", "mdc_cohorts.csv"}) {
    EXPECT_EQ(Slurp(a / f), Slurp(b / f)) << f;
    EXPECT_FALSE(Slurp(a / f).empty());
  }
  EXPECT_TRUE(fs::exists(a / "summary.json"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(RunsTest, SweepStartsAtPublicAndAddsWinnerReference) {
  SyntheticSpec spec;
  spec.count = 2;
  spec.min_voters = 8;
  spec.max_voters = 12;
  spec.seed = 11;
  const auto corpus = FromProposals(GenerateCorpus(spec));
  RunConfig config;
  config.strategies = {"linear/all"};
  config.sweep_d = {0.0, 0.3};
  config.threads = 1;
  RunLog log;
  const auto rows = RunSweep(corpus, config, log);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.error.empty()) << row.error;
    ASSERT_TRUE(row.full.feasible);
    ASSERT_EQ(row.points.size(), 2u);
    // d = 0 carries no noise, so it is the public tally probe for probe.
    EXPECT_EQ(row.points[0].noise_scale, 0.0);
    EXPECT_EQ(row.points[0].relative, 1.0);
    EXPECT_EQ(row.relative_winner.has_value(), row.winner.feasible);
  }
  const auto dir = Scratch("sweep");
  WriteSweepReport(dir, rows, corpus, config);
  const std::string csv = Slurp(dir / "sweep.csv");
  EXPECT_NE(csv.find("budget_winner,relative_winner"), std::string::npos);
  // Header plus one line per (proposal, d).
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  fs::remove_all(dir);
}

TEST(RunsTest, PerProposalFailuresAreRecorded) {
  std::vector<Proposal> proposals;
  // A multi-choice proposal cannot be bribed; its row carries the error and
  // the run continues.
  proposals.push_back(
      {"d", VotingTranscript::FromDecimals("m", 3, {"1", "2"}, {0, 2})});
  proposals.push_back(
      {"d", VotingTranscript::FromDecimals("b", 2, {"1", "2"}, {0, 1})});
  const auto corpus = FromProposals(std::move(proposals));
  RunConfig config;
  config.strategies = {"linear/all"};
  RunLog log;
  const auto rows = RunBPrivacy(corpus, config, log);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_TRUE(rows[1].error.empty());
}

TEST(RunsTest, NoisedPolicyCalibration) {
  const auto policy = NoisedPolicy(0.1, 0.95, 3.4);
  EXPECT_NEAR(std::get<CorrectedNoised>(policy).noise.scale,
              0.34 / std::log(20.0), 1e-15);
}

}  // namespace
}  // namespace wvp
