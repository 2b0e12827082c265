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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any fails. Pass criterion numbers to run a subset.
//
//   acceptance [--out DIR] [N ...]

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "wvp/attacks/attacks.h"
#include "wvp/cli/config.h"
#include "wvp/cli/report.h"
#include "wvp/cli/runs.h"
#include "wvp/cli/synthetic.h"
#include "wvp/core/noise.h"
#include "wvp/core/rng.h"
#include "wvp/core/tally.h"
#include "wvp/core/transcript.h"
#include "wvp/game/bruteforce.h"
#include "wvp/game/equilibrium.h"
#include "wvp/game/normal.h"
#include "wvp/optimizer/bprivacy.h"

namespace fs = std::filesystem;

namespace wvp {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

double PeakRssGb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<Units> Totals(const VotingTranscript& t) {
  return ToUnits(TallyRaw(t).totals);
}

// 1. Worked example: w = (1, 1.1, 1.3), c = (yes, no, yes).
Verdict WorkedExample() {
  const auto start = std::chrono::steady_clock::now();
  const auto t = VotingTranscript::FromDecimals("example", 2,
                                                {"1", "1.1", "1.3"},
                                                {kYes, kNo, kYes});
  const auto raw = TallyRaw(t);
  const bool raw_ok = raw.totals[kYes] == Weight::Parse("2.3") &&
                      raw.totals[kNo] == Weight::Parse("1.1");
  const NoiseSpec noise = CalibrateNoise(0.1, 0.95, t.TotalWeightAsDouble());
  const bool scale_ok =
      std::fabs(noise.scale - 0.34 / std::log(20.0)) <= 1e-15;
  const auto noised = ApplyPairedNoise(raw, t.scale(), 0.1);
  const int winner = TallyWinner(t).winner;
  const bool noised_ok = std::fabs(noised.totals[kYes] - 2.2) <= 1e-12 &&
                         std::fabs(noised.totals[kNo] - 1.2) <= 1e-12 &&
                         winner == kYes;

  const auto w = ToUnits(t.weights());
  const auto from_raw = UnifiedAttack(w, Totals(t));
  bool recovered = from_raw.full_recovery;
  for (size_t i = 0; i < t.size(); ++i) {
    recovered = recovered && from_raw.determined.count(i) &&
                from_raw.determined.at(i) == t.choices()[i];
  }
  std::vector<Units> noised_units;
  for (double v : noised.totals) {
    noised_units.push_back(
        Weight::Parse(Format("%.17g", v), t.scale()).units());
  }
  const auto from_noised = SubsetSumAttack(w, noised_units);
  const bool nothing = from_noised.determined.empty();
  const double secs = Seconds(start);

  Verdict v;
  v.pass = raw_ok && scale_ok && noised_ok && recovered && nothing && secs < 1;
  v.detail = Format(
      "raw %d, b %d, noised (yes %.3f, no %.3f, winner %s) %d, raw attack "
      "recovers all %d, noised attack determines %zu, %.3f s",
      raw_ok, scale_ok, noised.totals[kYes], noised.totals[kNo],
      winner == kYes ? "yes" : "no", noised_ok, recovered,
      from_noised.determined.size(), secs);
  return v;
}

// 2. Unified attack against the enumeration oracle.
Verdict OracleEquivalence() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(2024);
  size_t matches = 0, misassigned = 0;
  const size_t cases = 500;
  for (size_t k = 0; k < cases; ++k) {
    const size_t n = 1 + rng.NextU64() % 12;
    const int decimals = static_cast<int>(rng.NextU64() % 4);
    const auto t = testing::RandomDistinctBinary(10'000 + k, n, decimals);
    const auto w = ToUnits(t.weights());
    const auto totals = Totals(t);
    const auto got = UnifiedAttack(w, totals);
    const auto want = testing::ConsensusByEnumeration(w, totals);
    if (got.determined == want) ++matches;
    for (const auto& [voter, choice] : got.determined) {
      if (choice != t.choices()[voter]) ++misassigned;
    }
  }
  const double secs = Seconds(start);
  Verdict v;
  v.pass = matches == cases && misassigned == 0 && secs < 60;
  v.detail = Format("%zu/%zu match, %zu mis-assignments, %.2f s", matches,
                    cases, misassigned, secs);
  return v;
}

// 3. Meet-in-the-middle at n = 40 with 18-decimal weights.
Verdict SubsetSumPerformance() {
  const auto start = std::chrono::steady_clock::now();
  const auto t = testing::RandomDistinctBinary(40'40, 40, 18);
  const auto result = UnifiedAttack(ToUnits(t.weights()), Totals(t));
  bool correct = result.full_recovery;
  for (const auto& [voter, choice] : result.determined) {
    correct = correct && choice == t.choices()[voter];
  }
  const bool ran = result.subset_sum == SubsetSumStatus::kCompleted;
  // Voters the whale stage alone pins down.
  const size_t whales =
      WhaleAttack(ToUnits(t.weights()), Totals(t)).determined.size();
  const double secs = Seconds(start);
  const double gb = PeakRssGb();
  Verdict v;
  v.pass = correct && ran && secs <= 300 && gb <= 8;
  v.detail = Format(
      "full recovery %d, subset-sum stage ran %d on %zu voters, %.1f s, "
      "peak RSS %.2f GB",
      correct, ran, t.size() - whales, secs, gb);
  return v;
}

// 4. Empirical Pr(|Y| <= dW) at the calibrated scale.
Verdict Calibration() {
  const size_t draws = 1'000'000;
  size_t worst_index = 0, cell = 0;
  double worst = 0.0;
  bool pass = true;
  for (double d : {0.05, 0.1, 0.3}) {
    for (double q : {0.9, 0.95}) {
      for (double total : {1.0, 3.4, 1e6}) {
        const NoiseSpec noise = CalibrateNoise(d, q, total);
        Rng rng(DeriveSeed(77, {cell}));
        size_t inside = 0;
        for (size_t k = 0; k < draws; ++k) {
          inside += std::fabs(rng.Laplace(noise.scale)) <= d * total;
        }
        const double err =
            std::fabs(static_cast<double>(inside) / draws - q);
        if (err > worst) {
          worst = err;
          worst_index = cell;
        }
        pass = pass && err <= 0.005;
        ++cell;
      }
    }
  }
  Verdict v;
  v.pass = pass;
  v.detail = Format("18 cells, largest |freq - q| %.5f (cell %zu)", worst,
                    worst_index);
  return v;
}

struct SmallInstance {
  std::vector<double> w;
  std::vector<double> p;
  double d = 0.1;
  double epsilon = 1.0;
};

std::vector<SmallInstance> SmallInstances() {
  Rng rng(5150);
  std::vector<SmallInstance> out(200);
  for (auto& inst : out) {
    const size_t n = 1 + rng.NextU64() % 10;
    for (size_t i = 0; i < n; ++i) {
      inst.w.push_back(0.1 + 5 * rng.Uniform());
      inst.p.push_back(0.02 + 0.96 * rng.Uniform());
    }
    inst.d = 0.02 + 0.48 * rng.Uniform();
    inst.epsilon = 0.1 + 2.9 * rng.Uniform();
  }
  return out;
}

// 5. Brute-force margins against the closed-form bounds.
Verdict MarginBounds() {
  const auto start = std::chrono::steady_clock::now();
  const double budget = 1e-3;
  size_t voters = 0, cn_violations = 0, dp_violations = 0;
  double cn_slack = -1.0, dp_slack = -1.0;  // largest alpha* - bound
  for (const auto& inst : SmallInstances()) {
    double total = 0.0;
    for (double w : inst.w) total += w;
    const NoiseSpec noise = CalibrateNoise(inst.d, 0.95, total);
    const auto delta = testing::ExactPivotality(inst.w, inst.p);
    for (size_t i = 0; i < inst.w.size(); ++i) {
      ++voters;
      const double cn_bound =
          delta[i] +
          (1 - delta[i]) * (1 - std::exp(-inst.w[i] / (2 * noise.scale)));
      const double cn =
          AnalyzeVoter(inst.w, inst.p, i, CorrectedNoised{noise}).alpha_star;
      cn_slack = std::max(cn_slack, cn - cn_bound);
      cn_violations += cn > cn_bound + budget;

      const double dp_bound = 1 - std::exp(-inst.epsilon);
      const double dp =
          AnalyzeVoter(inst.w, inst.p, i, DpNoised{inst.epsilon}).alpha_star;
      dp_slack = std::max(dp_slack, dp - dp_bound);
      dp_violations += dp > dp_bound + budget;
    }
  }
  Verdict v;
  v.pass = cn_violations == 0 && dp_violations == 0;
  v.detail = Format(
      "%zu voters; corrected-noised violations %zu (max alpha*-bound %.2e), "
      "dp violations %zu (max %.2e), %.1f s",
      voters, cn_violations, cn_slack, dp_violations, dp_slack,
      Seconds(start));
  return v;
}

// 6. EPD = 1 - alpha* for discrete-outcome policies.
Verdict EpdIdentity() {
  size_t checks = 0, violations = 0;
  double worst = 0.0;
  for (const auto& inst : SmallInstances()) {
    for (size_t i = 0; i < inst.w.size(); ++i) {
      for (const TallyPolicy& policy :
           {TallyPolicy{FullDisclosure{}}, TallyPolicy{WinnerOnly{}}}) {
        const auto r = AnalyzeVoter(inst.w, inst.p, i, policy);
        const double err = std::fabs(r.epd - (1 - r.alpha_star));
        worst = std::max(worst, err);
        violations += !(err < 1e-9);
        ++checks;
      }
    }
  }
  Verdict v;
  v.pass = violations == 0;
  v.detail = Format("%zu voter-policy pairs, %zu violations, max error %.2e",
                    checks, violations, worst);
  return v;
}

// 7. Three equal voters, no bribes.
Verdict EquilibriumSanity() {
  const std::vector<double> w = {1, 1, 1};
  const std::vector<double> b = {0, 0, 0};
  const UtilityModel utility{{1, 1, 1}, 1.0};
  EquilibriumOptions options;
  options.seed = 3;
  const auto state = SolveEquilibrium(w, utility, b, FullDisclosure{}, options);
  const double p = NormalCdf(-1.0);
  const auto exact = testing::ExactPivotality(w, std::vector<double>(3, p));
  bool pass = state.converged;
  double p_err = 0.0, z = 0.0;
  for (size_t i = 0; i < 3; ++i) {
    p_err = std::max(p_err, std::fabs(state.yes_prob[i] - p));
    const double se = state.delta_std_error[i];
    const double dev = std::fabs(state.delta[i] - exact[i]);
    z = std::max(z, se > 0 ? dev / se : (dev == 0 ? 0.0 : HUGE_VAL));
    pass = pass && std::fabs(state.yes_prob[i] - p) <= 1e-3 && dev <= 3 * se;
  }
  Verdict v;
  v.pass = pass;
  v.detail = Format(
      "converged %d, max |p - Phi(-1)| %.2e, exact delta %.5f, estimate "
      "%.5f, max |delta - exact| / se %.2f",
      state.converged, p_err, exact[0], state.delta[0], z);
  return v;
}

// 8. One voter: b* = 1 + Phi^-1(0.9).
Verdict SingleVoter() {
  const auto inst = BriberyInstance::FromTranscript(
      VotingTranscript::FromDecimals("one", 2, {"1"}, {kNo}));
  BPrivacyOptions options;
  options.seed = 8;
  const auto result = ComputeBPrivacy(inst, FullDisclosure{}, options);
  const double expected = 1 + NormalQuantile(0.9);
  const double rel = std::fabs(result.budget - expected) / expected;
  Verdict v;
  v.pass = result.feasible && rel <= 0.02;
  v.detail = Format("B* %.4f vs %.4f, relative error %.2f%%", result.budget,
                    expected, 100 * rel);
  return v;
}

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double BudgetOrInf(const BPrivacyResult& r) {
  return r.feasible ? r.budget : kInfinity;
}

std::optional<double> RelativeOrInf(const SweepPoint& point,
                                    const BPrivacyResult& full) {
  if (!full.feasible) return std::nullopt;
  if (!point.noised.feasible) return kInfinity;
  return point.relative;
}

// Criterion 9's run: the noise sweep with a winner-only reference, written
// as the sweep report.
struct MonotonicityRun {
  Corpus corpus;
  RunConfig config;
  std::vector<SweepRow> rows;
};

MonotonicityRun RunMonotonicity(const fs::path& dir) {
  SyntheticSpec spec;
  spec.count = 50;
  spec.min_voters = 20;
  spec.max_voters = 200;
  spec.cohort = Cohort::kMixed;
  spec.seed = 909;
  MonotonicityRun run;
  run.corpus.proposals = GenerateCorpus(spec);
  run.corpus.report.lines = run.corpus.report.accepted = spec.count;
  run.config.seed = 99;
  run.config.sweep_d = {0.0, 0.05, 0.1, 0.3};
  RunLog log;
  run.rows = RunSweep(run.corpus, run.config, log);
  WriteSweepReport(dir, run.rows, run.corpus, run.config);
  return run;
}

// Budgets that agree within the bisection width are not ordered by it.
bool NotAbove(double a, double b, double width) {
  return a <= b * (1 + width);
}

Verdict InformationMonotonicity(const MonotonicityRun& run) {
  const double width = BisectSpec{}.relative_width;
  const size_t d_index = 2;  // d = 0.1
  size_t ordered = 0, monotone = 0, errors = 0;
  std::vector<std::string> broken;
  for (const auto& row : run.rows) {
    if (!row.error.empty()) {
      ++errors;
      broken.push_back(row.id + " (error)");
      continue;
    }
    const double pub = BudgetOrInf(row.full);
    const double noised = BudgetOrInf(row.points[d_index].noised);
    const double winner = BudgetOrInf(row.winner);
    if (NotAbove(pub, noised, width) && NotAbove(noised, winner, width)) {
      ++ordered;
    }
    bool rising = true;
    for (size_t k = 0; k < row.points.size(); ++k) {
      const auto rel = RelativeOrInf(row.points[k], row.full);
      if (!rel) {
        rising = false;
        break;
      }
      if (k > 0) {
        const auto prev = RelativeOrInf(row.points[k - 1], row.full);
        if (*rel < *prev * (1 - 0.05)) rising = false;
      }
    }
    if (rising) {
      ++monotone;
    } else {
      broken.push_back(row.id);
    }
  }
  const size_t n = run.rows.size();
  Verdict v;
  v.pass = errors == 0 && ordered >= 48 && monotone == n;
  v.detail = Format("ordering %zu/%zu, monotone in d %zu/%zu", ordered, n,
                    monotone, n);
  for (size_t k = 0; k < broken.size() && k < 5; ++k) {
    v.detail += (k ? ", " : "; not monotone: ") + broken[k];
  }
  return v;
}

Verdict Determinism(const fs::path& first, const fs::path& second) {
  size_t files = 0, identical = 0;
  for (const auto& entry : fs::directory_iterator(first)) {
    if (entry.path().extension() != ".csv") continue;
    ++files;
    const auto other = second / entry.path().filename();
    if (fs::exists(other) && Slurp(entry.path()) == Slurp(other)) ++identical;
  }
  Verdict v;
  v.pass = files > 0 && identical == files;
  v.detail = Format("%zu/%zu CSV files byte-identical", identical, files);
  return v;
}

// 10. Majority-whale (MDC 1) against dispersed (MDC >= 5) cohorts.
Verdict MdcStratification() {
  const auto start = std::chrono::steady_clock::now();
  RunConfig config;
  config.seed = 1010;
  RunLog log;
  auto cohort = [&](Cohort kind) {
    SyntheticSpec spec;
    spec.count = 20;
    spec.min_voters = 20;
    spec.max_voters = 200;
    spec.cohort = kind;
    spec.seed = 1011;
    Corpus corpus;
    corpus.proposals = GenerateCorpus(spec);
    corpus.report.lines = corpus.report.accepted = spec.count;
    return RunBPrivacy(corpus, config, log);
  };
  const auto whale = cohort(Cohort::kMajorityWhale);
  const auto dispersed = cohort(Cohort::kDispersed);

  auto geomean = [](const std::vector<BPrivacyRow>& rows, auto field,
                    size_t* used) {
    std::vector<double> values;
    for (const auto& r : rows) {
      if (r.error.empty() && (r.*field)) values.push_back(*(r.*field));
    }
    *used = values.size();
    return GeometricMean(values).value_or(0.0);
  };
  size_t n_whale = 0, n_dispersed = 0, n_winner = 0;
  const double g_whale =
      geomean(whale, &BPrivacyRow::relative_noised, &n_whale);
  const double g_dispersed =
      geomean(dispersed, &BPrivacyRow::relative_noised, &n_dispersed);
  const double g_winner =
      geomean(whale, &BPrivacyRow::relative_winner, &n_winner);
  bool mdc_ok = true, whale_bribed = true;
  for (const auto& r : whale) {
    mdc_ok = mdc_ok && r.error.empty() && r.mdc == 1;
    whale_bribed = whale_bribed && r.error.empty() && r.top_voter_bribed;
  }
  for (const auto& r : dispersed) mdc_ok = mdc_ok && r.mdc >= 5;
  const double secs = Seconds(start);
  Verdict v;
  v.pass = mdc_ok && n_whale == whale.size() &&
           n_dispersed == dispersed.size() && g_dispersed > g_whale &&
           n_winner == whale.size() && g_winner < 3 && whale_bribed &&
           secs < 1800;
  v.detail = Format(
      "noised geomean MDC=1 %.3f (%zu) vs MDC>=5 %.3f (%zu); MDC=1 "
      "winner-only geomean %.3f (%zu); whale bribed in every plan %d; "
      "cohort MDCs %d; %.0f s",
      g_whale, n_whale, g_dispersed, n_dispersed, g_winner, n_winner,
      whale_bribed, mdc_ok, secs);
  return v;
}

}  // namespace
}  // namespace wvp

int main(int argc, char** argv) {
  using namespace wvp;
  fs::path out = fs::temp_directory_path() / "wvp_acceptance";
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--out" && k + 1 < argc) {
      out = argv[++k];
    } else {
      selected.insert(std::atoi(arg.c_str()));
    }
  }
  auto wanted = [&](int c) { return selected.empty() || selected.count(c); };

  int failures = 0;
  auto report = [&](int number, const char* name,
                    const std::function<Verdict()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", v.pass ? "PASS" : "FAIL",
                number, name, v.detail.c_str(), Seconds(start));
    std::fflush(stdout);
  };

  if (wanted(1)) report(1, "worked example", WorkedExample);
  if (wanted(2)) report(2, "attack oracle equivalence", OracleEquivalence);
  if (wanted(3)) report(3, "subset-sum performance", SubsetSumPerformance);
  if (wanted(4)) report(4, "noise calibration", Calibration);
  if (wanted(5)) report(5, "margin bounds", MarginBounds);
  if (wanted(6)) report(6, "EPD identity", EpdIdentity);
  if (wanted(7)) report(7, "equilibrium sanity", EquilibriumSanity);
  if (wanted(8)) report(8, "single-voter closed form", SingleVoter);
  if (wanted(10)) report(10, "MDC stratification", MdcStratification);
  if (wanted(9) || wanted(11)) {
    fs::remove_all(out);
    std::optional<MonotonicityRun> first;
    report(9, "information monotonicity", [&] {
      first = RunMonotonicity(out / "run_a");
      return InformationMonotonicity(*first);
    });
    if (wanted(11)) {
      report(11, "determinism", [&] {
        RunMonotonicity(out / "run_b");
        return Determinism(out / "run_a", out / "run_b");
      });
    }
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
