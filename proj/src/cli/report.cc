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

#include "wvp/cli/report.h"

#include <cstdio>
#include <map>
#include <stdexcept>

#include "wvp/core/tally.h"
#include "wvp/optimizer/mdc.h"

namespace wvp {

using nlohmann::json;
namespace fs = std::filesystem;

std::string MdcCohort(size_t mdc) {
  if (mdc == 0) return "0";
  if (mdc == 1) return "1";
  if (mdc == 2) return "2";
  if (mdc <= 4) return "3-4";
  return "5+";
}

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string FormatSignificant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string FormatOptional(const std::optional<double>& value) {
  return value ? FormatSignificant(*value) : std::string();
}

CsvWriter::CsvWriter(const fs::path& path) : out_(path) {
  if (!out_) throw std::runtime_error("cannot write " + path.string());
}

void CsvWriter::Row(const std::vector<std::string>& fields) {
  for (size_t k = 0; k < fields.size(); ++k) {
    if (k) out_ << ',';
    const std::string& f = fields[k];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out_ << f;
      continue;
    }
    out_ << '"';
    for (char ch : f) {
      if (ch == '"') out_ << '"';
      out_ << ch;
    }
    out_ << '"';
  }
  out_ << '\n';
}

json IngestReportToJson(const IngestReport& r) {
  return {{"lines", r.lines},
          {"accepted", r.accepted},
          {"malformed", r.malformed},
          {"not_binary", r.not_binary},
          {"too_many_voters", r.too_many_voters},
          {"no_voters_left", r.no_voters_left},
          {"abstentions_dropped", r.abstentions_dropped},
          {"diagnostics", r.diagnostics}};
}

namespace {

void WriteJson(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

json BaseSummary(const char* run, const Corpus& corpus,
                 const RunConfig& config) {
  return {{"run", run},
          {"config", ConfigToJson(config)},
          {"ingest", IngestReportToJson(corpus.report)}};
}

// Ordered groups keyed by label, in first-seen order of the rows.
template <typename Row, typename Key>
std::vector<std::pair<std::string, std::vector<const Row*>>> GroupBy(
    const std::vector<Row>& rows, Key key) {
  std::vector<std::pair<std::string, std::vector<const Row*>>> groups;
  std::map<std::string, size_t> index;
  for (const Row& r : rows) {
    const std::string k = key(r);
    auto [it, inserted] = index.emplace(k, groups.size());
    if (inserted) groups.push_back({k, {}});
    groups[it->second].second.push_back(&r);
  }
  return groups;
}

std::optional<double> GeoMeanOfPositive(
    const std::vector<std::optional<double>>& values, size_t* used) {
  std::vector<double> positive;
  for (const auto& v : values) {
    if (v && *v > 0) positive.push_back(*v);
  }
  *used = positive.size();
  return GeometricMean(positive);
}

std::string Budget(const BPrivacyResult& r) {
  return r.feasible ? FormatSignificant(r.budget) : std::string();
}

std::string Pct(double v) { return FormatFixed(v, 4); }

const char* SubsetSumLabel(SubsetSumStatus s) {
  switch (s) {
    case SubsetSumStatus::kNotRun: return "not_run";
    case SubsetSumStatus::kCompleted: return "completed";
    case SubsetSumStatus::kSkippedTooLarge: return "skipped_too_large";
  }
  return "not_run";
}

}  // namespace

void WriteAttackReport(const fs::path& dir, const std::vector<AttackRow>& rows,
                       const Corpus& corpus, const RunConfig& config) {
  fs::create_directories(dir);
  {
    CsvWriter csv(dir / "per_proposal.csv");
    csv.Row({"id", "dao", "voters", "num_choices", "determined",
             "ballots_leaked_pct", "weight_leaked_pct", "deniability_broken",
             "full_recovery", "subset_sum", "error"});
    for (const auto& r : rows) {
      csv.Row({r.id, r.dao, std::to_string(r.voters),
               std::to_string(r.num_choices),
               std::to_string(r.result.determined.size()),
               Pct(r.result.ballots_leaked_pct),
               Pct(r.result.weight_leaked_pct),
               r.result.deniability_broken ? "1" : "0",
               r.result.full_recovery ? "1" : "0",
               r.error.empty() ? SubsetSumLabel(r.result.subset_sum) : "",
               r.error});
    }
  }
  struct Aggregate {
    size_t proposals = 0, failed = 0, broken = 0, full = 0, skipped = 0;
    double ballots = 0, weight = 0, vulnerable_ballots = 0,
           vulnerable_weight = 0;
  };
  auto aggregate = [](const std::vector<const AttackRow*>& group) {
    Aggregate a;
    for (const AttackRow* r : group) {
      if (!r->error.empty()) {
        ++a.failed;
        continue;
      }
      ++a.proposals;
      a.ballots += r->result.ballots_leaked_pct;
      a.weight += r->result.weight_leaked_pct;
      a.skipped += r->result.subset_sum == SubsetSumStatus::kSkippedTooLarge;
      a.full += r->result.full_recovery;
      if (r->result.deniability_broken) {
        ++a.broken;
        a.vulnerable_ballots += r->result.ballots_leaked_pct;
        a.vulnerable_weight += r->result.weight_leaked_pct;
      }
    }
    return a;
  };
  auto mean = [](double sum, size_t n) { return n ? sum / n : 0.0; };
  auto fields = [&](const std::string& label, const Aggregate& a) {
    return std::vector<std::string>{
        label,
        std::to_string(a.proposals),
        std::to_string(a.failed),
        Pct(mean(a.ballots, a.proposals)),
        Pct(mean(a.weight, a.proposals)),
        Pct(mean(100.0 * a.broken, a.proposals)),
        Pct(mean(100.0 * a.full, a.proposals)),
        Pct(mean(a.vulnerable_ballots, a.broken)),
        Pct(mean(a.vulnerable_weight, a.broken)),
        std::to_string(a.skipped)};
  };
  {
    CsvWriter csv(dir / "per_dao.csv");
    csv.Row({"dao", "proposals", "failed", "mean_ballots_leaked_pct",
             "mean_weight_leaked_pct", "deniability_broken_pct",
             "full_recovery_pct", "vulnerable_mean_ballots_leaked_pct",
             "vulnerable_mean_weight_leaked_pct", "subset_sum_skipped"});
    for (const auto& [dao, group] :
         GroupBy(rows, [](const AttackRow& r) { return r.dao; })) {
      csv.Row(fields(dao, aggregate(group)));
    }
  }
  std::vector<const AttackRow*> all;
  for (const auto& r : rows) all.push_back(&r);
  const Aggregate a = aggregate(all);
  json summary = BaseSummary("attack", corpus, config);
  summary["aggregate"] = {
      {"proposals", a.proposals},
      {"failed", a.failed},
      {"mean_ballots_leaked_pct", mean(a.ballots, a.proposals)},
      {"mean_weight_leaked_pct", mean(a.weight, a.proposals)},
      {"deniability_broken", a.broken},
      {"full_recovery", a.full},
      {"vulnerable_mean_ballots_leaked_pct",
       mean(a.vulnerable_ballots, a.broken)},
      {"vulnerable_mean_weight_leaked_pct",
       mean(a.vulnerable_weight, a.broken)},
      {"subset_sum_skipped", a.skipped}};
  WriteJson(dir / "summary.json", summary);
}

void WriteNoisedAttackReport(const fs::path& dir,
                             const std::vector<NoisedAttackRow>& rows,
                             const Corpus& corpus, const RunConfig& config) {
  fs::create_directories(dir);
  {
    CsvWriter csv(dir / "per_proposal.csv");
    csv.Row({"id", "dao", "voters", "num_choices", "noise_scale", "trials",
             "raw_determined", "mean_determined", "max_determined",
             "ballots_leaked_pct", "weight_leaked_pct",
             "deniability_broken_rate", "full_recovery_rate", "error"});
    for (const auto& r : rows) {
      csv.Row({r.id, r.dao, std::to_string(r.voters),
               std::to_string(r.num_choices), FormatSignificant(r.noise_scale),
               std::to_string(r.trials), std::to_string(r.raw_determined),
               FormatFixed(r.mean_determined, 4),
               std::to_string(r.max_determined), Pct(r.ballots_leaked_pct),
               Pct(r.weight_leaked_pct), FormatFixed(r.deniability_broken_rate, 4),
               FormatFixed(r.full_recovery_rate, 4), r.error});
    }
  }
  struct Aggregate {
    size_t proposals = 0, failed = 0, fewer = 0;
    double ballots = 0, weight = 0, broken = 0, full = 0;
  };
  auto aggregate = [](const std::vector<const NoisedAttackRow*>& group) {
    Aggregate a;
    for (const auto* r : group) {
      if (!r->error.empty()) {
        ++a.failed;
        continue;
      }
      ++a.proposals;
      a.ballots += r->ballots_leaked_pct;
      a.weight += r->weight_leaked_pct;
      a.broken += r->deniability_broken_rate;
      a.full += r->full_recovery_rate;
      a.fewer += r->mean_determined < static_cast<double>(r->raw_determined);
    }
    return a;
  };
  auto mean = [](double sum, size_t n) { return n ? sum / n : 0.0; };
  {
    CsvWriter csv(dir / "per_dao.csv");
    csv.Row({"dao", "proposals", "failed", "mean_ballots_leaked_pct",
             "mean_weight_leaked_pct", "deniability_broken_pct",
             "full_recovery_pct"});
    for (const auto& [dao, group] :
         GroupBy(rows, [](const NoisedAttackRow& r) { return r.dao; })) {
      const Aggregate a = aggregate(group);
      csv.Row({dao, std::to_string(a.proposals), std::to_string(a.failed),
               Pct(mean(a.ballots, a.proposals)),
               Pct(mean(a.weight, a.proposals)),
               Pct(mean(100.0 * a.broken, a.proposals)),
               Pct(mean(100.0 * a.full, a.proposals))});
    }
  }
  std::vector<const NoisedAttackRow*> all;
  for (const auto& r : rows) all.push_back(&r);
  const Aggregate a = aggregate(all);
  json summary = BaseSummary("attack-noised", corpus, config);
  summary["aggregate"] = {
      {"proposals", a.proposals},
      {"failed", a.failed},
      {"mean_ballots_leaked_pct", mean(a.ballots, a.proposals)},
      {"mean_weight_leaked_pct", mean(a.weight, a.proposals)},
      {"deniability_broken_pct", mean(100.0 * a.broken, a.proposals)},
      {"full_recovery_pct", mean(100.0 * a.full, a.proposals)},
      {"fewer_than_raw", a.fewer}};
  WriteJson(dir / "summary.json", summary);
}

namespace {

struct RelativeGroup {
  size_t proposals = 0;
  size_t used_noised = 0, used_winner = 0;
  std::optional<double> noised, winner;
};

RelativeGroup Relatives(const std::vector<const BPrivacyRow*>& group) {
  RelativeGroup g;
  std::vector<std::optional<double>> noised, winner;
  for (const auto* r : group) {
    if (!r->error.empty()) continue;
    ++g.proposals;
    noised.push_back(r->relative_noised);
    winner.push_back(r->relative_winner);
  }
  g.noised = GeoMeanOfPositive(noised, &g.used_noised);
  g.winner = GeoMeanOfPositive(winner, &g.used_winner);
  return g;
}

std::vector<std::string> RelativeFields(const std::string& label,
                                        const RelativeGroup& g) {
  return {label,
          std::to_string(g.proposals),
          std::to_string(g.used_noised),
          FormatOptional(g.noised),
          std::to_string(g.used_winner),
          FormatOptional(g.winner)};
}

json RelativeJson(const RelativeGroup& g) {
  auto opt = [](const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
  };
  return {{"proposals", g.proposals},
          {"geomean_relative_noised", opt(g.noised)},
          {"geomean_relative_winner", opt(g.winner)}};
}

}  // namespace

void WriteBPrivacyReport(const fs::path& dir,
                         const std::vector<BPrivacyRow>& rows,
                         const Corpus& corpus, const RunConfig& config) {
  fs::create_directories(dir);
  {
    CsvWriter csv(dir / "per_proposal.csv");
    csv.Row({"id", "dao", "voters", "mdc", "mdc_cohort", "noise_scale",
             "budget_public", "budget_noised", "budget_winner",
             "strategy_public", "strategy_noised", "strategy_winner",
             "p_succ_public", "p_succ_noised", "p_succ_winner",
             "relative_noised", "relative_winner", "top_voter_bribed",
             "error"});
    for (const auto& r : rows) {
      auto strategy = [](const BPrivacyResult& b) {
        return b.feasible ? b.strategy.Name() : std::string();
      };
      auto p = [](const BPrivacyResult& b) {
        return b.feasible ? FormatFixed(b.achieved_p_succ, 4) : std::string();
      };
      csv.Row({r.id, r.dao, std::to_string(r.voters), std::to_string(r.mdc),
               MdcCohort(r.mdc), FormatSignificant(r.noise_scale),
               Budget(r.full), Budget(r.noised), Budget(r.winner),
               strategy(r.full), strategy(r.noised), strategy(r.winner),
               p(r.full), p(r.noised), p(r.winner),
               FormatOptional(r.relative_noised),
               FormatOptional(r.relative_winner),
               r.top_voter_bribed ? "1" : "0", r.error});
    }
  }
  const std::vector<std::string> header = {
      "", "proposals", "n_noised", "geomean_relative_noised", "n_winner",
      "geomean_relative_winner"};
  auto with_label = [&](const char* label) {
    auto h = header;
    h[0] = label;
    return h;
  };
  {
    CsvWriter csv(dir / "per_dao.csv");
    csv.Row(with_label("dao"));
    for (const auto& [dao, group] :
         GroupBy(rows, [](const BPrivacyRow& r) { return r.dao; })) {
      csv.Row(RelativeFields(dao, Relatives(group)));
    }
  }
  json cohorts = json::object();
  {
    CsvWriter csv(dir / "mdc_cohorts.csv");
    csv.Row(with_label("mdc_cohort"));
    for (const char* label : {"1", "2", "3-4", "5+"}) {
      std::vector<const BPrivacyRow*> group;
      for (const auto& r : rows) {
        if (MdcCohort(r.mdc) == label) group.push_back(&r);
      }
      const auto g = Relatives(group);
      csv.Row(RelativeFields(label, g));
      cohorts[label] = RelativeJson(g);
    }
  }
  std::vector<const BPrivacyRow*> all;
  size_t failed = 0;
  for (const auto& r : rows) {
    all.push_back(&r);
    failed += !r.error.empty();
  }
  json summary = BaseSummary("bprivacy", corpus, config);
  summary["aggregate"] = RelativeJson(Relatives(all));
  summary["aggregate"]["failed"] = failed;
  summary["mdc_cohorts"] = cohorts;
  WriteJson(dir / "summary.json", summary);
}

void WriteSweepReport(const fs::path& dir, const std::vector<SweepRow>& rows,
                      const Corpus& corpus, const RunConfig& config) {
  fs::create_directories(dir);
  {
    CsvWriter csv(dir / "sweep.csv");
    csv.Row({"id", "dao", "voters", "mdc", "mdc_cohort", "d", "noise_scale",
             "budget_public", "budget_noised", "relative", "strategy",
             "budget_winner", "relative_winner", "error"});
    for (const auto& r : rows) {
      if (!r.error.empty()) {
        csv.Row({r.id, r.dao, std::to_string(r.voters), std::to_string(r.mdc),
                 MdcCohort(r.mdc), "", "", "", "", "", "", "", "", r.error});
        continue;
      }
      for (const auto& p : r.points) {
        csv.Row({r.id, r.dao, std::to_string(r.voters), std::to_string(r.mdc),
                 MdcCohort(r.mdc), FormatSignificant(p.d),
                 FormatSignificant(p.noise_scale), Budget(r.full),
                 Budget(p.noised), FormatOptional(p.relative),
                 p.noised.feasible ? p.noised.strategy.Name() : "",
                 Budget(r.winner), FormatOptional(r.relative_winner), ""});
      }
    }
  }
  json by_d = json::array();
  {
    CsvWriter csv(dir / "mdc_cohorts.csv");
    csv.Row({"mdc_cohort", "d", "proposals", "geomean_relative"});
    for (size_t k = 0; k < config.sweep_d.size(); ++k) {
      for (const char* label : {"all", "1", "2", "3-4", "5+"}) {
        std::vector<std::optional<double>> values;
        for (const auto& r : rows) {
          if (!r.error.empty() || k >= r.points.size()) continue;
          if (std::string(label) != "all" && MdcCohort(r.mdc) != label) {
            continue;
          }
          values.push_back(r.points[k].relative);
        }
        size_t used = 0;
        const auto g = GeoMeanOfPositive(values, &used);
        csv.Row({label, FormatSignificant(config.sweep_d[k]),
                 std::to_string(used), FormatOptional(g)});
        by_d.push_back({{"mdc_cohort", label},
                        {"d", config.sweep_d[k]},
                        {"proposals", used},
                        {"geomean_relative", g ? json(*g) : json(nullptr)}});
      }
    }
  }
  json summary = BaseSummary("sweep", corpus, config);
  summary["sweep"] = by_d;
  WriteJson(dir / "summary.json", summary);
}

void WriteMdcReport(const fs::path& dir, const Corpus& corpus,
                    const RunConfig& config) {
  fs::create_directories(dir);
  CsvWriter csv(dir / "per_proposal.csv");
  csv.Row({"id", "dao", "voters", "winner", "margin", "mdc", "mdc_cohort",
           "error"});
  std::map<std::string, size_t> counts;
  for (const auto& p : corpus.proposals) {
    const auto& t = p.transcript;
    try {
      const auto raw = TallyRaw(t);
      const size_t mdc = MinimumDecisiveCoalition(t);
      Units margin = raw.totals[kYes].units() - raw.totals[kNo].units();
      if (margin < 0) margin = -margin;
      csv.Row({t.proposal_id(), p.dao, std::to_string(t.size()),
               std::to_string(TallyWinner(t).winner),
               FormatUnits(margin, t.scale()), std::to_string(mdc),
               MdcCohort(mdc), ""});
      ++counts[MdcCohort(mdc)];
    } catch (const std::exception& e) {
      csv.Row({t.proposal_id(), p.dao, std::to_string(t.size()), "", "", "",
               "", e.what()});
    }
  }
  json summary = BaseSummary("mdc", corpus, config);
  summary["mdc_cohorts"] = counts;
  WriteJson(dir / "summary.json", summary);
}

}  // namespace wvp
