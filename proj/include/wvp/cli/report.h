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

#ifndef WVP_CLI_REPORT_H_
#define WVP_CLI_REPORT_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wvp/cli/runs.h"

namespace wvp {

// MDC strata used in cohort tables: "1", "2", "3-4", "5+" ("0" for ties).
std::string MdcCohort(size_t mdc);

// Fixed-format number: %.*f for percentages and rates, %.*g otherwise.
std::string FormatFixed(double value, int decimals);
std::string FormatSignificant(double value, int digits = 10);
std::string FormatOptional(const std::optional<double>& value);

// Minimal RFC 4180 writer: fields containing a comma, quote or newline are
// quoted.
class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path);
  void Row(const std::vector<std::string>& fields);

 private:
  std::ofstream out_;
};

// Each writer creates `dir` if needed and emits summary.json plus the CSV
// tables documented in docs/output_schema.md.
void WriteAttackReport(const std::filesystem::path& dir,
                       const std::vector<AttackRow>& rows,
                       const Corpus& corpus, const RunConfig& config);
void WriteNoisedAttackReport(const std::filesystem::path& dir,
                             const std::vector<NoisedAttackRow>& rows,
                             const Corpus& corpus, const RunConfig& config);
void WriteBPrivacyReport(const std::filesystem::path& dir,
                         const std::vector<BPrivacyRow>& rows,
                         const Corpus& corpus, const RunConfig& config);
void WriteSweepReport(const std::filesystem::path& dir,
                      const std::vector<SweepRow>& rows, const Corpus& corpus,
                      const RunConfig& config);
void WriteMdcReport(const std::filesystem::path& dir, const Corpus& corpus,
                    const RunConfig& config);

nlohmann::json IngestReportToJson(const IngestReport& report);

}  // namespace wvp

#endif  // WVP_CLI_REPORT_H_
