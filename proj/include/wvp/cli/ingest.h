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

#ifndef WVP_CLI_INGEST_H_
#define WVP_CLI_INGEST_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wvp/core/transcript.h"

namespace wvp {

// One NDJSON line:
//   {"id": "...", "dao": "...", "num_choices": 2,
//    "voters": [{"weight": "12.5", "choice": 0}, ...],
//    "metadata": {"key": "value"}}
// Weights are decimal strings so that no precision is lost in transit.
struct ProposalRecord {
  std::string id;
  std::string dao;
  int num_choices = 2;
  std::vector<std::string> weights;
  std::vector<int> choices;
  std::map<std::string, std::string> metadata;
};

// Throws std::invalid_argument describing the first problem found.
ProposalRecord ParseProposalRecord(const std::string& line);
std::string SerializeProposalRecord(const ProposalRecord& record);

// Record for a transcript, weights rendered at the transcript's scale.
ProposalRecord RecordFromTranscript(const VotingTranscript& t,
                                    const std::string& dao);

enum class IngestMode { kAttack, kBPrivacy };

inline constexpr size_t kDefaultMaxVoters = 30000;

struct IngestOptions {
  IngestMode mode = IngestMode::kAttack;
  int scale = kDefaultDecimalScale;
  size_t max_voters = kDefaultMaxVoters;
  // Voters with this choice are dropped and higher indices shift down.
  std::optional<int> abstain_choice;
};

struct Proposal {
  std::string dao;
  VotingTranscript transcript;
};

struct IngestReport {
  size_t lines = 0;
  size_t accepted = 0;
  size_t malformed = 0;
  size_t not_binary = 0;
  size_t too_many_voters = 0;
  size_t no_voters_left = 0;
  size_t abstentions_dropped = 0;
  std::vector<std::string> diagnostics;  // "file:line: reason"
};

struct Corpus {
  std::vector<Proposal> proposals;
  IngestReport report;
};

// Reads one NDJSON file, or every *.ndjson / *.jsonl file of a directory in
// name order. Malformed or filtered lines are counted and skipped; a missing
// path throws std::runtime_error.
Corpus IngestCorpus(const std::filesystem::path& path,
                    const IngestOptions& options);

// Applies filters to one parsed record. Returns nullopt and bumps the
// matching report counter when the record is filtered out.
std::optional<Proposal> AdmitRecord(const ProposalRecord& record,
                                    const IngestOptions& options,
                                    IngestReport& report);

}  // namespace wvp

#endif  // WVP_CLI_INGEST_H_
