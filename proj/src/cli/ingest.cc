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

#include "wvp/cli/ingest.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace wvp {

using nlohmann::json;

ProposalRecord ParseProposalRecord(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("record is not an object");
  ProposalRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.dao = j.value("dao", std::string());
    r.num_choices = j.at("num_choices").get<int>();
    for (const auto& v : j.at("voters")) {
      const auto& w = v.at("weight");
      // Numbers are accepted only as integers; fractional JSON numbers
      // would already have been rounded by the producer.
      if (w.is_string()) {
        r.weights.push_back(w.get<std::string>());
      } else if (w.is_number_unsigned()) {
        r.weights.push_back(std::to_string(w.get<uint64_t>()));
      } else {
        throw std::invalid_argument("weight must be a decimal string");
      }
      r.choices.push_back(v.at("choice").get<int>());
    }
    if (j.contains("metadata") && !j["metadata"].is_null()) {
      for (const auto& [key, value] : j["metadata"].items()) {
        r.metadata[key] = value.is_string() ? value.get<std::string>()
                                            : value.dump();
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad record field: ") + e.what());
  }
  return r;
}

std::string SerializeProposalRecord(const ProposalRecord& record) {
  json j;
  j["id"] = record.id;
  j["dao"] = record.dao;
  j["num_choices"] = record.num_choices;
  json voters = json::array();
  for (size_t i = 0; i < record.weights.size(); ++i) {
    voters.push_back({{"weight", record.weights[i]},
                      {"choice", record.choices[i]}});
  }
  j["voters"] = std::move(voters);
  if (!record.metadata.empty()) j["metadata"] = record.metadata;
  return j.dump();
}

ProposalRecord RecordFromTranscript(const VotingTranscript& t,
                                    const std::string& dao) {
  ProposalRecord r;
  r.id = t.proposal_id();
  r.dao = dao;
  r.num_choices = t.num_choices();
  for (Weight w : t.weights()) r.weights.push_back(w.ToString(t.scale()));
  r.choices.assign(t.choices().begin(), t.choices().end());
  return r;
}

std::optional<Proposal> AdmitRecord(const ProposalRecord& record,
                                    const IngestOptions& options,
                                    IngestReport& report) {
  if (record.weights.size() != record.choices.size()) {
    throw std::invalid_argument("weights and choices differ in length");
  }
  std::vector<std::string> weights;
  std::vector<int> choices;
  int num_choices = record.num_choices;
  if (options.abstain_choice) {
    const int a = *options.abstain_choice;
    if (a >= 0 && a < num_choices) --num_choices;
    for (size_t i = 0; i < record.choices.size(); ++i) {
      const int c = record.choices[i];
      if (c == a) {
        ++report.abstentions_dropped;
        continue;
      }
      weights.push_back(record.weights[i]);
      choices.push_back(c > a ? c - 1 : c);
    }
  } else {
    weights = record.weights;
    choices = record.choices;
  }
  if (options.mode == IngestMode::kBPrivacy && num_choices != 2) {
    ++report.not_binary;
    return std::nullopt;
  }
  if (weights.empty()) {
    ++report.no_voters_left;
    return std::nullopt;
  }
  if (weights.size() > options.max_voters) {
    ++report.too_many_voters;
    return std::nullopt;
  }
  return Proposal{record.dao,
                  VotingTranscript::FromDecimals(record.id, num_choices,
                                                 weights, std::move(choices),
                                                 options.scale)};
}

namespace {

void IngestFile(const std::filesystem::path& file, const IngestOptions& options,
                Corpus& corpus) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++corpus.report.lines;
    try {
      auto proposal =
          AdmitRecord(ParseProposalRecord(line), options, corpus.report);
      if (proposal) {
        corpus.proposals.push_back(std::move(*proposal));
        ++corpus.report.accepted;
      }
    } catch (const std::exception& e) {
      ++corpus.report.malformed;
      corpus.report.diagnostics.push_back(file.filename().string() + ":" +
                                          std::to_string(number) + ": " +
                                          e.what());
    }
  }
}

}  // namespace

Corpus IngestCorpus(const std::filesystem::path& path,
                    const IngestOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) {
    throw std::runtime_error("input not found: " + path.string());
  }
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      const auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".ndjson" || ext == ".jsonl")) {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  Corpus corpus;
  for (const auto& f : files) IngestFile(f, options, corpus);
  return corpus;
}

}  // namespace wvp
