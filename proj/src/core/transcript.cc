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

#include "wvp/core/transcript.h"

#include <stdexcept>
#include <utility>

namespace wvp {

VotingTranscript VotingTranscript::Create(std::string proposal_id,
                                          int num_choices,
                                          std::vector<Weight> weights,
                                          std::vector<int> choices,
                                          int scale) {
  if (num_choices < 2) {
    throw std::invalid_argument("a proposal needs at least two choices");
  }
  if (weights.empty()) {
    throw std::invalid_argument("a transcript needs at least one voter");
  }
  if (weights.size() != choices.size()) {
    throw std::invalid_argument("weights and choices differ in length");
  }
  if (scale < 0 || scale > kMaxDecimalScale) {
    throw std::invalid_argument("decimal scale out of range");
  }
  Weight total;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (choices[i] < 0 || choices[i] >= num_choices) {
      throw std::invalid_argument("voter " + std::to_string(i) +
                                  " has choice index out of range");
    }
    total += weights[i];
  }
  if (total.units() == 0) {
    throw std::invalid_argument("total weight must be positive");
  }
  VotingTranscript t;
  t.proposal_id_ = std::move(proposal_id);
  t.num_choices_ = num_choices;
  t.scale_ = scale;
  t.weights_ = std::move(weights);
  t.choices_ = std::move(choices);
  t.total_ = total;
  return t;
}

VotingTranscript VotingTranscript::FromDecimals(
    std::string proposal_id, int num_choices,
    const std::vector<std::string>& weights, std::vector<int> choices,
    int scale) {
  std::vector<Weight> parsed;
  parsed.reserve(weights.size());
  for (const auto& w : weights) parsed.push_back(Weight::Parse(w, scale));
  return Create(std::move(proposal_id), num_choices, std::move(parsed),
                std::move(choices), scale);
}

std::vector<double> VotingTranscript::WeightsAsDouble() const {
  std::vector<double> out;
  out.reserve(weights_.size());
  for (const Weight& w : weights_) out.push_back(w.ToDouble(scale_));
  return out;
}

}  // namespace wvp
