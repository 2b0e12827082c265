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

#ifndef WVP_CORE_TRANSCRIPT_H_
#define WVP_CORE_TRANSCRIPT_H_

#include <span>
#include <string>
#include <vector>

#include "wvp/core/weight.h"

namespace wvp {

// Choice indices for binary proposals.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;

// Weights and choices of every voter on one proposal. Immutable once built;
// Create() enforces the invariants, so every instance is valid.
class VotingTranscript {
 public:
  // Throws std::invalid_argument when
  //   - num_choices < 2 or there are no voters,
  //   - weights and choices differ in length,
  //   - a choice index is outside [0, num_choices),
  //   - the total weight is zero.
  static VotingTranscript Create(std::string proposal_id, int num_choices,
                                 std::vector<Weight> weights,
                                 std::vector<int> choices,
                                 int scale = kDefaultDecimalScale);

  // Convenience for literals and ingestion: parses each weight at `scale`.
  static VotingTranscript FromDecimals(std::string proposal_id,
                                       int num_choices,
                                       const std::vector<std::string>& weights,
                                       std::vector<int> choices,
                                       int scale = kDefaultDecimalScale);

  const std::string& proposal_id() const { return proposal_id_; }
  int num_choices() const { return num_choices_; }
  int scale() const { return scale_; }
  size_t size() const { return weights_.size(); }
  std::span<const Weight> weights() const { return weights_; }
  std::span<const int> choices() const { return choices_; }
  Weight total_weight() const { return total_; }
  bool is_binary() const { return num_choices_ == 2; }

  // Weights converted to doubles at the transcript scale.
  std::vector<double> WeightsAsDouble() const;
  double TotalWeightAsDouble() const { return total_.ToDouble(scale_); }

 private:
  VotingTranscript() = default;

  std::string proposal_id_;
  int num_choices_ = 2;
  int scale_ = kDefaultDecimalScale;
  std::vector<Weight> weights_;
  std::vector<int> choices_;
  Weight total_;
};

}  // namespace wvp

#endif  // WVP_CORE_TRANSCRIPT_H_
