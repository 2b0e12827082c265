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

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wvp/game/policy.h"

namespace wvp {

std::string PolicyName(const TallyPolicy& policy) {
  struct Visitor {
    std::string operator()(const FullDisclosure&) const { return "public"; }
    std::string operator()(const WinnerOnly&) const { return "winner"; }
    std::string operator()(const CorrectedNoised& p) const {
      std::ostringstream out;
      out << "noised(d=" << p.noise.perturbation_d << ")";
      return out.str();
    }
    std::string operator()(const DpNoised& p) const {
      std::ostringstream out;
      out << "dp(eps=" << p.epsilon << ")";
      return out.str();
    }
  };
  return std::visit(Visitor{}, policy);
}

bool MarginDependsOnPivotality(const TallyPolicy& policy) {
  return std::holds_alternative<WinnerOnly>(policy) ||
         std::holds_alternative<CorrectedNoised>(policy);
}

double LaplaceShiftDistance(double weight, double scale) {
  if (weight < 0) throw std::invalid_argument("weight must be non-negative");
  if (scale < 0) throw std::invalid_argument("noise scale must be >= 0");
  if (weight == 0) return 0.0;
  if (scale == 0) return 1.0;
  return -std::expm1(-weight / (2 * scale));
}

double BribeMargin(const TallyPolicy& policy, double pivotality,
                   double weight) {
  if (!(pivotality >= 0 && pivotality <= 1)) {
    throw std::invalid_argument("pivotality must lie in [0, 1]");
  }
  if (weight < 0) throw std::invalid_argument("weight must be non-negative");
  if (std::holds_alternative<FullDisclosure>(policy)) return 1.0;
  if (std::holds_alternative<WinnerOnly>(policy)) return pivotality;
  if (const auto* noised = std::get_if<CorrectedNoised>(&policy)) {
    const double tv = LaplaceShiftDistance(weight, noised->noise.scale);
    if (tv == 1.0) return 1.0;  // noiseless: exactly the public margin
    return pivotality + (1 - pivotality) * tv;
  }
  const double epsilon = std::get<DpNoised>(policy).epsilon;
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  return -std::expm1(-epsilon);
}

}  // namespace wvp
