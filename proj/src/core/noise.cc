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

#include "wvp/core/noise.h"

#include <cmath>
#include <stdexcept>

namespace wvp {

double NoiseSpec::ProbabilityWithin(double x) const {
  if (x < 0) return 0.0;
  if (scale == 0.0) return 1.0;
  return -std::expm1(-x / scale);
}

NoiseSpec CalibrateNoise(double perturbation_d, double frequency_q,
                         double total_weight) {
  if (!(frequency_q > 0.0 && frequency_q < 1.0)) {
    throw std::invalid_argument("frequency q must lie in (0, 1)");
  }
  if (!(total_weight > 0.0) || !std::isfinite(total_weight)) {
    throw std::invalid_argument("total weight must be positive");
  }
  if (!(perturbation_d >= 0.0) || !std::isfinite(perturbation_d)) {
    throw std::invalid_argument("perturbation d must be non-negative");
  }
  NoiseSpec spec;
  spec.perturbation_d = perturbation_d;
  spec.frequency_q = frequency_q;
  spec.total_weight = total_weight;
  spec.scale = perturbation_d * total_weight / -std::log1p(-frequency_q);
  return spec;
}

}  // namespace wvp
