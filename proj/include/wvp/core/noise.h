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

#ifndef WVP_CORE_NOISE_H_
#define WVP_CORE_NOISE_H_

namespace wvp {

// Laplace(0, scale) noise together with the tally perturbation it was
// calibrated for: Pr(|Y| <= perturbation_d * total_weight) = frequency_q.
struct NoiseSpec {
  double scale = 0.0;
  double perturbation_d = 0.0;
  double frequency_q = 0.95;
  double total_weight = 1.0;

  // Closed-form Pr(|Y| <= x) = 1 - exp(-x / scale).
  double ProbabilityWithin(double x) const;
};

// Solves 1 - exp(-dW / b) = q for b, i.e. b = dW / -ln(1 - q).
// d == 0 gives b == 0 (no noise). Throws std::invalid_argument unless
// 0 < q < 1, d >= 0 and W > 0.
NoiseSpec CalibrateNoise(double perturbation_d, double frequency_q,
                         double total_weight);

}  // namespace wvp

#endif  // WVP_CORE_NOISE_H_
