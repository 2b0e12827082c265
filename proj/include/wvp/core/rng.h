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

#ifndef WVP_CORE_RNG_H_
#define WVP_CORE_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace wvp {

// Combines a seed with a stream label into a new well-mixed seed
// (SplitMix64 finalizer). Used to derive independent, reproducible streams
// such as (run seed, proposal index, purpose).
uint64_t MixSeed(uint64_t seed, uint64_t stream);
uint64_t DeriveSeed(uint64_t seed, std::initializer_list<uint64_t> path);

// Seedable generator whose floating-point draws are computed from raw 64-bit
// engine output, so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(MixSeed(seed, 0)) {}

  // An independent generator for a labelled sub-stream of `seed`.
  static Rng Stream(uint64_t seed, std::initializer_list<uint64_t> path) {
    return Rng(DeriveSeed(seed, path));
  }

  uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on the open interval (0, 1).
  double UniformOpen() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Laplace(0, scale) by inversion. scale == 0 yields exactly 0.
  double Laplace(double scale);

 private:
  std::mt19937_64 engine_;
};

}  // namespace wvp

#endif  // WVP_CORE_RNG_H_
