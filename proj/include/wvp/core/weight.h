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

#ifndef WVP_CORE_WEIGHT_H_
#define WVP_CORE_WEIGHT_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace wvp {

// Signed 128-bit count of smallest weight units. Signed so that residual
// tallies (a total minus candidate weights) can be represented directly.
using Units = __int128;

inline constexpr int kDefaultDecimalScale = 18;
// 10^38 < 2^127 - 1 < 10^39, so any decimal with at most 38 significant digits
// fits.
inline constexpr int kMaxDecimalScale = 38;

// 10^exponent as Units. Requires 0 <= exponent <= kMaxDecimalScale.
Units PowerOfTen(int exponent);

// Throws std::overflow_error when the exact sum does not fit in Units.
Units CheckedAdd(Units a, Units b);

std::string UnitsToString(Units value);

// A non-negative voting weight stored as an exact count of 10^-scale units.
// The scale itself is held by the owning transcript, so two Weights are only
// comparable when they come from the same scale.
class Weight {
 public:
  constexpr Weight() = default;

  // Throws std::invalid_argument for negative values.
  static Weight FromUnits(Units units);

  // Parses a plain decimal ("12", "0.5", "3.140000") at the given scale.
  // Fractional digits beyond the scale are accepted only if they are zeros;
  // anything else would lose precision and is rejected with
  // std::invalid_argument. Values that overflow 128 bits throw
  // std::overflow_error.
  static Weight Parse(std::string_view text, int scale = kDefaultDecimalScale);

  constexpr Units units() const { return units_; }

  // Shortest exact decimal rendering: no trailing fractional zeros and no
  // trailing point ("1.5", "2", "0.000000000000000001").
  std::string ToString(int scale = kDefaultDecimalScale) const;

  double ToDouble(int scale = kDefaultDecimalScale) const;

  Weight& operator+=(Weight other);
  friend Weight operator+(Weight a, Weight b) { return a += b; }

  friend constexpr bool operator==(Weight a, Weight b) = default;
  friend constexpr std::strong_ordering operator<=>(Weight a, Weight b) {
    return a.units_ <=> b.units_;
  }

 private:
  constexpr explicit Weight(Units units) : units_(units) {}

  Units units_ = 0;
};

// Renders a signed unit count at the given scale, e.g. residual tallies.
std::string FormatUnits(Units value, int scale);
double UnitsToDouble(Units value, int scale);

}  // namespace wvp

#endif  // WVP_CORE_WEIGHT_H_
