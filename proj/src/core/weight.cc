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

#include "wvp/core/weight.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace wvp {
namespace {

void CheckScale(int scale) {
  if (scale < 0 || scale > kMaxDecimalScale) {
    throw std::invalid_argument("decimal scale must be in [0, 38], got " +
                                std::to_string(scale));
  }
}

constexpr std::array<Units, kMaxDecimalScale + 1> MakePowersOfTen() {
  std::array<Units, kMaxDecimalScale + 1> powers{};
  powers[0] = 1;
  for (size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * 10;
  return powers;
}

constexpr auto kPowersOfTen = MakePowersOfTen();

}  // namespace

Units PowerOfTen(int exponent) {
  CheckScale(exponent);
  return kPowersOfTen[static_cast<size_t>(exponent)];
}

Units CheckedAdd(Units a, Units b) {
  Units out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("weight sum exceeds 128-bit fixed-point range");
  }
  return out;
}

std::string UnitsToString(Units value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work in the negative domain so that the minimum value is representable.
  Units v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string FormatUnits(Units value, int scale) {
  CheckScale(scale);
  const bool negative = value < 0;
  std::string digits = UnitsToString(value);
  if (negative) digits.erase(0, 1);
  if (scale == 0) return negative ? "-" + digits : digits;
  if (digits.size() <= static_cast<size_t>(scale)) {
    digits.insert(0, static_cast<size_t>(scale) + 1 - digits.size(), '0');
  }
  std::string whole = digits.substr(0, digits.size() - scale);
  std::string frac = digits.substr(digits.size() - scale);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = negative ? "-" : "";
  out += whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

double UnitsToDouble(Units value, int scale) {
  const Units unit = PowerOfTen(scale);
  const Units whole = value / unit;
  const Units frac = value % unit;
  return static_cast<double>(static_cast<long double>(whole) +
                             static_cast<long double>(frac) /
                                 static_cast<long double>(unit));
}

Weight Weight::FromUnits(Units units) {
  if (units < 0) throw std::invalid_argument("weight must be non-negative");
  return Weight(units);
}

Weight Weight::Parse(std::string_view text, int scale) {
  CheckScale(scale);
  const std::string original(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) {
    throw std::invalid_argument("empty weight string");
  }
  const size_t dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) {
    throw std::invalid_argument("malformed weight '" + original + "'");
  }
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!all_digits(whole) || !all_digits(frac)) {
    throw std::invalid_argument("malformed weight '" + original + "'");
  }
  if (frac.size() > static_cast<size_t>(scale)) {
    const auto excess = frac.substr(static_cast<size_t>(scale));
    if (excess.find_first_not_of('0') != std::string_view::npos) {
      throw std::invalid_argument("weight '" + original + "' has more than " +
                                  std::to_string(scale) +
                                  " significant fractional digits");
    }
    frac = frac.substr(0, static_cast<size_t>(scale));
  }

  Units units = 0;
  auto push_digit = [&](char c) {
    if (__builtin_mul_overflow(units, Units{10}, &units) ||
        __builtin_add_overflow(units, Units{c - '0'}, &units)) {
      throw std::overflow_error("weight '" + original +
                                "' exceeds 128-bit fixed-point range");
    }
  };
  for (char c : whole) push_digit(c);
  for (char c : frac) push_digit(c);
  for (size_t k = frac.size(); k < static_cast<size_t>(scale); ++k) {
    push_digit('0');
  }
  return Weight(units);
}

std::string Weight::ToString(int scale) const {
  return FormatUnits(units_, scale);
}

double Weight::ToDouble(int scale) const {
  return UnitsToDouble(units_, scale);
}

Weight& Weight::operator+=(Weight other) {
  units_ = CheckedAdd(units_, other.units_);
  return *this;
}

}  // namespace wvp
