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

#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "wvp/core/weight.h"

namespace wvp {
namespace {

TEST(WeightTest, ParsesPlainDecimals) {
  EXPECT_EQ(Weight::Parse("12", 2).units(), Units{1200});
  EXPECT_EQ(Weight::Parse("0.5", 2).units(), Units{50});
  EXPECT_EQ(Weight::Parse(".5", 1).units(), Units{5});
  EXPECT_EQ(Weight::Parse("3.", 0).units(), Units{3});
  EXPECT_EQ(Weight::Parse("+7", 0).units(), Units{7});
}

TEST(WeightTest, AcceptsTrailingZerosBeyondScale) {
  EXPECT_EQ(Weight::Parse("1.2500", 2).units(), Units{125});
}

TEST(WeightTest, RejectsLossyOrMalformedInput) {
  EXPECT_THROW(Weight::Parse("1.234", 2), std::invalid_argument);
  EXPECT_THROW(Weight::Parse("", 2), std::invalid_argument);
  EXPECT_THROW(Weight::Parse(".", 2), std::invalid_argument);
  EXPECT_THROW(Weight::Parse("-1", 2), std::invalid_argument);
  EXPECT_THROW(Weight::Parse("1e5", 2), std::invalid_argument);
  EXPECT_THROW(Weight::Parse("1.2.3", 2), std::invalid_argument);
  EXPECT_THROW(Weight::Parse("1", 39), std::invalid_argument);
}

TEST(WeightTest, ThirtyEightDigitsFitAndThirtyNineOverflow) {
  const std::string max38(38, '9');
  EXPECT_NO_THROW(Weight::Parse(max38, 0));
  EXPECT_EQ(Weight::Parse(max38, 0).ToString(0), max38);
  EXPECT_THROW(Weight::Parse(std::string(40, '9'), 0), std::overflow_error);
  // 20 integer digits at scale 18 is 38 digits of units.
  EXPECT_NO_THROW(Weight::Parse(std::string(20, '9'), 18));
  EXPECT_THROW(Weight::Parse(std::string(22, '9'), 18), std::overflow_error);
}

TEST(WeightTest, RoundTripsExactly) {
  for (const char* text : {"0", "1", "1.5", "0.000000000000000001",
                           "123456789012345678.123456789012345678"}) {
    EXPECT_EQ(Weight::Parse(text, 18).ToString(18), text);
  }
  EXPECT_EQ(Weight::Parse("2.50", 18).ToString(18), "2.5");
}

TEST(WeightTest, AdditionChecksOverflow) {
  const Weight big = Weight::Parse(std::string(38, '9'), 0);
  EXPECT_THROW(big + big, std::overflow_error);
  EXPECT_EQ((Weight::Parse("1.1", 1) + Weight::Parse("2.3", 1)).units(),
            Units{34});
}

TEST(WeightTest, FormatsNegativeResiduals) {
  EXPECT_EQ(FormatUnits(Units{-15}, 1), "-1.5");
  EXPECT_EQ(FormatUnits(Units{-5}, 2), "-0.05");
  EXPECT_EQ(UnitsToString(Units{-120}), "-120");
}

TEST(WeightTest, ConvertsToDouble) {
  EXPECT_DOUBLE_EQ(Weight::Parse("2.25", 18).ToDouble(18), 2.25);
  EXPECT_DOUBLE_EQ(UnitsToDouble(PowerOfTen(30), 18), 1e12);
}

TEST(WeightTest, NegativeUnitsRejected) {
  EXPECT_THROW(Weight::FromUnits(-1), std::invalid_argument);
}

}  // namespace
}  // namespace wvp
