// Copyright 2026 The revexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "revexp/fixed_point.hpp"

#include <gtest/gtest.h>

#include <random>

#include "revexp/errors.hpp"

namespace revexp {
namespace {

TEST(FpRound, PublishedBitStrings) {
  EXPECT_EQ(fp_round(parse_real("0.389"), 21).bit_string(), "011000111001010110000");
  EXPECT_EQ(fp_round(parse_real("0.151321"), 21).bit_string(), "001001101011110011111");
}

TEST(FpRound, ZeroAndOne) {
  EXPECT_EQ(fp_round(Real(0), 16).mantissa(), 0u);
  EXPECT_EQ(fp_round(Real(1), 16).mantissa(), (1u << 16) - 1);
  EXPECT_EQ(fp_round(Real(1) - ldexp(Real(1), -30), 16).mantissa(), (1u << 16) - 1);
}

TEST(FpRound, TiesGoToEvenMantissa) {
  const int n = 10;
  auto half_ulps = [&](int k) { return ldexp(Real(k), -(n + 1)); };
  EXPECT_EQ(fp_round(half_ulps(1), n).mantissa(), 0u);
  EXPECT_EQ(fp_round(half_ulps(3), n).mantissa(), 2u);
  EXPECT_EQ(fp_round(half_ulps(5), n).mantissa(), 2u);
  EXPECT_EQ(fp_round(half_ulps(7), n).mantissa(), 4u);
  EXPECT_EQ(fp_round(half_ulps(5) + ldexp(Real(1), -40), n).mantissa(), 3u);
}

TEST(FpRound, RejectsOutOfDomain) {
  EXPECT_THROW(fp_round(Real(-0.25), 8), DomainError);
  EXPECT_THROW(fp_round(Real(1.5), 8), DomainError);
  EXPECT_THROW(fp_round(Real(0.5), 1), DomainError);
  EXPECT_THROW(fp_round(Real(0.5), 63), DomainError);
}

TEST(FpRound, ExactOnRepresentableValues) {
  std::mt19937_64 rng(7);
  for (int n : {2, 8, 21, 32, 62}) {
    for (int k = 0; k < 200; ++k) {
      const std::uint64_t mant = rng() >> (64 - n);
      const FixedPointValue v(n, mant);
      EXPECT_EQ(fp_round(v.value(), n), v);
    }
  }
}

TEST(FpRound, Monotone) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    EXPECT_LE(fp_round(Real(a), 21).mantissa(), fp_round(Real(b), 21).mantissa());
  }
}

TEST(FixedPointValue, BitStringRoundTrip) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    const int n = 2 + static_cast<int>(rng() % 61);
    const FixedPointValue v(n, rng() >> (64 - n));
    EXPECT_EQ(FixedPointValue::from_bit_string(v.bit_string()), v);
    EXPECT_EQ(FixedPointValue::from_bit_string("0." + v.bit_string()), v);
    EXPECT_EQ(FixedPointValue::from_bit_string("." + v.bit_string()), v);
  }
}

TEST(FixedPointValue, BitWeights) {
  const FixedPointValue v = FixedPointValue::from_bit_string("1001");
  EXPECT_EQ(v.width(), 4);
  EXPECT_EQ(v.mantissa(), 9u);
  EXPECT_TRUE(v.bit(3));
  EXPECT_TRUE(v.bit(0));
  EXPECT_FALSE(v.bit(1));
  EXPECT_EQ(v.popcount(), 2);
  EXPECT_DOUBLE_EQ(v.to_double(), 0.5625);
}

TEST(FixedPointValue, RejectsOversizedMantissa) {
  EXPECT_THROW(FixedPointValue(4, 16), DomainError);
  EXPECT_THROW(FixedPointValue(0, 0), DomainError);
  EXPECT_THROW(FixedPointValue::from_bit_string("01x1"), DomainError);
}

TEST(ParseReal, DecimalStrings) {
  EXPECT_EQ(parse_real("0.5"), Real(0.5));
  EXPECT_EQ(parse_real("100"), Real(100));
  EXPECT_THROW(parse_real("abc"), DomainError);
  EXPECT_THROW(parse_real(""), DomainError);
}

}  // namespace
}  // namespace revexp
