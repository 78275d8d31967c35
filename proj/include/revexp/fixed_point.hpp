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

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace revexp {

/// Extended-precision real used for every classical constant. 160 binary
/// digits covers the 2n+16 bits needed by A^(2^i) for any supported width.
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<160, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

/// Parse a decimal string without passing through binary64.
Real parse_real(std::string_view text);

/// Widest fixed-point register the simulator and oracle can hold.
inline constexpr int kMaxWidth = 62;

/// Unsigned n-bit binary fraction in [0, 1). Bit j carries weight 2^-(n-j),
/// so bit 0 is the least significant.
class FixedPointValue {
 public:
  FixedPointValue(int width, std::uint64_t mantissa);

  int width() const { return width_; }
  std::uint64_t mantissa() const { return mantissa_; }
  bool bit(int j) const { return ((mantissa_ >> j) & 1U) != 0; }
  int popcount() const;

  /// Bits y_{n-1} .. y_0, most significant first, no radix point.
  std::string bit_string() const;
  /// Accepts "011", ".011" or "0.011" (most significant first).
  static FixedPointValue from_bit_string(std::string_view bits);

  Real value() const;
  double to_double() const;

  friend bool operator==(const FixedPointValue&, const FixedPointValue&) = default;
  friend auto operator<=>(const FixedPointValue&, const FixedPointValue&) = default;

 private:
  int width_;
  std::uint64_t mantissa_;
};

/// Round v in [0, 1] to n bits, nearest with ties to the even mantissa.
/// Results that would reach 2^n (including v = 1) clamp to 2^n - 1.
FixedPointValue fp_round(const Real& v, int n);

}  // namespace revexp
