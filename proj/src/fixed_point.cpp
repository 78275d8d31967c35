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

#include <bit>

#include "revexp/errors.hpp"

namespace revexp {

Real parse_real(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty numeric string");
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw DomainError("not a decimal number: '" + s + "'");
  }
}

FixedPointValue::FixedPointValue(int width, std::uint64_t mantissa)
    : width_(width), mantissa_(mantissa) {
  if (width < 1 || width > kMaxWidth) {
    throw DomainError("fixed-point width " + std::to_string(width) + " outside [1, " +
                      std::to_string(kMaxWidth) + "]");
  }
  if (mantissa >> width != 0) {
    throw DomainError("mantissa " + std::to_string(mantissa) + " does not fit in " +
                      std::to_string(width) + " bits");
  }
}

int FixedPointValue::popcount() const { return std::popcount(mantissa_); }

std::string FixedPointValue::bit_string() const {
  std::string out;
  out.reserve(width_);
  for (int j = width_ - 1; j >= 0; --j) out.push_back(bit(j) ? '1' : '0');
  return out;
}

FixedPointValue FixedPointValue::from_bit_string(std::string_view bits) {
  if (bits.starts_with("0.")) bits.remove_prefix(2);
  if (bits.starts_with(".")) bits.remove_prefix(1);
  if (bits.empty()) throw DomainError("empty bit string");
  std::uint64_t mantissa = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("bit string contains '" + std::string(1, c) + "'");
    if (bits.size() > static_cast<std::size_t>(kMaxWidth)) throw DomainError("bit string too long");
    mantissa = (mantissa << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return FixedPointValue(static_cast<int>(bits.size()), mantissa);
}

Real FixedPointValue::value() const { return ldexp(Real(mantissa_), -width_); }

double FixedPointValue::to_double() const { return value().convert_to<double>(); }

FixedPointValue fp_round(const Real& v, int n) {
  if (n < 2 || n > kMaxWidth) throw DomainError("fixed-point width must lie in [2, 62]");
  if (!(v >= 0) || v > 1) throw DomainError("fp_round argument outside [0, 1]");
  const Real scaled = ldexp(v, n);
  Real whole = floor(scaled);
  const Real frac = scaled - whole;
  auto mantissa = whole.convert_to<std::uint64_t>();
  if (frac > Real(0.5) || (frac == Real(0.5) && (mantissa & 1U) != 0)) ++mantissa;
  const std::uint64_t top = (std::uint64_t{1} << n) - 1;
  if (mantissa > top) mantissa = top;
  return FixedPointValue(n, mantissa);
}

}  // namespace revexp
