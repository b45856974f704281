/*
 * Copyright 2026 The ergvc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ERGVC_DYADIC_HPP
#define ERGVC_DYADIC_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ergvc/rational.hpp"

namespace ergvc {

using u128 = unsigned __int128;

inline constexpr unsigned kMinPrecision = 64;
inline constexpr unsigned kMaxPrecision = 128;

void check_precision(unsigned precision);

/// A sample point in [0,1): the value bits / 2^128. A point of precision P
/// has its low 128-P bits clear.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  static constexpr Dyadic from_bits(u128 bits) {
    Dyadic d;
    d.bits_ = bits;
    return d;
  }

  constexpr u128 bits() const noexcept { return bits_; }

  /// Exact value if `r` is in [0,1) and a multiple of 2^-precision.
  static std::optional<Dyadic> exact(const Rat& r,
                                     unsigned precision = kMaxPrecision);
  /// Largest multiple of 2^-precision not above `r`; r must be in [0,1).
  static Dyadic floor_of(const Rat& r, unsigned precision);

  Rat to_rat() const;
  double to_double() const;

  /// 32 hex digits prefixed with 0x.
  std::string hex() const;
  static Dyadic parse_hex(std::string_view text);

  /// Addition modulo 1.
  friend constexpr Dyadic operator+(Dyadic a, Dyadic b) {
    return from_bits(a.bits_ + b.bits_);
  }
  friend constexpr Dyadic operator-(Dyadic a, Dyadic b) {
    return from_bits(a.bits_ - b.bits_);
  }
  friend constexpr bool operator==(Dyadic, Dyadic) = default;
  friend constexpr auto operator<=>(Dyadic a, Dyadic b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  u128 bits_ = 0;
};

/// One unit in the last place at the given precision.
constexpr Dyadic ulp(unsigned precision) {
  return Dyadic::from_bits(u128{1} << (kMaxPrecision - precision));
}

/// ceil(r * 2^128) for r in [0,1]. `top` marks the value 2^128, which only
/// rationals in (1 - 2^-128, 1] reach.
struct Threshold {
  u128 value = 0;
  bool top = false;

  static Threshold of(const Rat& r);

  /// p < r, exactly.
  constexpr bool above(Dyadic p) const { return top || p.bits() < value; }
};

/// Conversions between 128-bit words and big integers.
Int to_int(u128 v);
u128 to_u128(const Int& v);

/// Multiplicative inverse of an odd value modulo 2^128.
u128 inverse_mod_2_128(u128 odd);

}  // namespace ergvc

#endif  // ERGVC_DYADIC_HPP
