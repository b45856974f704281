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

#include "ergvc/dyadic.hpp"

#include <cctype>

#include "ergvc/error.hpp"

namespace ergvc {

Int to_int(u128 v) {
  Int hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  Int lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  hi <<= 64;
  return hi + lo;
}

u128 to_u128(const Int& v) {
  Int hi = v >> 64;
  Int lo = v - (hi << 64);
  return (u128{hi.get_ui()} << 64) | u128{lo.get_ui()};
}

namespace {

Int two_pow_128() {
  Int v = 1;
  v <<= 128;
  return v;
}

}  // namespace

void check_precision(unsigned precision) {
  if (precision < kMinPrecision || precision > kMaxPrecision)
    throw DomainError("precision must be in [64,128], got " +
                      std::to_string(precision));
}

std::optional<Dyadic> Dyadic::exact(const Rat& r, unsigned precision) {
  if (r.sign() < 0 || r >= Rat(1)) return std::nullopt;
  const Int scaled = r.num() << precision;
  if (scaled % r.den() != 0) return std::nullopt;
  const Int q = scaled / r.den();
  return from_bits(to_u128(q) << (kMaxPrecision - precision));
}

Dyadic Dyadic::floor_of(const Rat& r, unsigned precision) {
  if (r.sign() < 0 || r >= Rat(1))
    throw DomainError("point " + r.str() + " outside [0,1)");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), Int(r.num() << precision).get_mpz_t(),
             r.den().get_mpz_t());
  return from_bits(to_u128(q) << (kMaxPrecision - precision));
}

Rat Dyadic::to_rat() const { return Rat(to_int(bits_), two_pow_128()); }

double Dyadic::to_double() const {
  return static_cast<double>(bits_) * 0x1p-128;
}

std::string Dyadic::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "0x";
  for (int shift = 124; shift >= 0; shift -= 4)
    out.push_back(kDigits[static_cast<unsigned>(bits_ >> shift) & 0xf]);
  return out;
}

Dyadic Dyadic::parse_hex(std::string_view text) {
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
    throw SyntaxError("expected 0x-prefixed hex fraction", 0);
  if (text.size() > 34) throw SyntaxError("hex fraction longer than 128 bits", 34);
  u128 v = 0;
  for (std::size_t i = 2; i < text.size(); ++i) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    unsigned d;
    if (c >= '0' && c <= '9') d = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') d = static_cast<unsigned>(c - 'a' + 10);
    else throw SyntaxError("invalid hex digit", i);
    v = (v << 4) | d;
  }
  // Digits are the leading fraction bits.
  const std::size_t digits = text.size() - 2;
  if (digits < 32) v <<= 4 * (32 - digits);
  return from_bits(v);
}

Threshold Threshold::of(const Rat& r) {
  if (r.sign() < 0 || r > Rat(1))
    throw DomainError("threshold " + r.str() + " outside [0,1]");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), Int(r.num() << 128).get_mpz_t(),
             r.den().get_mpz_t());
  if (q == two_pow_128()) return Threshold{0, true};
  return Threshold{to_u128(q), false};
}

u128 inverse_mod_2_128(u128 odd) {
  if ((odd & 1) == 0) throw DomainError("value has no inverse modulo 2^128");
  u128 x = odd;  // correct to 3 bits
  for (int i = 0; i < 7; ++i) x *= 2 - odd * x;
  return x;
}

}  // namespace ergvc
