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

#include "ergvc/rational.hpp"

#include <cctype>
#include <ostream>

#include "ergvc/error.hpp"

namespace ergvc {

Rat::Rat(const Int& num, const Int& den) : q_(num, den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

// Reads an optionally signed run of decimal digits starting at `pos`.
Int read_int(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == digits) throw SyntaxError("expected integer", digits);
  return Int(std::string(text.substr(start, pos - start)));
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::size_t pos = 0;
  Int num = read_int(text, pos);
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t at = pos;
    den = read_int(text, pos);
    if (sgn(den) <= 0) throw SyntaxError("denominator must be positive", at);
  }
  if (pos != text.size()) throw SyntaxError("trailing characters", pos);
  return Rat(num, den);
}

std::string Rat::str() const { return q_.get_str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat pow2_neg(unsigned n) {
  Int den = 1;
  den <<= n;
  return Rat(Int(1), den);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace ergvc
