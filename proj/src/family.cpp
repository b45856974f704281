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

#include "ergvc/family.hpp"

#include <algorithm>
#include <memory>

#include "ergvc/error.hpp"

namespace ergvc {

namespace {

u128 precision_mask(unsigned precision) {
  return precision == 128 ? ~u128{0} : (u128{1} << precision) - 1;
}

}  // namespace

OrbitSegment::OrbitSegment(Dyadic base, Dyadic alpha, unsigned precision,
                           std::uint64_t radius)
    : base_(base), alpha_(alpha), precision_(precision), radius_(radius) {
  check_precision(precision);
  const unsigned shift = kMaxPrecision - precision;
  const u128 low = shift == 0 ? 0 : (u128{1} << shift) - 1;
  if ((alpha.bits() & low) != 0 || (base.bits() & low) != 0)
    throw DomainError("orbit base/alpha not on the precision grid");
  const u128 a = alpha.bits() >> shift;
  if ((a & 1) == 0) throw DomainError("rotation alpha must be odd at precision");
  if (radius >= (std::uint64_t{1} << 62))
    throw DomainError("orbit radius must be below 2^62");
  alpha_inverse_ = inverse_mod_2_128(a) & precision_mask(precision);
}

std::optional<std::int64_t> OrbitSegment::step_of(Dyadic p) const {
  const unsigned shift = kMaxPrecision - precision_;
  const u128 diff = (p - base_).bits();
  if (shift != 0 && (diff & ((u128{1} << shift) - 1)) != 0) return std::nullopt;
  const u128 mask = precision_mask(precision_);
  const u128 j = ((diff >> shift) * alpha_inverse_) & mask;
  const u128 half = u128{1} << (precision_ - 1);
  if (j < half) {
    if (j > radius_) return std::nullopt;
    return static_cast<std::int64_t>(j);
  }
  const u128 neg = (~j + 1) & mask;
  if (neg > radius_) return std::nullopt;
  return -static_cast<std::int64_t>(neg);
}

Dyadic OrbitSegment::at(std::int64_t steps) const {
  const u128 s = static_cast<u128>(static_cast<__int128>(steps));
  return base_ + Dyadic::from_bits(alpha_.bits() * s);
}

std::vector<Dyadic> OrbitSegment::atoms(std::uint64_t window) const {
  const auto w = static_cast<std::int64_t>(std::min(window, radius_));
  std::vector<Dyadic> out;
  out.reserve(static_cast<std::size_t>(2 * w + 1));
  for (std::int64_t j = -w; j <= w; ++j) out.push_back(at(j));
  return out;
}

bool Member::contains(const Rat& x) const {
  if (body.contains(x)) return true;
  if (!orbit) return false;
  const auto p = Dyadic::exact(x, orbit->precision());
  return p && orbit->contains(*p);
}

SetFamily::SetFamily(std::string name, std::size_t budget, Generator gen)
    : name_(std::move(name)), budget_(budget), gen_(std::move(gen)) {}

Member SetFamily::enumerate(std::size_t i) const {
  if (i >= budget_)
    throw DomainError("member index " + std::to_string(i) +
                      " beyond budget " + std::to_string(budget_) + " of " +
                      name_);
  return gen_(i);
}

std::vector<Member> SetFamily::members(std::size_t upto) const {
  if (upto > budget_)
    throw DomainError("requested " + std::to_string(upto) +
                      " members but budget of " + name_ + " is " +
                      std::to_string(budget_));
  std::vector<Member> out;
  out.reserve(upto);
  for (std::size_t i = 0; i < upto; ++i) out.push_back(gen_(i));
  return out;
}

SetFamily explicit_family(std::string name, std::vector<Member> members) {
  auto shared = std::make_shared<const std::vector<Member>>(std::move(members));
  const std::size_t n = shared->size();
  return SetFamily(std::move(name), n,
                   [shared](std::size_t i) { return (*shared)[i]; });
}

SetFamily explicit_family(std::string name,
                          const std::vector<IntervalUnion>& sets) {
  std::vector<Member> members;
  members.reserve(sets.size());
  for (const auto& s : sets) members.push_back(Member{s, std::nullopt});
  return explicit_family(std::move(name), std::move(members));
}

SetFamily dyadic_family(unsigned n, std::size_t max_members) {
  if (n < 1) throw DomainError("dyadic order must be >= 1");
  if (n >= 63 || (std::size_t{1} << n) > max_members)
    throw ResourceError("dyadic family of order " + std::to_string(n) +
                        " exceeds member budget " + std::to_string(max_members));
  const std::size_t count = std::size_t{1} << n;
  Int den = 1;
  den <<= n;
  return SetFamily("dyadic-" + std::to_string(n), count,
                   [den](std::size_t k) {
                     const Int lo(static_cast<unsigned long>(k));
                     return Member{IntervalUnion::single(Rat(lo, den),
                                                         Rat(lo + 1, den)),
                                   std::nullopt};
                   });
}

SetFamily dyadic_union_family(unsigned order) {
  if (order < 1 || order > 24) throw DomainError("dyadic order must be in [1,24]");
  const std::size_t count = (std::size_t{1} << (order + 1)) - 2;
  return SetFamily("dyadic", count, [](std::size_t i) {
    // Order n occupies indices [2^n - 2, 2^(n+1) - 2).
    unsigned n = 1;
    while (i >= (std::size_t{1} << (n + 1)) - 2) ++n;
    const std::size_t k = i - ((std::size_t{1} << n) - 2);
    Int den = 1;
    den <<= n;
    const Int lo(static_cast<unsigned long>(k));
    return Member{IntervalUnion::single(Rat(lo, den), Rat(lo + 1, den)),
                  std::nullopt};
  });
}

SetFamily half_interval_family(unsigned order) {
  if (order > 24) throw DomainError("half-interval order must be <= 24");
  const std::size_t count = (std::size_t{1} << order) + 1;
  return SetFamily("half-intervals", count, [](std::size_t i) {
    if (i == 0) return Member{IntervalUnion(), std::nullopt};
    if (i == 1) return Member{IntervalUnion::whole(), std::nullopt};
    // Order n contributes the 2^(n-1) odd numerators, at [2^(n-1)+1, 2^n+1).
    unsigned n = 1;
    while (i >= (std::size_t{1} << n) + 1) ++n;
    const std::size_t k = 2 * (i - ((std::size_t{1} << (n - 1)) + 1)) + 1;
    Int den = 1;
    den <<= n;
    return Member{
        IntervalUnion::single(Rat(0), Rat(Int(static_cast<unsigned long>(k)), den)),
        std::nullopt};
  });
}

SetFamily interval_union_family(unsigned k, unsigned order,
                                std::size_t max_members) {
  if (k < 1) throw DomainError("interval count k must be >= 1");
  if (order > 16) throw ResourceError("grid order above 16 not supported");
  const std::size_t grid = (std::size_t{1} << order) + 1;
  // Count before materializing.
  Int total = 0;
  for (unsigned r = 0; r <= k && 2 * r <= grid; ++r) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), grid, 2 * r);
    total += c;
  }
  if (total > Int(static_cast<unsigned long>(max_members)))
    throw ResourceError("unions of <= " + std::to_string(k) +
                        " intervals on order-" + std::to_string(order) +
                        " grid exceed member budget");
  Int den = 1;
  den <<= order;
  std::vector<Member> members;
  members.reserve(total.get_ui());
  members.push_back(Member{IntervalUnion(), std::nullopt});
  for (unsigned r = 1; r <= k && 2 * r <= grid; ++r) {
    const std::size_t picks = 2 * r;
    std::vector<std::size_t> idx(picks);
    for (std::size_t i = 0; i < picks; ++i) idx[i] = i;
    while (true) {
      std::vector<Interval> parts;
      parts.reserve(r);
      for (std::size_t p = 0; p < picks; p += 2)
        parts.push_back({Rat(Int(static_cast<unsigned long>(idx[p])), den),
                         Rat(Int(static_cast<unsigned long>(idx[p + 1])), den)});
      members.push_back(Member{IntervalUnion::normalize(std::move(parts)),
                               std::nullopt});
      // Next combination in lexicographic order.
      std::size_t pos = picks;
      while (pos > 0 && idx[pos - 1] == grid - picks + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t q = pos; q < picks; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  auto fam = explicit_family(std::string{}, std::move(members));
  return SetFamily("intervals-" + std::to_string(k), fam.budget(),
                   [fam](std::size_t i) { return fam.enumerate(i); });
}

SetFamily concat_families(const SetFamily& a, const SetFamily& b) {
  const std::size_t na = a.budget();
  return SetFamily(a.name() + "+" + b.name(), na + b.budget(),
                   [a, b, na](std::size_t i) {
                     return i < na ? a.enumerate(i) : b.enumerate(i - na);
                   });
}

std::vector<Rat> boundary_points(const SetFamily& fam, std::size_t upto) {
  std::vector<Rat> out;
  for (const auto& m : fam.members(upto)) {
    auto e = m.body.endpoints();
    out.insert(out.end(), std::make_move_iterator(e.begin()),
               std::make_move_iterator(e.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ergvc
