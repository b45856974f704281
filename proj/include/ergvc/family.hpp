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

#ifndef ERGVC_FAMILY_HPP
#define ERGVC_FAMILY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ergvc/dyadic.hpp"
#include "ergvc/interval_set.hpp"

namespace ergvc {

/// Finite stretch {T^j base : |j| <= radius} of an orbit of the rotation
/// T x = x + alpha (mod 1) on the precision-P grid. Membership is decided
/// exactly by solving j * alpha = p - base modulo 2^P, so the radius can be
/// astronomically large without materializing atoms.
class OrbitSegment {
 public:
  /// `alpha` must be an odd multiple of 2^-precision; radius < 2^62.
  OrbitSegment(Dyadic base, Dyadic alpha, unsigned precision,
               std::uint64_t radius);

  /// The step j with T^j base == p and |j| <= radius, if any.
  std::optional<std::int64_t> step_of(Dyadic p) const;
  bool contains(Dyadic p) const { return step_of(p).has_value(); }

  /// T^j base for j = -window..window, in step order.
  std::vector<Dyadic> atoms(std::uint64_t window) const;

  Dyadic base() const noexcept { return base_; }
  Dyadic alpha() const noexcept { return alpha_; }
  unsigned precision() const noexcept { return precision_; }
  std::uint64_t radius() const noexcept { return radius_; }

  /// T^steps base.
  Dyadic at(std::int64_t steps) const;

 private:
  Dyadic base_;
  Dyadic alpha_;
  unsigned precision_;
  std::uint64_t radius_;
  u128 alpha_inverse_;  // inverse of alpha's P-bit integer mod 2^P
};

/// One member of a set family: an interval union, optionally carrying a
/// Lebesgue-null orbit segment of atoms.
struct Member {
  IntervalUnion body;
  std::optional<OrbitSegment> orbit;

  bool contains(Dyadic p) const {
    return body.contains(p) || (orbit && orbit->contains(p));
  }
  bool contains(const Rat& x) const;
  const Rat& measure() const noexcept { return body.measure(); }
};

/// Indexed countable family, materialized up to `budget` members. The
/// generator must be deterministic and safe to call from several threads.
class SetFamily {
 public:
  using Generator = std::function<Member(std::size_t)>;

  SetFamily(std::string name, std::size_t budget, Generator gen);

  const std::string& name() const noexcept { return name_; }
  std::size_t budget() const noexcept { return budget_; }

  /// Throws DomainError when i >= budget.
  Member enumerate(std::size_t i) const;
  /// First `upto` members; throws DomainError when upto > budget.
  std::vector<Member> members(std::size_t upto) const;

 private:
  std::string name_;
  std::size_t budget_;
  Generator gen_;
};

SetFamily explicit_family(std::string name, std::vector<Member> members);
SetFamily explicit_family(std::string name,
                          const std::vector<IntervalUnion>& sets);

/// The 2^n dyadic intervals of order n. Throws ResourceError if 2^n exceeds
/// `max_members`.
SetFamily dyadic_family(unsigned n, std::size_t max_members = std::size_t{1} << 20);

/// D_1 u ... u D_order, enumerated order by order.
SetFamily dyadic_union_family(unsigned order);

/// {[0,t)}: t = 0, then t = 1, then t = odd k / 2^n for n = 1..order.
SetFamily half_interval_family(unsigned order);

/// All unions of at most k intervals whose endpoints lie on the grid
/// {j / 2^order}; member 0 is the empty set.
SetFamily interval_union_family(unsigned k, unsigned order,
                                std::size_t max_members = 4'000'000);

/// Members of `a` followed by members of `b`.
SetFamily concat_families(const SetFamily& a, const SetFamily& b);

/// Sorted, deduplicated interval endpoints of the first `upto` members.
std::vector<Rat> boundary_points(const SetFamily& fam, std::size_t upto);

}  // namespace ergvc

#endif  // ERGVC_FAMILY_HPP
