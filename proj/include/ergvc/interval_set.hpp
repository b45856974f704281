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

#ifndef ERGVC_INTERVAL_SET_HPP
#define ERGVC_INTERVAL_SET_HPP

#include <string>
#include <utility>
#include <vector>

#include "ergvc/dyadic.hpp"
#include "ergvc/rational.hpp"

namespace ergvc {

/// Half-open interval [lo, hi) inside [0,1].
struct Interval {
  Rat lo;
  Rat hi;

  Rat length() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x < hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of half-open subintervals of [0,1), kept sorted, disjoint
/// and maximally merged (no two parts touch). Immutable once built.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  /// Sorts and merges arbitrary intervals. Throws DomainError for endpoints
  /// outside [0,1] or lo >= hi.
  static IntervalUnion normalize(std::vector<Interval> raw);
  static IntervalUnion whole();
  static IntervalUnion single(const Rat& lo, const Rat& hi);

  const std::vector<Interval>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  const Rat& measure() const noexcept { return measure_; }

  bool contains(const Rat& x) const;
  bool contains(Dyadic p) const;
  bool subset_of(const IntervalUnion& other) const;

  /// Lebesgue measure of [0, x) intersected with this set.
  Rat measure_below(const Rat& x) const;

  /// Sorted, deduplicated endpoints of all parts.
  std::vector<Rat> endpoints() const;

  /// Largest part length; 0 for the empty set.
  Rat max_part_length() const;
  /// hi of the last part minus lo of the first; 0 for the empty set.
  Rat diameter() const;

  /// Canonical text form: `[a,b)` terms joined by " u ", "{}" when empty.
  std::string str() const;

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.parts_ == b.parts_;
  }

 private:
  explicit IntervalUnion(std::vector<Interval> merged);

  std::vector<Interval> parts_;
  Rat measure_;
  std::vector<std::pair<Threshold, Threshold>> thresholds_;
};

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion complement(const IntervalUnion& a);
IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion difference(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion symmetric_difference(const IntervalUnion& a,
                                   const IntervalUnion& b);

enum class SetOp { Intersect, Complement, SymmetricDifference };

/// Dispatches to the binary operations above; Complement ignores `b`.
IntervalUnion set_algebra(const IntervalUnion& a, const IntervalUnion& b,
                          SetOp op);

}  // namespace ergvc

#endif  // ERGVC_INTERVAL_SET_HPP
