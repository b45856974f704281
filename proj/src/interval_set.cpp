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

#include "ergvc/interval_set.hpp"

#include <algorithm>

#include "ergvc/error.hpp"

namespace ergvc {

IntervalUnion::IntervalUnion(std::vector<Interval> merged)
    : parts_(std::move(merged)) {
  thresholds_.reserve(parts_.size());
  for (const auto& p : parts_) {
    measure_ += p.length();
    thresholds_.emplace_back(Threshold::of(p.lo), Threshold::of(p.hi));
  }
}

IntervalUnion IntervalUnion::normalize(std::vector<Interval> raw) {
  const Rat zero(0), one(1);
  for (const auto& iv : raw) {
    if (iv.lo < zero || iv.hi > one)
      throw DomainError("interval [" + iv.lo.str() + "," + iv.hi.str() +
                        ") not inside [0,1]");
    if (!(iv.lo < iv.hi))
      throw DomainError("interval [" + iv.lo.str() + "," + iv.hi.str() +
                        ") has lo >= hi");
  }
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (auto& iv : raw) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      if (iv.hi > merged.back().hi) merged.back().hi = std::move(iv.hi);
    } else {
      merged.push_back(std::move(iv));
    }
  }
  return IntervalUnion(std::move(merged));
}

IntervalUnion IntervalUnion::whole() { return single(Rat(0), Rat(1)); }

IntervalUnion IntervalUnion::single(const Rat& lo, const Rat& hi) {
  return normalize({Interval{lo, hi}});
}

bool IntervalUnion::contains(const Rat& x) const {
  auto it = std::upper_bound(
      parts_.begin(), parts_.end(), x,
      [](const Rat& v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  return x < std::prev(it)->hi;
}

bool IntervalUnion::contains(Dyadic p) const {
  // First part whose lo threshold is above p; the candidate is the one before.
  auto it = std::partition_point(
      thresholds_.begin(), thresholds_.end(),
      [p](const auto& t) { return !t.first.above(p); });
  if (it == thresholds_.begin()) return false;
  return std::prev(it)->second.above(p);
}

bool IntervalUnion::subset_of(const IntervalUnion& other) const {
  return difference(*this, other).empty();
}

Rat IntervalUnion::measure_below(const Rat& x) const {
  Rat total;
  for (const auto& p : parts_) {
    if (x <= p.lo) break;
    total += (x < p.hi ? x : p.hi) - p.lo;
  }
  return total;
}

std::vector<Rat> IntervalUnion::endpoints() const {
  std::vector<Rat> out;
  out.reserve(2 * parts_.size());
  for (const auto& p : parts_) {
    out.push_back(p.lo);
    out.push_back(p.hi);
  }
  // Parts never touch, so the sequence is already strictly increasing.
  return out;
}

Rat IntervalUnion::max_part_length() const {
  Rat best;
  for (const auto& p : parts_) best = max(best, p.length());
  return best;
}

Rat IntervalUnion::diameter() const {
  if (parts_.empty()) return Rat(0);
  return parts_.back().hi - parts_.front().lo;
}

std::string IntervalUnion::str() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " u ";
    out += "[" + parts_[i].lo.str() + "," + parts_[i].hi.str() + ")";
  }
  return out;
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> out;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    const Rat& lo = max(pa[i].lo, pb[j].lo);
    const Rat& hi = min(pa[i].hi, pb[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (pa[i].hi < pb[j].hi) ++i; else ++j;
  }
  return IntervalUnion::normalize(std::move(out));
}

IntervalUnion complement(const IntervalUnion& a) {
  std::vector<Interval> out;
  Rat cursor(0);
  for (const auto& p : a.parts()) {
    if (cursor < p.lo) out.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < Rat(1)) out.push_back({cursor, Rat(1)});
  return IntervalUnion::normalize(std::move(out));
}

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> all(a.parts());
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  return IntervalUnion::normalize(std::move(all));
}

IntervalUnion difference(const IntervalUnion& a, const IntervalUnion& b) {
  return intersect(a, complement(b));
}

IntervalUnion symmetric_difference(const IntervalUnion& a,
                                   const IntervalUnion& b) {
  return unite(difference(a, b), difference(b, a));
}

IntervalUnion set_algebra(const IntervalUnion& a, const IntervalUnion& b,
                          SetOp op) {
  switch (op) {
    case SetOp::Intersect: return intersect(a, b);
    case SetOp::Complement: return complement(a);
    case SetOp::SymmetricDifference: return symmetric_difference(a, b);
  }
  throw DomainError("unknown set operation");
}

}  // namespace ergvc
