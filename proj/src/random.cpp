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

#include "ergvc/random.hpp"

#include <algorithm>
#include <numeric>

namespace ergvc {

std::uint64_t Draws::below(std::uint64_t n) {
  // Rejection keeps the result exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return v % n;
}

std::int64_t Draws::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rat Draws::unit_rational(long max_den) {
  const long q = static_cast<long>(between(2, max_den));
  return Rat(static_cast<long>(between(0, q)), q);
}

IntervalUnion random_grid_union(Draws& d, unsigned max_parts, long den) {
  const auto parts = static_cast<std::size_t>(d.between(1, max_parts));
  std::vector<long> ends;
  while (ends.size() < 2 * parts) {
    const long e = static_cast<long>(d.between(0, den));
    if (std::find(ends.begin(), ends.end(), e) == ends.end()) ends.push_back(e);
  }
  std::sort(ends.begin(), ends.end());
  std::vector<Interval> ivs;
  for (std::size_t i = 0; i < ends.size(); i += 2)
    ivs.push_back({Rat(ends[i], den), Rat(ends[i + 1], den)});
  return IntervalUnion::normalize(std::move(ivs));
}

IntervalUnion random_rational_union(Draws& d, unsigned max_parts, long max_den) {
  const auto parts = static_cast<std::size_t>(d.between(1, max_parts));
  std::vector<Rat> ends;
  while (ends.size() < 2 * parts) {
    Rat e = d.unit_rational(max_den);
    if (std::find(ends.begin(), ends.end(), e) == ends.end()) ends.push_back(std::move(e));
  }
  std::sort(ends.begin(), ends.end());
  std::vector<Interval> ivs;
  for (std::size_t i = 0; i < ends.size(); i += 2) ivs.push_back({ends[i], ends[i + 1]});
  return IntervalUnion::normalize(std::move(ivs));
}

std::vector<std::size_t> random_permutation(Draws& d, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[d.below(i)]);
  return p;
}

}  // namespace ergvc
