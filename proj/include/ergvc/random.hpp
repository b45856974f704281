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

#ifndef ERGVC_RANDOM_HPP
#define ERGVC_RANDOM_HPP

#include <cstdint>
#include <vector>

#include "ergvc/interval_set.hpp"
#include "ergvc/process.hpp"
#include "ergvc/rational.hpp"

namespace ergvc {

/// Sequential view of the counter stream (seed, Test, 0), (seed, Test, 1), ...
/// used to build randomized experiment inputs.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() { return counter_draw(seed_, Stream::Test, index_++); }
  /// Uniform on [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// a/q with q uniform on [2, max_den] and a uniform on [0, q].
  Rat unit_rational(long max_den);

 private:
  std::uint64_t seed_;
  std::uint64_t index_ = 0;
};

/// Union of 1..max_parts intervals with endpoints on the grid j/den.
IntervalUnion random_grid_union(Draws& d, unsigned max_parts, long den);

/// Nonempty union of 1..max_parts intervals with small-denominator
/// rational endpoints.
IntervalUnion random_rational_union(Draws& d, unsigned max_parts, long max_den = 30);

/// Random permutation of 0..n-1.
std::vector<std::size_t> random_permutation(Draws& d, std::size_t n);

}  // namespace ergvc

#endif  // ERGVC_RANDOM_HPP
