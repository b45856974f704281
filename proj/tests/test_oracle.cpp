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

#include <doctest.h>

#include "ergvc/deviation.hpp"
#include "ergvc/error.hpp"
#include "ergvc/oracle.hpp"
#include "ergvc/random.hpp"

using namespace ergvc;

namespace {

// Points on a coarse grid so that ties and boundary points show up.
SamplePath grid_path(Draws& d, std::size_t m, long den) {
  std::vector<Rat> xs;
  for (std::size_t i = 0; i < m; ++i) xs.push_back(Rat(static_cast<long>(d.below(den)), den));
  return SamplePath::from_rats(xs);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("brute force on small cases") {
    CHECK(gamma_k_intervals_brute(SamplePath::from_rats({Rat(1, 2)}), 1, 1) == Rat(1));
    CHECK(gamma_k_intervals_brute(SamplePath::from_rats({Rat(1, 4), Rat(3, 4)}), 2, 1) ==
          Rat(1, 2));
    CHECK(gamma_k_intervals_brute(SamplePath::from_rats({Rat(1, 4), Rat(3, 4)}), 2, 2) ==
          Rat(1));
    CHECK_THROWS_AS(gamma_k_intervals_brute(SamplePath::from_rats({Rat(1, 2)}), 1, 4),
                    DomainError);
  }

  TEST_CASE("dynamic program matches brute force") {
    Draws d(2024);
    for (int t = 0; t < 150; ++t) {
      const std::size_t m = 1 + d.below(8);
      const std::size_t k = 1 + d.below(3);
      const long den = t % 2 ? 8 : 1024;
      const auto path = grid_path(d, m, den);
      CAPTURE(t);
      CHECK(gamma_k_intervals_exact(path, m, k).value == gamma_k_intervals_brute(path, m, k));
    }
  }

  TEST_CASE("supremum grows with k") {
    Draws d(99);
    const auto path = grid_path(d, 10, 1 << 20);
    Rat prev;
    for (std::size_t k = 1; k <= 3; ++k) {
      const Rat v = gamma_k_intervals_exact(path, 10, k).value;
      CHECK(v >= prev);
      prev = v;
    }
  }
}
