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

#include "ergvc/dsl.hpp"
#include "ergvc/error.hpp"
#include "ergvc/induced.hpp"
#include "ergvc/random.hpp"

using namespace ergvc;

namespace {

IntervalUnion U(const char* text) { return parse_interval_union(text); }

SamplePath approx_path(const std::vector<Rat>& xs) {
  std::vector<Dyadic> pts;
  for (const auto& x : xs) pts.push_back(Dyadic::floor_of(x, kMaxPrecision));
  return SamplePath::from_points(std::move(pts));
}

// 1/8, 5/8, 1/8, 5/8, ...: every other point lies in [0,1/2).
SamplePath alternating(std::size_t n) {
  std::vector<Rat> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(i % 2 ? Rat(5, 8) : Rat(1, 8));
  return SamplePath::from_rats(xs);
}

SamplePath golden(std::size_t n) {
  ProcessSpec s;
  s.params = RotationParams{golden_alpha(), Rat(0)};
  return generate(s, n);
}

}  // namespace

TEST_SUITE("induced") {
  TEST_CASE("induce examples") {
    const auto p = approx_path({Rat(6, 10), Rat(3, 10), Rat(7, 10), Rat(1, 10)});
    const auto ip = induce(p, U("[0,1/2)"), 2);
    CHECK(ip.hits == std::vector<std::size_t>{2, 4});
    CHECK(ip.points == std::vector<Dyadic>{p[1], p[3]});
    CHECK(ip.tau(0) == 0);
    CHECK(ip.tau(1) == 2);

    const auto all = induce(p, IntervalUnion::whole(), 4);
    CHECK(all.hits == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(std::equal(all.points.begin(), all.points.end(), p.points().begin()));
  }

  TEST_CASE("induce errors") {
    const auto p = approx_path({Rat(6, 10), Rat(3, 10)});
    CHECK_THROWS_AS(induce(p, IntervalUnion{}, 1), PreconditionError);
    try {
      induce(p, U("[0,1/2)"), 2);
      FAIL("expected insufficient data");
    } catch (const InsufficientDataError& e) {
      CHECK(e.available() == 1);
    }
  }

  TEST_CASE("return-time ratio") {
    const auto ip = induce(alternating(40), U("[0,1/2)"), 20);
    for (std::size_t m : {1u, 2u, 10u, 20u})
      CHECK(wm(ip, m) == Rat(static_cast<long>(m - 1), static_cast<long>(m)));
    const auto full = induce(alternating(40), IntervalUnion::whole(), 40);
    CHECK(wm(full, 40) == Rat(39, 40));
    CHECK_THROWS_AS(wm(ip, 0), DomainError);
    CHECK_THROWS_AS(wm(ip, 21), DomainError);
  }

  TEST_CASE("golden rotation return times") {
    const auto path = golden(40000);
    const auto ip = induce(path, U("[0,1/3)"), 10000);
    const double w = wm(ip, 10000).to_double();
    CHECK(w >= 0.95);
    CHECK(w <= 1.05);
    const auto thousand = induce(path, U("[0,1/3)"), 1000);
    CHECK(mean_return_time(thousand).to_double() == doctest::Approx(3).epsilon(0.1));
  }

  TEST_CASE("mean return time") {
    CHECK(mean_return_time(induce(alternating(10), IntervalUnion::whole(), 10)) == Rat(1));
    CHECK(mean_return_time(induce(alternating(10), U("[0,1/2)"), 5)) == Rat(2));
    CHECK_THROWS_AS(mean_return_time(induce(alternating(10), U("[0,1/2)"), 1)),
                    InsufficientDataError);
  }

  TEST_CASE("averages over induced points equal base averages") {
    const auto path = golden(3000);
    Draws d(17);
    for (int t = 0; t < 60; ++t) {
      const auto A = random_rational_union(d, 3);
      if (A.measure() < Rat(1, 20)) continue;
      const auto ip = induce(path, A, 20);
      const auto C = random_rational_union(d, 3);
      const std::size_t m = 2 + d.below(19);
      CHECK(verify_xtildex(ip, path, C, m).equal);
    }
  }

  TEST_CASE("averages in the degenerate cases") {
    const auto path = golden(500);
    const auto ip = induce(path, U("[0,1/3)"), 50);
    const auto disjoint = verify_xtildex(ip, path, U("[1/2,1)"), 50);
    CHECK(disjoint.lhs == Rat(0));
    CHECK(disjoint.rhs == Rat(0));
    CHECK(disjoint.equal);
    const auto cover = verify_xtildex(ip, path, U("[0,1/2)"), 50);
    CHECK(cover.lhs == Rat(1));
    CHECK(cover.rhs == Rat(1));
    CHECK(cover.equal);
    CHECK_THROWS_AS(verify_xtildex(ip, path, U("[0,1/2)"), 1), DomainError);
  }

  TEST_CASE("transfer inequality") {
    const auto path = golden(20000);
    const auto ip = induce(path, U("[1/4,3/4)"), 5000);
    std::vector<IntervalUnion> fam;
    for (long j = 1; j <= 16; ++j) fam.push_back(IntervalUnion::single(Rat(0), Rat(j, 16)));
    for (std::size_t m : {2u, 10u, 100u, 5000u}) {
      const auto tc = transfer_check(ip, fam, m);
      CAPTURE(m);
      CHECK(tc.exact_holds);
      CHECK(tc.w == wm(ip, m));
    }
  }
}
