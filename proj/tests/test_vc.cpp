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

#include <bit>

#include "ergvc/dsl.hpp"
#include "ergvc/error.hpp"
#include "ergvc/family.hpp"
#include "ergvc/isomorphism.hpp"
#include "ergvc/vc.hpp"

using namespace ergvc;

namespace {

IntervalUnion U(const char* text) { return parse_interval_union(text); }

// Number of subsets of n sorted points cut out by at most k intervals: a
// subset qualifies when it has at most k maximal runs.
std::uint64_t k_interval_traces(unsigned n, unsigned k) {
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    unsigned runs = 0;
    for (unsigned i = 0; i < n; ++i)
      if ((s >> i & 1) && (i == 0 || !(s >> (i - 1) & 1))) ++runs;
    count += runs <= k;
  }
  return count;
}

std::vector<Rat> midpoints(unsigned n) {
  std::vector<Rat> pts;
  for (unsigned i = 0; i < n; ++i) pts.push_back(Rat(2 * i + 1, 2 * n));
  return pts;
}

}  // namespace

TEST_SUITE("vc") {
  TEST_CASE("shatter coefficient examples") {
    const std::vector<Rat> d{Rat(1, 10), Rat(2, 10), Rat(3, 10)};
    const auto half = half_interval_family(4);
    CHECK(shatter_coefficient(d, half, half.budget()) == 4);

    const auto none = explicit_family("none", std::vector<IntervalUnion>{});
    CHECK(shatter_coefficient(d, none, 0) == 0);
    const auto empty_only = explicit_family("empty", std::vector<IntervalUnion>{IntervalUnion{}});
    CHECK(shatter_coefficient(d, empty_only, 1) == 1);

    const auto two = interval_union_family(2, 3);
    CHECK(shatter_coefficient(midpoints(4), two, two.budget()) == 16);
  }

  TEST_CASE("duplicate points are rejected") {
    const auto half = half_interval_family(2);
    CHECK_THROWS_AS(shatter_coefficient({Rat(1, 3), Rat(1, 3)}, half, half.budget()),
                    DomainError);
  }

  TEST_CASE("k-interval traces match the run-count oracle") {
    for (unsigned k = 1; k <= 3; ++k) {
      const auto fam = interval_union_family(k, 3);
      for (unsigned n = 1; n <= 8; ++n) {
        CAPTURE(k);
        CAPTURE(n);
        CHECK(shatter_coefficient(midpoints(n), fam, fam.budget()) ==
              k_interval_traces(n, k));
      }
    }
  }

  TEST_CASE("known dimensions") {
    const auto half = half_interval_family(6);
    CHECK(vc_dimension(half, half.budget(), dyadic_grid(4), 4).dim == 1);

    const auto dy = dyadic_union_family(6);
    const auto r = vc_dimension(dy, dy.budget(), dyadic_grid(6), 3);
    CHECK(r.dim == 2);
    REQUIRE(r.witness.size() == 2);
    CHECK(shatter_coefficient(r.witness, dy, dy.budget()) == 4);

    for (unsigned k = 1; k <= 3; ++k) {
      const auto fam = interval_union_family(k, 4);
      const auto v = vc_dimension(fam, fam.budget(), dyadic_grid(3), 2 * k + 1);
      CAPTURE(k);
      CHECK(v.dim == 2 * k);
      CHECK_FALSE(v.lower_bound);
    }
  }

  TEST_CASE("projection and shattering on rows") {
    // Rows over 2 points: {}, {0}, {1}, {0,1}.
    const std::vector<std::uint64_t> rows{0, 1, 2, 3};
    CHECK(is_shattered(rows, 3));
    CHECK(projection_count(rows, 1) == 2);
    const std::vector<std::uint64_t> prefix{0, 1, 3};
    CHECK_FALSE(is_shattered(prefix, 3));
    CHECK(vc_dimension_rows(prefix, 2, 2).dim == 1);
  }

  TEST_CASE("Sauer bound") {
    const auto a = sauer_bound(5, 2);
    CHECK(a.exact == 16);
    CHECK(a.poly == 36);
    CHECK(sauer_bound(7, 7).exact == 128);
    const auto z = sauer_bound(10, 0);
    CHECK(z.exact == 1);
    CHECK(z.poly == 1);
    CHECK_THROWS_AS(sauer_bound(1, 2), DomainError);
  }

  TEST_CASE("join examples") {
    const auto full = join({U("[0,1/2)"), U("[1/4,3/4)")});
    CHECK(full.cells().size() == 4);
    CHECK(full.is_full());
    std::vector<IntervalUnion> cells;
    for (const auto& c : full.cells()) cells.push_back(c.set);
    for (const char* q : {"[0,1/4)", "[1/4,1/2)", "[1/2,3/4)", "[3/4,1)"})
      CHECK(std::find(cells.begin(), cells.end(), U(q)) != cells.end());

    const auto nested = join({U("[0,1/2)"), U("[0,1/4)")});
    CHECK(nested.cells().size() == 3);
    CHECK_FALSE(nested.is_full());

    const auto whole = join({IntervalUnion::whole()});
    CHECK(whole.cells().size() == 1);
    CHECK_FALSE(whole.is_full());

    CHECK_THROWS_AS(join({}), PreconditionError);
    std::vector<IntervalUnion> many(21, U("[0,1/2)"));
    CHECK_THROWS_AS(join(many), ResourceError);
  }

  TEST_CASE("join cells partition the unit interval") {
    const auto jp = join({U("[0,1/3) u [1/2,1)"), U("[1/5,3/5)"), U("[1/7,6/7)")});
    Rat total;
    for (const auto& c : jp.cells()) total += c.set.measure();
    CHECK(total == Rat(1));
    for (std::size_t i = 0; i < jp.cells().size(); ++i)
      for (std::size_t j = i + 1; j < jp.cells().size(); ++j)
        CHECK(intersect(jp.cells()[i].set, jp.cells()[j].set).empty());
  }

  TEST_CASE("full join witness, one point") {
    const auto jp = join({U("[0,1/2)"), U("[1/4,3/4)")});
    const auto x = full_join_witness(jp);
    REQUIRE(x.size() == 1);
    CHECK(x[0] == Rat(5, 8));
    const auto fam = explicit_family("pair", jp.sources());
    CHECK(shatter_coefficient(x, fam, 2) == 2);
  }

  TEST_CASE("full join witness, two points") {
    std::vector<IntervalUnion> sets;
    for (unsigned j = 1; j <= 4; ++j) sets.push_back(dyadic_digit_set(j));
    const auto jp = join(sets);
    REQUIRE(jp.is_full());
    const auto x = full_join_witness(jp);
    REQUIRE(x.size() == 2);
    for (std::uint64_t u = 0; u < 4; ++u)
      for (std::size_t i = 0; i < 2; ++i)
        CHECK(sets[u].contains(x[i]) == static_cast<bool>(u >> i & 1));
    const auto fam = explicit_family("digits", sets);
    CHECK(shatter_coefficient(x, fam, 4) == 4);
  }

  TEST_CASE("witness preconditions") {
    CHECK_THROWS_AS(full_join_witness(join({U("[0,1/2)"), U("[0,1/4)")})),
                    PreconditionError);
    CHECK_THROWS_AS(full_join_witness(join({U("[0,1/2)"), U("[1/8,3/8)"),
                                            U("[1/4,3/4)")})),
                    PreconditionError);
  }
}
