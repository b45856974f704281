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
#include "ergvc/family.hpp"
#include "ergvc/interval_set.hpp"
#include "ergvc/random.hpp"

using namespace ergvc;

namespace {

IntervalUnion U(const char* text) { return parse_interval_union(text); }

}  // namespace

TEST_SUITE("interval-sets") {
  TEST_CASE("normalize merges overlapping and touching parts") {
    const auto a = IntervalUnion::normalize({{Rat(0), Rat(1, 2)}, {Rat(1, 4), Rat(3, 4)}});
    CHECK(a.str() == "[0,3/4)");
    CHECK(a.measure() == Rat(3, 4));

    const auto b = IntervalUnion::normalize({{Rat(1, 2), Rat(1)}, {Rat(0), Rat(1, 2)}});
    CHECK(b == IntervalUnion::whole());

    const auto c = IntervalUnion::normalize({});
    CHECK(c.empty());
    CHECK(c.measure() == Rat(0));
    CHECK(c.str() == "{}");
  }

  TEST_CASE("endpoints outside the unit interval are rejected") {
    CHECK_THROWS_AS(IntervalUnion::single(Rat(-1, 2), Rat(1, 2)), DomainError);
    CHECK_THROWS_AS(IntervalUnion::single(Rat(1, 2), Rat(3, 2)), DomainError);
    CHECK_THROWS_AS(IntervalUnion::single(Rat(1, 2), Rat(1, 2)), DomainError);
  }

  TEST_CASE("set algebra") {
    CHECK(intersect(U("[0,1/2)"), U("[1/4,3/4)")) == U("[1/4,1/2)"));
    CHECK(complement(U("[1/4,1/2)")) == U("[0,1/4) u [1/2,1)"));
    const auto a = U("[0,1/3) u [1/2,2/3)");
    CHECK(symmetric_difference(a, a).empty());
    CHECK(set_algebra(a, a, SetOp::SymmetricDifference).empty());
    CHECK(set_algebra(a, {}, SetOp::Complement) == complement(a));
    CHECK(unite(U("[0,1/4)"), U("[1/4,1/2)")) == U("[0,1/2)"));
    CHECK(difference(U("[0,1)"), U("[1/4,1/2)")) == U("[0,1/4) u [1/2,1)"));
    CHECK(complement(IntervalUnion{}) == IntervalUnion::whole());
  }

  TEST_CASE("algebra identities on random unions") {
    Draws d(7);
    for (int t = 0; t < 200; ++t) {
      const auto a = random_rational_union(d, 4);
      const auto b = random_rational_union(d, 4);
      CHECK(intersect(a, b).measure() + unite(a, b).measure() ==
            a.measure() + b.measure());
      CHECK(complement(complement(a)) == a);
      CHECK(symmetric_difference(a, b) ==
            unite(difference(a, b), difference(b, a)));
      CHECK(intersect(a, b).subset_of(a));
      // Membership agrees pointwise on the endpoints and midpoints.
      for (const auto& x : unite(a, b).endpoints()) {
        if (x >= Rat(1)) continue;
        CHECK(intersect(a, b).contains(x) == (a.contains(x) && b.contains(x)));
        CHECK(unite(a, b).contains(x) == (a.contains(x) || b.contains(x)));
      }
    }
  }

  TEST_CASE("dyadic point membership matches rational membership") {
    const auto a = U("[1/3,2/3)");
    CHECK(a.contains(*Dyadic::exact(Rat(1, 2))));
    CHECK_FALSE(a.contains(Dyadic::floor_of(Rat(1, 3), 128)));
    CHECK(a.contains(Dyadic::floor_of(Rat(1, 3), 128) + ulp(128)));
    CHECK_FALSE(a.contains(Dyadic::floor_of(Rat(2, 3), 128) + ulp(128)));
    CHECK(a.measure_below(Rat(1, 2)) == Rat(1, 6));
  }

  TEST_CASE("dyadic family") {
    const auto d1 = dyadic_family(1);
    REQUIRE(d1.budget() == 2);
    CHECK(d1.enumerate(0).body == U("[0,1/2)"));
    CHECK(d1.enumerate(1).body == U("[1/2,1)"));
    const auto d2 = dyadic_family(2);
    REQUIRE(d2.budget() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(d2.enumerate(i).measure() == Rat(1, 4));
    CHECK_THROWS_AS(dyadic_family(30, 1000), ResourceError);
  }

  TEST_CASE("boundary points") {
    CHECK(boundary_points(dyadic_family(1), 2) ==
          std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
    CHECK(boundary_points(explicit_family("empty", std::vector<IntervalUnion>{}), 0).empty());
    const auto one = explicit_family("one", std::vector<IntervalUnion>{U("[0,1/4) u [1/2,3/4)")});
    CHECK(boundary_points(one, 1) ==
          std::vector<Rat>{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4)});
  }
}

TEST_SUITE("dsl") {
  TEST_CASE("parse examples") {
    CHECK(U("[0,1/2)").parts() == std::vector<Interval>{{Rat(0), Rat(1, 2)}});
    const auto two = U("[0,1/4) u [1/2,3/4)");
    CHECK(two.parts().size() == 2);
    CHECK(two.measure() == Rat(1, 2));
    CHECK(U("{}").empty());
    CHECK(U("  [ 1/3 , 1 )  ").measure() == Rat(2, 3));
  }

  TEST_CASE("inverted bounds are a semantic error") {
    CHECK_THROWS_AS(U("[1/2,1/4)"), DomainError);
    CHECK_THROWS_AS(U("[0,3/2)"), DomainError);
  }

  TEST_CASE("syntax errors carry a position") {
    try {
      U("[0,1/2) u (1/2,1)");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.position() == 10);
    }
    CHECK_THROWS_AS(U("[0,1/2"), SyntaxError);
    CHECK_THROWS_AS(U("[0,1/0)"), SyntaxError);
    CHECK_THROWS_AS(U("[0,1/2) [1/2,1)"), SyntaxError);
  }

  TEST_CASE("print and parse round trip") {
    Draws d(11);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_rational_union(d, 5);
      CHECK(U(print_interval_union(a).c_str()) == a);
    }
  }
}
