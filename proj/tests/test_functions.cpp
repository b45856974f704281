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

#include <cmath>

#include "ergvc/deviation.hpp"
#include "ergvc/dsl.hpp"
#include "ergvc/error.hpp"
#include "ergvc/functions.hpp"
#include "ergvc/random.hpp"

using namespace ergvc;

namespace {

IntervalUnion U(const char* text) { return parse_interval_union(text); }

SamplePath iid(std::uint64_t seed, std::size_t M) {
  ProcessSpec s;
  s.params = IidParams{};
  s.seed = seed;
  return generate(s, M);
}

PiecewiseFn identity_fn() { return PiecewiseFn::linear(Rat(1), Rat(0)); }

}  // namespace

TEST_SUITE("functions") {
  TEST_CASE("piecewise functions") {
    const PiecewiseFn f({Rat(0), Rat(1, 2), Rat(1)},
                        {{Rat(2), Rat(0)}, {Rat(0), Rat(1, 4)}},
                        {{Rat(1, 2), Rat(3)}});
    CHECK(f.eval(Rat(1, 4)) == Rat(1, 2));
    CHECK(f.eval(Rat(1, 2)) == Rat(3));
    CHECK(f.eval(Rat(3, 4)) == Rat(1, 4));
    CHECK(f.left_limit(1) == Rat(1));
    CHECK(f.integral() == Rat(1, 4) + Rat(1, 8));
    CHECK(f.sup_abs() == Rat(3));
    CHECK_THROWS_AS(f.eval(Rat(1)), DomainError);
    CHECK_THROWS_AS(PiecewiseFn({Rat(0), Rat(1, 2)}, {{Rat(0), Rat(0)}}), DomainError);
    CHECK_THROWS_AS(PiecewiseFn({Rat(0), Rat(1)}, {}), DomainError);

    const auto ind = PiecewiseFn::indicator(U("[1/4,1/2) u [3/4,1)"));
    CHECK(ind.eval(Rat(1, 4)) == Rat(1));
    CHECK(ind.eval(Rat(1, 2)) == Rat(0));
    CHECK(ind.integral() == Rat(1, 2));
  }

  TEST_CASE("discretization examples") {
    CHECK(discretize_value(Rat(3, 10), Rat(1), 4) == Rat(1, 2));
    CHECK(discretize_value(Rat(1), Rat(1), 4) == Rat(1));
    CHECK(discretize_value(Rat(-1), Rat(1), 4) == Rat(-1));

    const auto fbar = discretize_major(identity_fn(), Rat(1), 4);
    CHECK(fbar.eval(Rat(3, 10)) == Rat(1, 2));
    CHECK(sandwich_check(identity_fn(), fbar, Rat(1), 4).holds);

    const auto top = discretize_major(PiecewiseFn::constant(Rat(2)), Rat(2), 8);
    CHECK(top.eval(Rat(1, 3)) == Rat(2));
    const auto bottom = discretize_major(PiecewiseFn::constant(Rat(-2)), Rat(2), 8);
    CHECK(bottom.eval(Rat(1, 3)) == Rat(-2));

    CHECK_THROWS_AS(discretize_major(PiecewiseFn::constant(Rat(2)), Rat(1), 4), DomainError);
  }

  TEST_CASE("discretization sandwich on random functions") {
    Draws d(31);
    for (int t = 0; t < 40; ++t) {
      std::vector<Rat> bps{Rat(0)};
      const unsigned n = 1 + static_cast<unsigned>(d.below(4));
      for (unsigned i = 1; i < n; ++i) bps.push_back(Rat(i, n));
      bps.push_back(Rat(1));
      std::vector<LinearPiece> pieces;
      for (unsigned i = 0; i < n; ++i)
        pieces.push_back({Rat(d.between(-2, 2), 3), Rat(d.between(-2, 2), 5)});
      const PiecewiseFn f(bps, pieces);
      const Rat M = f.sup_abs() + Rat(1, 7);
      const unsigned K = 1 + static_cast<unsigned>(d.below(12));
      const auto fbar = discretize_major(f, M, K);
      const auto s = sandwich_check(f, fbar, M, K);
      CHECK(s.holds);
      CHECK(s.points_checked > 0);
      // Independent pointwise check on a grid.
      const Rat eps = Rat(2) * M / Rat(static_cast<long>(K));
      for (long j = 0; j < 64; ++j) {
        const Rat x(j, 64);
        CHECK(fbar.eval(x) - eps <= f.eval(x));
        CHECK(f.eval(x) <= fbar.eval(x));
        CHECK(fbar.eval(x) == discretize_value(f.eval(x), M, K));
      }
    }
  }

  TEST_CASE("truncation") {
    const auto f = PiecewiseFn::linear(Rat(1), Rat(0));
    const auto small = truncate_envelope(f, PiecewiseFn::constant(Rat(1)), Rat(1));
    CHECK(small.tail == Rat(0));
    for (long j = 0; j < 10; ++j) CHECK(small.fm.eval(Rat(j, 10)) == f.eval(Rat(j, 10)));

    const auto big = truncate_envelope(f, PiecewiseFn::constant(Rat(3)), Rat(2));
    CHECK(big.tail == Rat(6));
    for (long j = 0; j < 10; ++j) CHECK(big.fm.eval(Rat(j, 10)) == Rat(0));

    const auto ramp = truncate_envelope(PiecewiseFn::linear(Rat(2), Rat(0)),
                                        PiecewiseFn::linear(Rat(2), Rat(0)), Rat(1));
    CHECK(ramp.tail == Rat(3, 2));
    CHECK(ramp.fm.eval(Rat(1, 4)) == Rat(1, 2));
    CHECK(ramp.fm.eval(Rat(1, 2)) == Rat(1));
    CHECK(ramp.fm.eval(Rat(3, 4)) == Rat(0));

    CHECK_THROWS_AS(truncate_envelope(PiecewiseFn::constant(Rat(2)),
                                      PiecewiseFn::constant(Rat(1)), Rat(1)),
                    DomainError);
  }

  TEST_CASE("superlevel sets") {
    CHECK(superlevel_set(identity_fn(), Rat(1, 3)) == U("[1/3,1)"));
    CHECK(superlevel_set(PiecewiseFn::linear(Rat(-1), Rat(1)), Rat(1, 4)) == U("[0,3/4)"));
    CHECK(superlevel_set(PiecewiseFn::constant(Rat(1, 2)), Rat(1, 2)).empty());
  }

  TEST_CASE("function deviation reduces to sets") {
    const auto path = iid(8, 200);
    const auto set = U("[0,1/2)");
    for (std::size_t m : {1u, 9u, 200u}) {
      CHECK(gamma_fn({PiecewiseFn::indicator(set)}, path, m).value ==
            discrepancy(set, path, m));
      CHECK(gamma_fn({PiecewiseFn::constant(Rat(5, 7))}, path, m).value == Rat(0));
    }
    const auto g = gamma_fn({PiecewiseFn::constant(Rat(1)), identity_fn()}, path, 200);
    CHECK(g.argmax == 1);
  }

  TEST_CASE("graph lift") {
    const auto path = iid(9, 10000);
    const auto gs = graph_lift(path, 77);
    REQUIRE(gs.size() == 10000);
    CHECK(graph_frequency(PiecewiseFn::constant(Rat(1)), gs, 10000) == Rat(1));
    CHECK(graph_frequency(PiecewiseFn::constant(Rat(0)), gs, 10000) == Rat(0));
    const double half = graph_frequency(identity_fn(), gs, 10000).to_double();
    CHECK(std::abs(half - 0.5) <= 0.02);
    const auto again = graph_lift(path, 77);
    CHECK(again.ys == gs.ys);
    CHECK(graph_lift(path, 78).ys != gs.ys);
  }

  TEST_CASE("split of the graph deviation") {
    const auto path = iid(10, 2000);
    const auto gs = graph_lift(path, 5);
    const auto fns = ramp_family(8);
    const auto s = gamma_split(fns, gs, 2000);
    CHECK(s.bound_ok);
    CHECK(s.gamma <= s.gamma1 + s.gamma2);

    const std::vector<PiecewiseFn> wide{PiecewiseFn::linear(Rat(4), Rat(-2))};
    const auto r = gamma_split(wide, gs, 2000);
    CHECK(r.envelope == Rat(2));
    CHECK(r.bound_ok);
    CHECK_THROWS_AS(gamma_split(wide, gs, 2000, false), DomainError);

    const auto rows = graph_rows(fns, gs, 12);
    CHECK(rows.size() == fns.size());
    CHECK_THROWS_AS(graph_rows(fns, gs, 65), ResourceError);
  }

  TEST_CASE("ramp family") {
    const auto r = ramp_family(4);
    REQUIRE(r.size() == 4);
    CHECK(r[0].eval(Rat(1, 8)) == Rat(1, 2));
    CHECK(r[0].eval(Rat(1, 2)) == Rat(1));
    CHECK(r[3].eval(Rat(1, 2)) == Rat(1, 2));
    CHECK(r[3].integral() == Rat(1, 2));
  }

  TEST_CASE("uniform deviation bound") {
    CHECK(lm_bound(100, 2) == doctest::Approx(0.630).epsilon(0.002));
    CHECK(lm_bound(100, 2) == doctest::Approx(2 * std::sqrt(std::log(2.0 * 101 * 101) / 100)));
    CHECK(lm_bound(50, 0) == doctest::Approx(2 * std::sqrt(std::log(2.0) / 50)));
    for (std::uint64_t m : {10u, 100u, 1000u, 100000u}) CHECK(lm_bound(4 * m, 2) < lm_bound(m, 2));
    CHECK_THROWS_AS(lm_bound(0, 1), DomainError);
  }
}
