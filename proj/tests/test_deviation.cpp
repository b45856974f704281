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
#include "ergvc/dsl.hpp"
#include "ergvc/error.hpp"
#include "ergvc/oracle.hpp"
#include "ergvc/vc.hpp"

using namespace ergvc;

namespace {

IntervalUnion U(const char* text) { return parse_interval_union(text); }

SamplePath approx_path(const std::vector<Rat>& xs) {
  std::vector<Dyadic> pts;
  for (const auto& x : xs) pts.push_back(Dyadic::floor_of(x, kMaxPrecision));
  return SamplePath::from_points(std::move(pts));
}

SamplePath tenths() { return approx_path({Rat(1, 10), Rat(6, 10), Rat(3, 10)}); }

SamplePath iid(std::uint64_t seed, std::size_t M) {
  ProcessSpec s;
  s.params = IidParams{};
  s.seed = seed;
  return generate(s, M);
}

}  // namespace

TEST_SUITE("deviation") {
  TEST_CASE("discrepancy examples") {
    const auto p = tenths();
    CHECK(discrepancy(U("[0,1/2)"), p, 3) == Rat(1, 6));
    CHECK(discrepancy(IntervalUnion::whole(), p, 3) == Rat(0));
    CHECK(discrepancy(IntervalUnion{}, p, 3) == Rat(0));
    CHECK(hit_count(Member{U("[0,1/2)"), std::nullopt}, p, 2) == 1);
    CHECK_THROWS_AS(discrepancy(U("[0,1/2)"), p, 4), DomainError);
    CHECK_THROWS_AS(discrepancy(U("[0,1/2)"), p, 0), DomainError);
  }

  TEST_CASE("gamma examples") {
    const auto p = tenths();
    const auto single = explicit_family("half", std::vector<IntervalUnion>{U("[0,1/2)")});
    CHECK(gamma_m(single, 1, p, 3).value == Rat(1, 6));

    const auto balanced = SamplePath::from_rats({Rat(1, 4), Rat(3, 4)});
    CHECK(gamma_m(dyadic_family(1), 2, balanced, 2).value == Rat(0));
    CHECK_THROWS_AS(gamma_m(dyadic_family(1), 3, balanced, 2), DomainError);
  }

  TEST_CASE("gamma grid agrees with pointwise gamma") {
    const auto p = iid(3, 300);
    const auto fam = dyadic_union_family(4);
    const std::vector<std::size_t> grid{1, 7, 50, 300};
    const auto g = gamma_m_grid(fam, fam.budget(), p, grid, 2);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto single = gamma_m(fam, fam.budget(), p, grid[i]);
      CHECK(g[i].value == single.value);
      CHECK(g[i].argmax == single.argmax);
      CHECK(discrepancy(fam.enumerate(g[i].argmax), p, grid[i]) == g[i].value);
    }
    CHECK_THROWS_AS(gamma_m_grid(fam, 4, p, {5, 5}), DomainError);
  }

  TEST_CASE("adaptive gamma reaches the full family") {
    const auto p = iid(4, 100);
    const auto fam = dyadic_union_family(3);
    const auto a = gamma_m_adaptive(fam, p, 100, 2);
    CHECK(a.gamma.value <= gamma_m(fam, fam.budget(), p, 100).value);
    CHECK(a.gamma.budget <= fam.budget());
  }

  TEST_CASE("ks examples") {
    CHECK(ks_exact(SamplePath::from_rats({Rat(1, 2)}), 1) == Rat(1, 2));
    CHECK(ks_exact(SamplePath::from_rats({Rat(1, 4), Rat(3, 4)}), 2) == Rat(1, 4));
  }

  TEST_CASE("ks matches half-interval gamma") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto p = SamplePath::from_rats([&] {
        std::vector<Rat> xs;
        for (std::size_t i = 0; i < 9; ++i)
          xs.push_back(Rat(static_cast<long>(counter_draw(seed, Stream::Test, i) % 64), 64));
        return xs;
      }());
      // Half-intervals of order 7 reach within 1/128 of every sample from
      // above and hit every sample exactly from below.
      const auto half = half_interval_family(7);
      const Rat ks = ks_exact(p, 9);
      const Rat g = gamma_m(half, half.budget(), p, 9).value;
      CHECK(g <= ks);
      CHECK(ks - g <= Rat(1, 128));
    }
  }

  TEST_CASE("k-interval supremum examples") {
    const auto p = SamplePath::from_rats({Rat(1, 4), Rat(3, 4)});
    // [1/4, 3/4 + e) holds both points with length just over 1/2.
    const auto one = gamma_k_intervals_exact(p, 2, 1);
    CHECK(one.value == Rat(1, 2));
    CHECK(one.attained_in_limit);
    CHECK(gamma_k_intervals_brute(p, 2, 1) == Rat(1, 2));
    CHECK(ks_exact(p, 2) == Rat(1, 4));

    const auto q = tenths();
    const auto cover = gamma_k_intervals_exact(q, 3, 3);
    CHECK(cover.value == Rat(1));
    CHECK(cover.attained_in_limit);
    CHECK(gamma_k_intervals_exact(q, 3, 5).value == Rat(1));
  }

  TEST_CASE("k-interval cost cap and arguments") {
    const auto p = iid(1, 100);
    CHECK_THROWS_AS(gamma_k_intervals_exact(p, 100, 3, 200), ResourceError);
    CHECK_THROWS_AS(gamma_k_intervals_exact(p, 100, 0), DomainError);
  }

  TEST_CASE("k-interval supremum dominates the enumerated family") {
    const auto p = iid(2, 40);
    for (unsigned k = 1; k <= 2; ++k) {
      const auto fam = interval_union_family(k, 4);
      CHECK(gamma_k_intervals_exact(p, 40, k).value >=
            gamma_m(fam, fam.budget(), p, 40).value);
    }
  }

  TEST_CASE("discrepancy family examples") {
    const auto p = tenths();
    const auto whole = join({IntervalUnion::whole()});
    const auto h = discrepancy_family(whole, U("[0,1/2)"), p, 3, Rat(1, 4));
    CHECK(h.cells == std::vector<std::size_t>{0});
    CHECK(h.measure == Rat(1));

    const auto none = discrepancy_family(whole, IntervalUnion{}, p, 3, Rat(1, 4));
    CHECK(none.cells.empty());
    CHECK(none.measure == Rat(0));

    const auto balanced = SamplePath::from_rats({Rat(1, 8), Rat(3, 8), Rat(5, 8), Rat(7, 8)});
    const auto jp = join({U("[0,1/2)")});
    const auto empty = discrepancy_family(jp, U("[0,1/4) u [1/2,3/4)"), balanced, 4, Rat(1, 2));
    CHECK(empty.cells.empty());

    CHECK_THROWS_AS(discrepancy_family(whole, U("[0,1/2)"), p, 3, Rat(0)), DomainError);
  }

  TEST_CASE("median") {
    CHECK(median({Rat(3), Rat(1), Rat(2)}) == Rat(2));
    CHECK(median({Rat(4), Rat(1), Rat(2), Rat(3)}) == Rat(5, 2));
    CHECK_THROWS_AS(median({}), DomainError);
  }

  TEST_CASE("deviation trace and csv") {
    ProcessSpec s;
    s.params = IidParams{};
    const auto fam = dyadic_family(2);
    const auto b = deviation_trace(fam, 4, s, {10, 100}, {1, 2, 3}, 2);
    REQUIRE(b.per_seed.size() == 3);
    CHECK(b.median.size() == 2);
    const auto one = deviation_trace(fam, 4, s, {10, 100}, {1, 2, 3}, 1);
    CHECK(trace_csv(b) == trace_csv(one));
    const std::string csv = trace_csv(b);
    CHECK(csv.rfind("seed,m,gamma_num,gamma_den,gamma_f64,argmax_member\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
    CHECK(median_csv(b).rfind("m,gamma_num,gamma_den,gamma_f64\n", 0) == 0);
  }

  TEST_CASE("empirical convergence for iid samples") {
    const auto fam = dyadic_union_family(4);
    ProcessSpec s;
    s.params = IidParams{};
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 9; ++i) seeds.push_back(100 + i);
    const auto b = deviation_trace(fam, fam.budget(), s, {100, 10000}, seeds);
    CHECK(b.median[1] < b.median[0]);
    CHECK(b.median[1].to_double() < 0.05);
  }
}
