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
#include "ergvc/process.hpp"

using namespace ergvc;

namespace {

ProcessSpec rotation(const Rat& x0, unsigned precision = kMaxPrecision) {
  ProcessSpec s;
  s.params = RotationParams{golden_alpha(), x0};
  s.precision = precision;
  return s;
}

}  // namespace

TEST_SUITE("process") {
  TEST_CASE("counter draws are deterministic and stream separated") {
    CHECK(counter_draw(1, Stream::Iid, 5) == counter_draw(1, Stream::Iid, 5));
    CHECK(counter_draw(1, Stream::Iid, 5) != counter_draw(1, Stream::Iid, 6));
    CHECK(counter_draw(1, Stream::Iid, 5) != counter_draw(1, Stream::GraphLift, 5));
    CHECK(counter_draw(1, Stream::Iid, 5) != counter_draw(2, Stream::Iid, 5));
  }

  TEST_CASE("golden rotation, three steps") {
    const auto path = generate(rotation(Rat(0)), 3);
    REQUIRE(path.size() == 3);
    const Dyadic a = rotation_step(golden_alpha(), kMaxPrecision);
    CHECK(path[0] == a);
    CHECK(path[1] == a + a);
    CHECK(path[2] == a + a + a);
    CHECK(path[0] != path[1]);
    CHECK(path[1] != path[2]);
    CHECK(path[0] != path[2]);
    CHECK(path[0].to_double() == doctest::Approx(0.6180339887));
    CHECK(path[1].to_double() == doctest::Approx(0.2360679775));
  }

  TEST_CASE("rotation step is odd at every precision") {
    for (unsigned p : {64u, 80u, 100u, 128u}) {
      const Dyadic s = rotation_step(golden_alpha(), p);
      CHECK(static_cast<int>(s.bits() >> (kMaxPrecision - p) & 1) == 1);
      CHECK(static_cast<std::uint64_t>(s.bits() & ((u128{1} << (kMaxPrecision - p)) - 1)) == 0);
    }
  }

  TEST_CASE("doubling shifts the bit stream") {
    ProcessSpec s;
    s.params = DoublingParams{{0, 1, 0, 1, 1}};
    s.seed = 3;
    const auto path = generate(s, 6);
    CHECK(static_cast<int>(path[0].bits() >> 124) == 0b1011);
    for (std::size_t i = 1; i < path.size(); ++i) {
      const u128 shifted = path[i - 1].bits() << 1;
      CHECK(static_cast<bool>((path[i].bits() >> 1) == (shifted >> 1)));
    }
    CHECK(static_cast<int>(path[1].bits() >> 125) == 0b011);
  }

  TEST_CASE("doubling at reduced precision keeps low bits clear") {
    ProcessSpec s;
    s.params = DoublingParams{};
    s.precision = 64;
    s.seed = 9;
    const auto path = generate(s, 50);
    for (const auto& p : path.points()) CHECK(static_cast<std::uint64_t>(p.bits()) == 0);
  }

  TEST_CASE("iid paths are reproducible") {
    ProcessSpec s;
    s.params = IidParams{};
    s.seed = 42;
    const auto a = generate(s, 200);
    const auto b = generate(s, 200);
    CHECK(std::equal(a.points().begin(), a.points().end(), b.points().begin()));
    const auto prefix = generate(s, 50);
    CHECK(std::equal(prefix.points().begin(), prefix.points().end(), a.points().begin()));
    s.seed = 43;
    CHECK(generate(s, 1)[0] != a[0]);
  }

  TEST_CASE("points on a boundary are jittered") {
    ProcessSpec s = rotation(Rat(0));
    const auto plain = generate(s, 5);
    const std::vector<Rat> boundary{plain[2].to_rat()};
    const auto moved = generate(s, 5, boundary);
    REQUIRE(moved.jittered() == std::vector<std::size_t>{2});
    CHECK(moved[2] == plain[2] + ulp(kMaxPrecision));
  }

  TEST_CASE("invalid specs") {
    ProcessSpec s;
    s.params = IidParams{};
    CHECK_THROWS_AS(generate(s, 0), DomainError);
    s.precision = 32;
    CHECK_THROWS_AS(generate(s, 1), DomainError);
    ProcessSpec d;
    d.params = DoublingParams{{0, 2}};
    CHECK_THROWS_AS(generate(d, 1), DomainError);
    ProcessSpec m;
    m.params = MarkovParams{{{Rat(1)}}, {parse_interval_union("[0,1/2)")}};
    CHECK_THROWS_AS(generate(m, 1), DomainError);
  }

  TEST_CASE("markov chain stays inside its cells") {
    ProcessSpec s;
    MarkovParams p;
    p.cells = {parse_interval_union("[0,1/2)"), parse_interval_union("[1/2,1)")};
    p.matrix = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    s.params = p;
    s.seed = 5;
    const auto path = generate(s, 40);
    for (std::size_t i = 1; i < path.size(); ++i)
      CHECK(p.cells[0].contains(path[i]) != p.cells[0].contains(path[i - 1]));
  }

  TEST_CASE("rotation empirical measure on a half") {
    const auto path = generate(rotation(Rat(0)), 10000);
    CHECK(discrepancy(parse_interval_union("[0,1/2)"), path, 10000) <= Rat(1, 1000));
  }

  TEST_CASE("trajectory family") {
    const Dyadic alpha = golden_alpha();
    const auto fam = trajectory_family(alpha, Rat(0), 1, 3);
    const auto atoms = trajectory_atoms(fam, 0, 1);
    REQUIRE(atoms.size() == 3);
    const Dyadic step = rotation_step(alpha, kMaxPrecision);
    const Dyadic x0 = Dyadic::floor_of(Rat(0), kMaxPrecision);
    CHECK(std::find(atoms.begin(), atoms.end(), x0) != atoms.end());
    CHECK(std::find(atoms.begin(), atoms.end(), x0 + step) != atoms.end());
    CHECK(std::find(atoms.begin(), atoms.end(), x0 - step) != atoms.end());
    CHECK(fam.enumerate(0).measure() == Rat(0));

    // Distinct orbits have disjoint atom sets.
    const auto other = trajectory_atoms(fam, 1, 50);
    const auto mine = trajectory_atoms(fam, 0, 50);
    for (const auto& a : other)
      CHECK(std::find(mine.begin(), mine.end(), a) == mine.end());

    const auto s = orbit_structure(fam, 3);
    CHECK(s.disjoint_or_equal);
    CHECK(s.distinct_members == 3);
    REQUIRE(s.dimension.has_value());
    CHECK(*s.dimension == 1);
  }

  TEST_CASE("orbit membership follows the rotation") {
    const Dyadic alpha = golden_alpha();
    const OrbitSegment orbit(Dyadic::floor_of(Rat(1, 3), 128), rotation_step(alpha, 128),
                             128, 1000);
    CHECK(orbit.step_of(orbit.at(17)) == 17);
    CHECK(orbit.step_of(orbit.at(-999)) == -999);
    CHECK_FALSE(orbit.contains(orbit.at(1001)));
    CHECK_FALSE(orbit.contains(orbit.at(0) + ulp(128)));
  }

  TEST_CASE("orbit family sees its own path") {
    const auto path = generate(rotation(Rat(0)), 500);
    const auto fam = trajectory_family(golden_alpha(), Rat(0), 64, 1);
    for (std::size_t m : {1u, 10u, 500u}) CHECK(gamma_m(fam, 1, path, m).value == Rat(1));
  }
}
