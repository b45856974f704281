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

#include <json.hpp>

#include "ergvc/config.hpp"
#include "ergvc/error.hpp"
#include "ergvc/harness.hpp"
#include "ergvc/json_io.hpp"

using namespace ergvc;
using nlohmann::json;

namespace {

std::string config_pointer(std::string_view sub, const json& cfg) {
  try {
    run(sub, cfg, 1);
  } catch (const ConfigError& e) {
    return e.pointer();
  }
  return "<no error>";
}

const RunFile* find_file(const RunReport& r, const std::string& name) {
  for (const auto& f : r.files)
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("dyadic family has dimension two") {
    const auto r = run("vcdim", json{{"family", {{"name", "dyadic"}, {"order", 4}}}}, 1);
    CHECK(r.exit_code == 0);
    CHECK(r.json["results"]["dim"] == 2);
    CHECK(r.text == "dim 2\n");
    CHECK(r.json["version"] == kVersion);
  }

  TEST_CASE("orbit counterexample keeps deviation at one") {
    const auto r = run("counterexample", json{{"window", 64}, {"m", 1000}}, 1);
    CHECK(r.json["results"]["all_gamma_one"] == true);
    const RunFile* trace = find_file(r, "trace.csv");
    REQUIRE(trace != nullptr);
    CHECK(trace->content.find(",1,1,1,") != std::string::npos);
    CHECK(trace->content.find(",0,") == std::string::npos);
  }

  TEST_CASE("empty family converges trivially") {
    const auto r = run("converge", json{{"family", {{"name", "empty"}}}, {"m", 100}, {"seeds", 3}}, 1);
    const RunFile* trace = find_file(r, "trace.csv");
    REQUIRE(trace != nullptr);
    std::istringstream in(trace->content);
    std::string line;
    std::getline(in, line);
    CHECK(line == "seed,m,gamma_num,gamma_den,gamma_f64,argmax_member");
    int rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      CHECK(line.find(",0,1,0,") != std::string::npos);
    }
    CHECK(rows == 3 * 7);
  }

  TEST_CASE("shatter and join witness") {
    const auto s = run("shatter",
                       json{{"family", {{"name", "half-intervals"}, {"order", 4}}},
                            {"points", {"1/10", "2/10", "3/10"}}},
                       1);
    CHECK(s.json["results"]["shatter_coefficient"] == 4);
    CHECK(s.json["results"]["vc_dimension"] == 1);
    CHECK(s.json["results"]["within_sauer_bound"] == true);

    for (int k = 1; k <= 3; ++k) {
      const auto j = run("join-witness", json{{"k", k}, {"permutation_seed", 7}}, 1);
      CHECK(j.json["results"]["shattered"] == true);
      CHECK(j.json["results"]["k"] == k);
    }
  }

  TEST_CASE("isomorphism, induced and graph-lift run") {
    const auto iso = run("isomorphism",
                         json{{"sets", {"[1/2,1)", "[1/4,3/4)"}}, {"probes", 20}, {"doubling", 6}}, 1);
    CHECK(iso.json["results"]["measure_deviation"]["num"] == "0");
    CHECK(iso.json["results"]["doubling"]["within_bound"] == true);
    const PiecewiseTranslation back =
        translation_from_json(ConfigNode(iso.json["results"]["map"], "/map"));
    CHECK(back.apply(Rat(3, 4)) == Rat(1, 4));

    const auto ind = run("induced", json{{"A", "[0,1/3)"}, {"C", {"[0,1/6)", "[1/2,1)"}}, {"hits", 500}}, 1);
    CHECK(ind.json["results"]["xtildex_all_equal"] == true);
    CHECK(ind.json["results"]["transfer"]["exact_holds"] == true);

    const auto g = run("graph-lift", json{{"m", 500}, {"seeds", 4}, {"ramps", 5}}, 2);
    CHECK(g.json["results"]["split_bound_all"] == true);
    REQUIRE(find_file(g, "graph_lift.csv") != nullptr);
  }

  TEST_CASE("config errors carry JSON pointers") {
    CHECK(config_pointer("vcdim", json{{"family", {{"name", "dyadic"}, {"ordr", 4}}}}) ==
          "/family/ordr");
    CHECK(config_pointer("vcdim", json{{"family", {{"name", "bogus"}}}}) == "/family/name");
    CHECK(config_pointer("vcdim", json::object()) == "/family");
    CHECK(config_pointer("converge", json{{"family", {{"name", "empty"}}}, {"m_grid", {10, 5}}}) ==
          "/m_grid/1");
    CHECK(config_pointer("converge", json{{"family", {{"name", "empty"}}}, {"precision", 32}}) ==
          "/precision");
    CHECK(config_pointer("shatter", json{{"family", {{"name", "empty"}}}, {"points", {"1/2", "x"}}}) ==
          "/points/1");
    CHECK(config_pointer("induced", json{{"A", "[0,1/2"}}) == "/A");
    CHECK(config_pointer("vcdim", json::array()) == "/");
    CHECK(config_pointer("suite", json{{"criteria", {11}}}) == "/criteria/0");
  }

  TEST_CASE("json pointer tokens are escaped") {
    CHECK(pointer_token("a/b~c") == "a~1b~0c");
  }

  TEST_CASE("resource caps") {
    CHECK_THROWS_AS(run("converge", json{{"family", {{"name", "k-intervals"}, {"k", 3}, {"order", 6}}}}, 1),
                    ResourceError);
    CHECK_THROWS_AS(run("induced", json{{"A", "[0,1/1000000)"}, {"hits", 100000}}, 1),
                    ResourceError);
  }

  TEST_CASE("results do not depend on the worker count") {
    const json cfg{{"family", {{"name", "dyadic"}, {"order", 3}}}, {"m", 500}, {"seeds", 6}};
    const auto one = run("converge", cfg, 1);
    const auto four = run("converge", cfg, 4);
    CHECK(find_file(one, "trace.csv")->content == find_file(four, "trace.csv")->content);
    CHECK(one.json["results"] == four.json["results"]);
  }

  TEST_CASE("unknown subcommand") {
    CHECK_THROWS_AS(run("nope", json::object(), 1), DomainError);
    CHECK(subcommands().size() == 9);
  }
}
