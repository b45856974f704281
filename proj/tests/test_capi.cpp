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

#include <memory>
#include <string>

#include <json.hpp>

#include "ergvc.h"

namespace {

struct StringFree {
  void operator()(char* s) const { ergvc_string_free(s); }
};
using CString = std::unique_ptr<char, StringFree>;

std::string take(char* s) { return std::string(CString(s).get()); }

ergvc_union* parse(const char* text) {
  ergvc_union* u = nullptr;
  REQUIRE(ergvc_union_parse(text, &u) == ERGVC_OK);
  return u;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version") { CHECK(std::string(ergvc_version()) == "0.1.0"); }

  TEST_CASE("union round trip") {
    ergvc_union* a = parse("[0,1/2) u [1/4,3/4)");
    char* text = nullptr;
    REQUIRE(ergvc_union_print(a, &text) == ERGVC_OK);
    CHECK(take(text) == "[0,3/4)");
    char* m = nullptr;
    REQUIRE(ergvc_union_measure(a, &m) == ERGVC_OK);
    CHECK(take(m) == "3/4");
    int in = -1;
    REQUIRE(ergvc_union_contains(a, "3/4", &in) == ERGVC_OK);
    CHECK(in == 0);
    REQUIRE(ergvc_union_contains(a, "1/3", &in) == ERGVC_OK);
    CHECK(in == 1);

    ergvc_union* b = parse("[1/2,1)");
    ergvc_union* c = nullptr;
    REQUIRE(ergvc_union_op(ERGVC_INTERSECT, a, b, &c) == ERGVC_OK);
    REQUIRE(ergvc_union_print(c, &text) == ERGVC_OK);
    CHECK(take(text) == "[1/2,3/4)");
    ergvc_union* d = nullptr;
    REQUIRE(ergvc_union_complement(c, &d) == ERGVC_OK);
    REQUIRE(ergvc_union_print(d, &text) == ERGVC_OK);
    CHECK(take(text) == "[0,1/2) u [3/4,1)");
    ergvc_union_free(a);
    ergvc_union_free(b);
    ergvc_union_free(c);
    ergvc_union_free(d);
  }

  TEST_CASE("error codes") {
    ergvc_union* u = nullptr;
    CHECK(ergvc_union_parse("[0,1/2", &u) == ERGVC_ERR_SYNTAX);
    CHECK(u == nullptr);
    CHECK(std::string(ergvc_last_error()).find("position") != std::string::npos);
    CHECK(ergvc_union_parse("[1/2,1/4)", &u) == ERGVC_ERR_DOMAIN);
    CHECK(ergvc_union_parse(nullptr, &u) == ERGVC_ERR_ARGUMENT);
    CHECK(ergvc_union_parse("[0,1)", nullptr) == ERGVC_ERR_ARGUMENT);

    u = parse("[0,1)");
    CHECK(std::string(ergvc_last_error()).empty());
    int in = 0;
    CHECK(ergvc_union_contains(u, "3/2", &in) == ERGVC_ERR_DOMAIN);
    ergvc_union_free(u);

    ergvc_family* f = nullptr;
    CHECK(ergvc_family_from_json("{\"name\":\"dyadic\",\"ordr\":2}", 128, &f) == ERGVC_ERR_CONFIG);
    CHECK(std::string(ergvc_last_error_pointer()) == "/ordr");
    CHECK(ergvc_family_from_json("{not json", 128, &f) == ERGVC_ERR_CONFIG);
    CHECK(ergvc_family_from_json("{\"name\":\"dyadic-level\",\"order\":20}", 128, &f) ==
          ERGVC_OK);
    ergvc_family_free(f);
  }

  TEST_CASE("families and paths") {
    ergvc_family* f = nullptr;
    REQUIRE(ergvc_family_from_json("{\"name\":\"half-intervals\",\"order\":4}", 128, &f) ==
            ERGVC_OK);
    const size_t budget = ergvc_family_budget(f);
    CHECK(budget > 0);
    const char* pts[] = {"1/10", "2/10", "3/10"};
    uint64_t s = 0;
    REQUIRE(ergvc_shatter_coefficient(f, budget, pts, 3, &s) == ERGVC_OK);
    CHECK(s == 4);
    unsigned dim = 0;
    int lower = 1;
    REQUIRE(ergvc_vc_dimension(f, budget, 3, 3, &dim, &lower) == ERGVC_OK);
    CHECK(dim == 1);
    CHECK(lower == 0);

    ergvc_path* p = nullptr;
    REQUIRE(ergvc_path_generate("{\"kind\":\"iid\"}", 5, 128, 1000, &p) == ERGVC_OK);
    CHECK(ergvc_path_size(p) == 1000);
    char* hex = nullptr;
    REQUIRE(ergvc_path_point(p, 0, &hex) == ERGVC_OK);
    CHECK(take(hex).rfind("0x", 0) == 0);
    CHECK(ergvc_path_point(p, 1000, &hex) == ERGVC_ERR_DOMAIN);

    char* value = nullptr;
    size_t argmax = 0;
    REQUIRE(ergvc_gamma(f, budget, p, 1000, &value, &argmax) == ERGVC_OK);
    const std::string g = take(value);
    char* ks = nullptr;
    REQUIRE(ergvc_ks(p, 1000, &ks) == ERGVC_OK);
    CHECK(!take(ks).empty());
    CHECK(g.find('/') != std::string::npos);
    ergvc_path_free(p);
    ergvc_family_free(f);
  }

  TEST_CASE("translations") {
    ergvc_union* c = parse("[1/2,1)");
    const ergvc_union* sets[] = {c};
    ergvc_phi* phi = nullptr;
    REQUIRE(ergvc_phi_build(sets, 1, &phi) == ERGVC_OK);
    char* y = nullptr;
    REQUIRE(ergvc_phi_apply(phi, "3/4", &y) == ERGVC_OK);
    CHECK(take(y) == "1/4");
    char* js = nullptr;
    REQUIRE(ergvc_phi_json(phi, &js) == ERGVC_OK);
    const auto doc = nlohmann::json::parse(take(js));
    CHECK(doc.contains("pieces"));
    ergvc_phi_free(phi);
    ergvc_union_free(c);
  }

  TEST_CASE("runs and reports") {
    ergvc_report* r = nullptr;
    REQUIRE(ergvc_run("vcdim", "{\"family\":{\"name\":\"dyadic\",\"order\":4}}", 1, &r) == ERGVC_OK);
    CHECK(ergvc_report_exit_code(r) == 0);
    const auto doc = nlohmann::json::parse(ergvc_report_json(r));
    CHECK(doc["results"]["dim"] == 2);
    CHECK(std::string(ergvc_report_text(r)) == "dim 2\n");
    ergvc_report_free(r);

    REQUIRE(ergvc_run("converge", "{\"family\":{\"name\":\"empty\"},\"m\":10,\"seeds\":2}", 2, &r) ==
            ERGVC_OK);
    REQUIRE(ergvc_report_file_count(r) == 2);
    CHECK(std::string(ergvc_report_file_name(r, 0)) == "trace.csv");
    CHECK(std::string(ergvc_report_file_content(r, 0)).rfind("seed,m,", 0) == 0);
    CHECK(ergvc_report_file_name(r, 5) == nullptr);
    ergvc_report_free(r);

    r = nullptr;
    CHECK(ergvc_run("vcdim", "{\"family\":{\"name\":\"dyadic\",\"order\":\"x\"}}", 1, &r) ==
          ERGVC_ERR_CONFIG);
    CHECK(r == nullptr);
    CHECK(std::string(ergvc_last_error_pointer()) == "/family/order");
    CHECK(ergvc_run("converge", "{\"family\":{\"name\":\"k-intervals\",\"k\":3,\"order\":6}}", 1,
                    &r) == ERGVC_ERR_RESOURCE);
    CHECK(ergvc_run("frobnicate", "{}", 1, &r) != ERGVC_OK);
  }
}
