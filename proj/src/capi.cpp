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

#include "ergvc.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ergvc/deviation.hpp"
#include "ergvc/dsl.hpp"
#include "ergvc/error.hpp"
#include "ergvc/harness.hpp"
#include "ergvc/isomorphism.hpp"
#include "ergvc/json_io.hpp"
#include "ergvc/parallel.hpp"
#include "ergvc/vc.hpp"

struct ergvc_union {
  ergvc::IntervalUnion value;
};
struct ergvc_family {
  ergvc::SetFamily value;
};
struct ergvc_path {
  ergvc::SamplePath value;
};
struct ergvc_phi {
  ergvc::PiecewiseTranslation value;
};
struct ergvc_report {
  ergvc::RunReport value;
  std::string json;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_pointer;

ergvc_status status_of(ergvc::ErrorKind kind) {
  switch (kind) {
    case ergvc::ErrorKind::Domain: return ERGVC_ERR_DOMAIN;
    case ergvc::ErrorKind::Syntax: return ERGVC_ERR_SYNTAX;
    case ergvc::ErrorKind::Resource: return ERGVC_ERR_RESOURCE;
    case ergvc::ErrorKind::Precondition: return ERGVC_ERR_PRECONDITION;
    case ergvc::ErrorKind::InsufficientData: return ERGVC_ERR_INSUFFICIENT_DATA;
    case ergvc::ErrorKind::Config: return ERGVC_ERR_CONFIG;
  }
  return ERGVC_ERR_INTERNAL;
}

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Runs body, translating exceptions into status codes and the thread-local
// error slots.
template <class Body>
ergvc_status guarded(Body&& body) {
  g_error.clear();
  g_pointer.clear();
  try {
    body();
    return ERGVC_OK;
  } catch (const ArgumentError& e) {
    g_error = e.what();
    return ERGVC_ERR_ARGUMENT;
  } catch (const ergvc::ConfigError& e) {
    g_error = e.what();
    g_pointer = e.pointer();
    return ERGVC_ERR_CONFIG;
  } catch (const ergvc::Error& e) {
    g_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::parse_error& e) {
    g_error = e.what();
    g_pointer = "/";
    return ERGVC_ERR_CONFIG;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return ERGVC_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_error = e.what();
    return ERGVC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) throw ArgumentError(std::string("null argument: ") + name);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ergvc_version(void) { return ergvc::kVersion; }
const char* ergvc_last_error(void) { return g_error.c_str(); }
const char* ergvc_last_error_pointer(void) { return g_pointer.c_str(); }
void ergvc_string_free(char* s) { std::free(s); }
unsigned ergvc_default_workers(void) { return ergvc::default_workers(); }

ergvc_status ergvc_union_parse(const char* text, ergvc_union** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new ergvc_union{ergvc::parse_interval_union(text)};
  });
}

void ergvc_union_free(ergvc_union* u) { delete u; }

ergvc_status ergvc_union_print(const ergvc_union* u, char** out) {
  return guarded([&] {
    need(u, "u");
    need(out, "out");
    *out = dup(ergvc::print_interval_union(u->value));
  });
}

ergvc_status ergvc_union_measure(const ergvc_union* u, char** out) {
  return guarded([&] {
    need(u, "u");
    need(out, "out");
    *out = dup(u->value.measure().str());
  });
}

ergvc_status ergvc_union_contains(const ergvc_union* u, const char* x, int* out) {
  return guarded([&] {
    need(u, "u");
    need(x, "x");
    need(out, "out");
    const ergvc::Rat r = ergvc::Rat::parse(x);
    if (r.sign() < 0 || r >= ergvc::Rat(1))
      throw ergvc::DomainError("point " + r.str() + " outside [0,1)");
    *out = u->value.contains(r) ? 1 : 0;
  });
}

ergvc_status ergvc_union_op(ergvc_set_op op, const ergvc_union* a, const ergvc_union* b,
                            ergvc_union** out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    ergvc::IntervalUnion r;
    switch (op) {
      case ERGVC_INTERSECT: r = ergvc::intersect(a->value, b->value); break;
      case ERGVC_UNITE: r = ergvc::unite(a->value, b->value); break;
      case ERGVC_DIFFERENCE: r = ergvc::difference(a->value, b->value); break;
      case ERGVC_SYMMETRIC_DIFFERENCE: r = ergvc::symmetric_difference(a->value, b->value); break;
      default: throw ArgumentError("unknown set operation");
    }
    *out = new ergvc_union{std::move(r)};
  });
}

ergvc_status ergvc_union_complement(const ergvc_union* a, ergvc_union** out) {
  return guarded([&] {
    need(a, "a");
    need(out, "out");
    *out = new ergvc_union{ergvc::complement(a->value)};
  });
}

ergvc_status ergvc_family_from_json(const char* json, unsigned precision, ergvc_family** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    ergvc::check_precision(precision);
    const auto parsed = nlohmann::json::parse(json);
    *out = new ergvc_family{ergvc::family_from_json(ergvc::ConfigNode(parsed, ""), precision)};
  });
}

void ergvc_family_free(ergvc_family* f) { delete f; }

size_t ergvc_family_budget(const ergvc_family* f) { return f ? f->value.budget() : 0; }

ergvc_status ergvc_shatter_coefficient(const ergvc_family* f, size_t upto,
                                       const char* const* points, size_t npoints,
                                       uint64_t* out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    if (npoints) need(points, "points");
    std::vector<ergvc::Rat> pts;
    for (size_t i = 0; i < npoints; ++i) {
      need(points[i], "points[i]");
      pts.push_back(ergvc::Rat::parse(points[i]));
    }
    *out = ergvc::shatter_coefficient(pts, f->value, upto);
  });
}

ergvc_status ergvc_vc_dimension(const ergvc_family* f, size_t upto, unsigned grid_order,
                                unsigned max_k, unsigned* dim, int* lower_bound_only) {
  return guarded([&] {
    need(f, "f");
    need(dim, "dim");
    const auto r = ergvc::vc_dimension(f->value, upto, ergvc::dyadic_grid(grid_order), max_k);
    *dim = r.dim;
    if (lower_bound_only) *lower_bound_only = r.lower_bound ? 1 : 0;
  });
}

ergvc_status ergvc_path_generate(const char* process_json, uint64_t seed, unsigned precision,
                                 size_t length, ergvc_path** out) {
  return guarded([&] {
    need(process_json, "process_json");
    need(out, "out");
    ergvc::check_precision(precision);
    const auto parsed = nlohmann::json::parse(process_json);
    const auto spec = ergvc::process_from_json(ergvc::ConfigNode(parsed, ""), seed, precision);
    *out = new ergvc_path{ergvc::generate(spec, length)};
  });
}

void ergvc_path_free(ergvc_path* p) { delete p; }

size_t ergvc_path_size(const ergvc_path* p) { return p ? p->value.size() : 0; }

ergvc_status ergvc_path_point(const ergvc_path* p, size_t i, char** out) {
  return guarded([&] {
    need(p, "p");
    need(out, "out");
    if (i >= p->value.size()) throw ergvc::DomainError("index outside the path");
    *out = dup(p->value[i].hex());
  });
}

ergvc_status ergvc_gamma(const ergvc_family* f, size_t upto, const ergvc_path* p, size_t m,
                         char** value, size_t* argmax) {
  return guarded([&] {
    need(f, "f");
    need(p, "p");
    need(value, "value");
    const auto g = ergvc::gamma_m(f->value, upto, p->value, m);
    *value = dup(g.value.str());
    if (argmax) *argmax = g.argmax;
  });
}

ergvc_status ergvc_ks(const ergvc_path* p, size_t m, char** value) {
  return guarded([&] {
    need(p, "p");
    need(value, "value");
    *value = dup(ergvc::ks_exact(p->value, m).str());
  });
}

ergvc_status ergvc_phi_build(const ergvc_union* const* sets, size_t n, ergvc_phi** out) {
  return guarded([&] {
    need(out, "out");
    if (n) need(sets, "sets");
    std::vector<ergvc::IntervalUnion> v;
    for (size_t i = 0; i < n; ++i) {
      need(sets[i], "sets[i]");
      v.push_back(sets[i]->value);
    }
    *out = new ergvc_phi{ergvc::build_phi(v)};
  });
}

void ergvc_phi_free(ergvc_phi* phi) { delete phi; }

ergvc_status ergvc_phi_apply(const ergvc_phi* phi, const char* x, char** out) {
  return guarded([&] {
    need(phi, "phi");
    need(x, "x");
    need(out, "out");
    *out = dup(phi->value.apply(ergvc::Rat::parse(x)).str());
  });
}

ergvc_status ergvc_phi_json(const ergvc_phi* phi, char** out) {
  return guarded([&] {
    need(phi, "phi");
    need(out, "out");
    *out = dup(ergvc::translation_to_json(phi->value).dump());
  });
}

ergvc_status ergvc_run(const char* subcommand, const char* config_json, unsigned workers,
                       ergvc_report** out) {
  return guarded([&] {
    need(subcommand, "subcommand");
    need(out, "out");
    const auto parsed = nlohmann::json::parse(config_json && *config_json ? config_json : "{}");
    auto* r = new ergvc_report{ergvc::run(subcommand, parsed, workers ? workers : 1), {}};
    r->json = r->value.json.dump(2);
    *out = r;
  });
}

void ergvc_report_free(ergvc_report* r) { delete r; }
int ergvc_report_exit_code(const ergvc_report* r) { return r ? r->value.exit_code : 1; }
const char* ergvc_report_json(const ergvc_report* r) { return r ? r->json.c_str() : ""; }
const char* ergvc_report_text(const ergvc_report* r) { return r ? r->value.text.c_str() : ""; }
size_t ergvc_report_file_count(const ergvc_report* r) { return r ? r->value.files.size() : 0; }

const char* ergvc_report_file_name(const ergvc_report* r, size_t i) {
  return r && i < r->value.files.size() ? r->value.files[i].name.c_str() : nullptr;
}

const char* ergvc_report_file_content(const ergvc_report* r, size_t i) {
  return r && i < r->value.files.size() ? r->value.files[i].content.c_str() : nullptr;
}

}  // extern "C"
