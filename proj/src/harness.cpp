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

#include "ergvc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "ergvc/deviation.hpp"
#include "ergvc/error.hpp"
#include "ergvc/functions.hpp"
#include "ergvc/induced.hpp"
#include "ergvc/isomorphism.hpp"
#include "ergvc/json_io.hpp"
#include "ergvc/parallel.hpp"
#include "ergvc/process.hpp"
#include "ergvc/random.hpp"
#include "ergvc/suite.hpp"
#include "ergvc/vc.hpp"

namespace ergvc {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxDefaultBudget = std::size_t{1} << 22;
constexpr std::size_t kMaxPathLength = 10'000'000;

// Keys every subcommand accepts.
#define ERGVC_COMMON_KEYS "precision", "budget", "seed", "output"

struct Common {
  unsigned precision = kMaxPrecision;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 1;
};

Common read_common(const ConfigNode& cfg) {
  Common c;
  c.precision = static_cast<unsigned>(cfg.uint_or("precision", kMaxPrecision, kMinPrecision, kMaxPrecision));
  if (auto b = cfg.get("budget")) c.budget = b->as_uint(0, UINT32_MAX);
  c.seed = cfg.uint_or("seed", 1);
  if (auto o = cfg.get("output")) {
    o->only({"dir"});
    if (auto d = o->get("dir")) d->as_string();
  }
  return c;
}

std::size_t resolve_upto(const SetFamily& fam, const Common& c) {
  if (c.budget) return std::min(*c.budget, fam.budget());
  if (fam.budget() > kMaxDefaultBudget)
    throw ResourceError("family '" + fam.name() + "' has " + std::to_string(fam.budget()) +
                        " members; pass a budget");
  return fam.budget();
}

json rats_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

ProcessSpec process_or(const ConfigNode& cfg, const Common& c, const char* fallback_kind) {
  if (auto p = cfg.get("process")) return process_from_json(*p, c.seed, c.precision);
  const json fallback = {{"kind", fallback_kind}};
  return process_from_json(ConfigNode(fallback, "/process"), c.seed, c.precision);
}

const json kTraceColumns = {{"seed", "exact"},         {"m", "exact"},
                            {"gamma_num", "exact"},    {"gamma_den", "exact"},
                            {"gamma_f64", "float"},    {"argmax_member", "exact"}};

// ---------------------------------------------------------------- shatter

RunReport cmd_shatter(const ConfigNode& cfg, unsigned) {
  cfg.only({ERGVC_COMMON_KEYS, "family", "points", "grid"});
  const Common c = read_common(cfg);
  const SetFamily fam = family_from_json(cfg.at("family"), c.precision);
  const std::size_t upto = resolve_upto(fam, c);
  std::vector<Rat> points;
  if (auto p = cfg.get("points")) {
    for (const auto& x : p->items()) {
      Rat r = x.as_rat();
      if (r.sign() < 0 || r >= Rat(1)) x.fail("point outside [0,1)");
      points.push_back(std::move(r));
    }
  } else {
    points = dyadic_grid(static_cast<unsigned>(cfg.uint_or("grid", 3, 0, 6)));
  }
  if (points.size() > kMaxTracePoints) cfg.at("points").fail("at most 64 points");
  {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      cfg.at("points").fail("duplicate points");
  }
  const TraceTable table = trace_table(points, fam, upto);
  const auto distinct = table.distinct_rows();
  const unsigned max_k = static_cast<unsigned>(std::min<std::size_t>(points.size(), 16));
  const VcResult vc = vc_dimension_rows(table.rows, points.size(), max_k);
  RunReport r;
  r.json["results"] = {{"points", rats_json(points)},
                       {"members", upto},
                       {"shatter_coefficient", distinct.size()},
                       {"vc_dimension", vc.dim},
                       {"vc_lower_bound_only", vc.lower_bound}};
  if (!vc.lower_bound) {
    const SauerBound sb = sauer_bound(points.size(), vc.dim);
    r.json["results"]["sauer_bound"] = sb.exact.get_str();
    r.json["results"]["within_sauer_bound"] = Int(static_cast<unsigned long>(distinct.size())) <= sb.exact;
  }
  r.json["columns"] = {{"shatter_coefficient", "exact"}, {"vc_dimension", "exact"}};
  return r;
}

// ----------------------------------------------------------------- vcdim

RunReport cmd_vcdim(const ConfigNode& cfg, unsigned) {
  cfg.only({ERGVC_COMMON_KEYS, "family", "grid", "max_k"});
  const Common c = read_common(cfg);
  const SetFamily fam = family_from_json(cfg.at("family"), c.precision);
  const std::size_t upto = resolve_upto(fam, c);
  const auto grid = dyadic_grid(static_cast<unsigned>(cfg.uint_or("grid", 4, 0, 6)));
  const unsigned max_k = static_cast<unsigned>(
      cfg.uint_or("max_k", std::min<std::size_t>(5, grid.size()), 0, std::min<std::size_t>(24, grid.size())));
  const VcResult vc = vc_dimension(fam, upto, grid, max_k);
  RunReport r;
  r.json["results"] = {{"dim", vc.dim},
                       {"witness", rats_json(vc.witness)},
                       {"lower_bound_only", vc.lower_bound},
                       {"grid_points", grid.size()},
                       {"members", upto}};
  const OrbitStructure os = orbit_structure(fam, upto);
  if (os.dimension) {
    r.json["results"]["structural_dim"] = *os.dimension;
    r.json["results"]["orbits_disjoint_or_equal"] = os.disjoint_or_equal;
  }
  r.json["columns"] = {{"dim", "exact"}};
  r.text = "dim " + std::to_string(vc.dim) + (vc.lower_bound ? " (lower bound)" : "") + "\n";
  return r;
}

// ---------------------------------------------------------- join-witness

RunReport cmd_join_witness(const ConfigNode& cfg, unsigned) {
  cfg.only({ERGVC_COMMON_KEYS, "sets", "k", "permutation_seed"});
  read_common(cfg);
  std::vector<IntervalUnion> sets;
  if (auto s = cfg.get("sets")) {
    for (const auto& x : s->items()) sets.push_back(x.as_set());
    const std::size_t n = sets.size();
    if (n < 2 || (n & (n - 1)) != 0) s->fail("need 2^k sets for some k >= 1");
  } else {
    const unsigned k = static_cast<unsigned>(cfg.uint_or("k", 2, 1, 4));
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    if (auto ps = cfg.get("permutation_seed")) {
      Draws d(ps->as_uint());
      perm = random_permutation(d, n);
    }
    for (std::size_t u = 0; u < n; ++u)
      sets.push_back(dyadic_digit_set(static_cast<unsigned>(perm[u] + 1)));
  }
  const JoinPartition jp = join(sets);
  RunReport r;
  r.json["results"] = {{"sources", sets.size()}, {"cells", jp.cells().size()}, {"full", jp.is_full()}};
  if (jp.is_full()) {
    const auto witness = full_join_witness(jp);
    const auto fam = explicit_family("join", sets);
    const auto s = shatter_coefficient(witness, fam, sets.size());
    r.json["results"]["k"] = witness.size();
    r.json["results"]["witness"] = rats_json(witness);
    r.json["results"]["shatter_coefficient"] = s;
    r.json["results"]["shattered"] = s == (std::uint64_t{1} << witness.size());
  }
  r.json["columns"] = {{"witness", "exact"}, {"shatter_coefficient", "exact"}};
  return r;
}

// -------------------------------------------------------------- converge

RunReport cmd_converge(const ConfigNode& cfg, unsigned workers) {
  cfg.only({ERGVC_COMMON_KEYS, "family", "process", "m", "m_grid", "seeds"});
  const Common c = read_common(cfg);
  const SetFamily fam = family_from_json(cfg.at("family"), c.precision);
  const std::size_t upto = resolve_upto(fam, c);
  const ProcessSpec spec = process_or(cfg, c, "iid");
  const auto grid = m_grid_from_json(cfg, 1000);
  const auto seeds = seeds_from_json(cfg, c.seed, 10);
  const TraceBundle tb = deviation_trace(fam, upto, spec, grid, seeds, workers);
  RunReport r;
  json med = json::array();
  for (std::size_t g = 0; g < grid.size(); ++g)
    med.push_back({{"m", grid[g]}, {"gamma", rat_json(tb.median[g])}});
  r.json["results"] = {{"members", upto}, {"seeds", seeds.size()}, {"median", med}};
  r.json["columns"] = kTraceColumns;
  r.files.push_back({"trace.csv", trace_csv(tb)});
  r.files.push_back({"median.csv", median_csv(tb)});
  r.text = median_csv(tb);
  return r;
}

// -------------------------------------------------------- counterexample

RunReport cmd_counterexample(const ConfigNode& cfg, unsigned workers) {
  cfg.only({ERGVC_COMMON_KEYS, "window", "count", "x0", "alpha", "m", "m_grid", "seeds"});
  const Common c = read_common(cfg);
  json proc = {{"kind", "rotation"}};
  if (cfg.has("alpha")) proc["alpha"] = cfg.at("alpha").json();
  if (cfg.has("x0")) proc["x0"] = cfg.at("x0").json();
  const ProcessSpec spec = process_from_json(ConfigNode(proc, ""), c.seed, c.precision);
  const auto& rp = std::get<RotationParams>(spec.params);
  const std::uint64_t window = cfg.uint_or("window", 64, 1, std::uint64_t{1} << 40);
  const std::size_t count = cfg.uint_or("count", 8, 1, 4096);
  const SetFamily fam = trajectory_family(rp.alpha, rp.x0, window, count, c.precision);
  const std::size_t upto = resolve_upto(fam, c);
  const auto grid = m_grid_from_json(cfg, 1000);
  const auto seeds = seeds_from_json(cfg, c.seed, 1);
  const TraceBundle tb = deviation_trace(fam, upto, spec, grid, seeds, workers);
  bool all_one = true;
  for (const auto& t : tb.per_seed)
    for (const auto& g : t.gammas) all_one = all_one && g == Rat(1);
  RunReport r;
  r.json["results"] = {{"members", upto},
                       {"window", window},
                       {"atoms_per_member", 2 * window + 1},
                       {"all_gamma_one", all_one}};
  r.json["columns"] = kTraceColumns;
  r.files.push_back({"trace.csv", trace_csv(tb)});
  r.text = trace_csv(tb);
  return r;
}

// ----------------------------------------------------------- isomorphism

RunReport cmd_isomorphism(const ConfigNode& cfg, unsigned) {
  cfg.only({ERGVC_COMMON_KEYS, "sets", "interleave", "probes", "doubling", "probe_order"});
  const Common c = read_common(cfg);
  if (!cfg.has("sets") && !cfg.has("doubling")) cfg.fail("need \"sets\" or \"doubling\"");
  RunReport r;
  r.json["results"] = json::object();
  if (auto s = cfg.get("sets")) {
    std::vector<IntervalUnion> sets;
    for (const auto& x : s->items()) sets.push_back(x.as_set());
    if (sets.size() > 24) s->fail("at most 24 sets");
    if (cfg.bool_or("interleave", false)) sets = interleave_dyadic(sets);
    const PiecewiseTranslation phi = build_phi(sets);
    phi.check_invariants();
    Draws d(c.seed);
    std::vector<IntervalUnion> probes;
    const std::size_t nprobes = cfg.uint_or("probes", 100, 0, 100000);
    for (std::size_t i = 0; i < nprobes; ++i) probes.push_back(random_rational_union(d, 3));
    json aligned = json::array();
    for (const auto& set : sets) aligned.push_back(rat_json(image_of_set(phi, set).symdiff_measure));
    r.json["results"]["map"] = translation_to_json(phi);
    r.json["results"]["cells"] = phi.pieces().size();
    r.json["results"]["max_cell_diameter"] = rat_json(phi.max_cell_diameter());
    r.json["results"]["max_cell_measure"] = rat_json(phi.max_cell_measure());
    r.json["results"]["measure_deviation"] = rat_json(verify_measure_preserving(phi, probes));
    r.json["results"]["image_symdiff"] = aligned;
  }
  if (auto dn = cfg.get("doubling")) {
    const unsigned n = static_cast<unsigned>(dn->as_uint(1, 20));
    const unsigned order = static_cast<unsigned>(cfg.uint_or("probe_order", 10, 0, 20));
    const DoublingCheck dc = doubling_limit_check(n, order);
    r.json["results"]["doubling"] = {{"stage", n},
                                     {"probe_order", order},
                                     {"max_deviation", rat_json(dc.max_deviation)},
                                     {"worst_point", dc.worst_point.str()},
                                     {"bound", rat_json(dc.bound)},
                                     {"within_bound", dc.max_deviation <= dc.bound}};
  }
  r.json["columns"] = {{"map", "exact"}, {"measure_deviation", "exact"}};
  return r;
}

// --------------------------------------------------------------- induced

RunReport cmd_induced(const ConfigNode& cfg, unsigned) {
  cfg.only({ERGVC_COMMON_KEYS, "process", "A", "C", "hits", "m", "length"});
  const Common c = read_common(cfg);
  const ProcessSpec spec = process_or(cfg, c, "rotation");
  const IntervalUnion A = cfg.at("A").as_set();
  if (A.measure().is_zero()) cfg.at("A").fail("A must have positive measure");
  std::vector<IntervalUnion> Cs;
  if (auto cn = cfg.get("C")) {
    if (cn->json().is_array()) for (const auto& x : cn->items()) Cs.push_back(x.as_set());
    else Cs.push_back(cn->as_set());
  } else {
    Cs.push_back(IntervalUnion::whole());
  }
  const std::size_t L = cfg.uint_or("hits", 1000, 2, kMaxPathLength);
  const std::size_t m = cfg.uint_or("m", L, 2, L);
  std::size_t length = 0;
  if (auto len = cfg.get("length")) {
    length = len->as_uint(1, kMaxPathLength);
  } else {
    const Rat want = Rat(static_cast<long>(4 * L)) / A.measure() + Rat(64);
    if (want > Rat(static_cast<long>(kMaxPathLength)))
      throw ResourceError("path for " + std::to_string(L) + " hits exceeds the length cap");
    length = static_cast<std::size_t>(want.to_double());
  }
  const SamplePath path = generate(spec, length);
  const InducedPath ip = induce(path, A, L);
  json taus = json::array();
  for (std::size_t l = 0; l < std::min<std::size_t>(L, 16); ++l) taus.push_back(ip.hits[l]);
  json checks = json::array();
  bool all_equal = true;
  for (const auto& C : Cs) {
    const XtildexCheck x = verify_xtildex(ip, path, C, m);
    all_equal = all_equal && x.equal;
    checks.push_back({{"C", C.str()}, {"lhs", rat_json(x.lhs)}, {"rhs", rat_json(x.rhs)}, {"equal", x.equal}});
  }
  const TransferCheck tc = transfer_check(ip, Cs, m);
  RunReport r;
  r.json["results"] = {{"first_hits", taus},
                       {"hits", L},
                       {"m", m},
                       {"path_length", length},
                       {"W_m", rat_json(wm(ip, m))},
                       {"mean_return_time", rat_json(mean_return_time(ip))},
                       {"xtildex", checks},
                       {"xtildex_all_equal", all_equal},
                       {"transfer", {{"induced_gamma", rat_json(tc.induced_gamma)},
                                     {"exact_bound", rat_json(tc.exact_bound)},
                                     {"exact_holds", tc.exact_holds},
                                     {"asymptotic_bound", rat_json(tc.asymptotic_bound)},
                                     {"asymptotic_holds", tc.asymptotic_holds}}}};
  r.json["columns"] = {{"W_m", "exact"}, {"xtildex", "exact"}};
  return r;
}

// ------------------------------------------------------------ graph-lift

RunReport cmd_graph_lift(const ConfigNode& cfg, unsigned workers) {
  cfg.only({ERGVC_COMMON_KEYS, "process", "functions", "ramps", "m", "V", "seeds", "rescale"});
  const Common c = read_common(cfg);
  const ProcessSpec spec = process_or(cfg, c, "iid");
  std::vector<PiecewiseFn> fns;
  if (auto f = cfg.get("functions")) {
    for (const auto& x : f->items()) fns.push_back(function_from_json(x));
  } else {
    fns = ramp_family(cfg.uint_or("ramps", 10, 1, 4096));
  }
  const std::size_t m = cfg.uint_or("m", 1000, 1, kMaxPathLength);
  const unsigned V = static_cast<unsigned>(cfg.uint_or("V", 2, 0, 64));
  const bool rescale = cfg.bool_or("rescale", true);
  const auto seeds = seeds_from_json(cfg, c.seed, 1);
  const double lm = lm_bound(m, V);

  std::vector<GammaSplit> splits(seeds.size());
  std::vector<Rat> fubini;
  parallel_for(seeds.size(), workers, [&](std::size_t s) {
    ProcessSpec seeded = spec;
    seeded.seed = seeds[s];
    const GraphSample gs = graph_lift(generate(seeded, m), seeds[s]);
    splits[s] = gamma_split(fns, gs, m, rescale);
  });
  {
    ProcessSpec seeded = spec;
    seeded.seed = seeds.front();
    const GraphSample gs = graph_lift(generate(seeded, m), seeds.front());
    for (const auto& f : fns) fubini.push_back(graph_frequency(f, gs, m));
  }

  std::ostringstream csv;
  csv << "seed,m,gamma_num,gamma_den,gamma_f64,gamma1_num,gamma1_den,gamma1_f64,"
         "gamma2_num,gamma2_den,gamma2_f64,bound_ok,lm_bound_f64\n";
  std::size_t within = 0;
  bool all_ok = true;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    const auto& g = splits[s];
    csv << seeds[s] << ',' << m;
    for (const Rat* v : {&g.gamma, &g.gamma1, &g.gamma2})
      csv << ',' << v->num() << ',' << v->den() << ',' << format_f64(v->to_double());
    csv << ',' << (g.bound_ok ? 1 : 0) << ',' << format_f64(lm) << '\n';
    within += g.gamma2.to_double() <= lm;
    all_ok = all_ok && g.bound_ok;
  }
  json fub = json::array();
  for (std::size_t i = 0; i < fns.size(); ++i)
    fub.push_back({{"frequency", rat_json(fubini[i])}, {"integral", rat_json(fns[i].integral())}});
  RunReport r;
  r.json["results"] = {{"functions", fns.size()},
                       {"m", m},
                       {"V", V},
                       {"lm_bound", lm},
                       {"seeds", seeds.size()},
                       {"gamma2_within_lm", within},
                       {"split_bound_all", all_ok},
                       {"fubini_first_seed", fub}};
  r.json["columns"] = {{"seed", "exact"},       {"m", "exact"},           {"gamma_num", "exact"},
                       {"gamma_den", "exact"},  {"gamma_f64", "float"},   {"gamma1_num", "exact"},
                       {"gamma1_den", "exact"}, {"gamma1_f64", "float"},  {"gamma2_num", "exact"},
                       {"gamma2_den", "exact"}, {"gamma2_f64", "float"},  {"bound_ok", "exact"},
                       {"lm_bound_f64", "float"}};
  r.files.push_back({"graph_lift.csv", csv.str()});
  return r;
}

// ----------------------------------------------------------------- suite

RunReport cmd_suite(const ConfigNode& cfg, unsigned workers) {
  cfg.only({ERGVC_COMMON_KEYS, "criteria"});
  read_common(cfg);
  std::vector<int> ids;
  if (auto list = cfg.get("criteria")) {
    for (const auto& x : list->items()) ids.push_back(static_cast<int>(x.as_uint(1, kCriterionCount)));
  } else {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  const auto results = run_criteria(ids, workers);
  RunReport r;
  json rows = json::array();
  std::ostringstream csv;
  csv << "criterion,passed,name\n";
  bool all = true;
  for (const auto& c : results) {
    rows.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    csv << c.id << ',' << (c.passed ? 1 : 0) << ',' << c.name << '\n';
    all = all && c.passed;
  }
  r.json["results"] = {{"criteria", rows}, {"all_passed", all}};
  r.json["columns"] = {{"criterion", "exact"}, {"passed", "exact"}};
  r.files.push_back({"suite.csv", csv.str()});
  r.text = format_criteria(results);
  r.exit_code = all ? 0 : 1;
  return r;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"shatter",        "vcdim",       "join-witness",
                                              "converge",       "counterexample", "isomorphism",
                                              "induced",        "graph-lift",  "suite"};
  return names;
}

SetFamily family_from_json(const ConfigNode& node, unsigned precision) {
  const std::string name = node.at("name").as_string();
  if (name == "empty" || name == "none") {
    node.only({"name"});
    return explicit_family(name, std::vector<IntervalUnion>{});
  }
  if (name == "dyadic" || name == "dyadic-level") {
    node.only({"name", "order"});
    const unsigned order = static_cast<unsigned>(node.uint_or("order", 4, 0, 20));
    return name == "dyadic" ? dyadic_union_family(order) : dyadic_family(order);
  }
  if (name == "half-intervals") {
    node.only({"name", "order"});
    return half_interval_family(static_cast<unsigned>(node.uint_or("order", 6, 0, 30)));
  }
  if (name == "k-intervals") {
    node.only({"name", "k", "order"});
    return interval_union_family(static_cast<unsigned>(node.uint_or("k", 1, 1, 8)),
                                 static_cast<unsigned>(node.uint_or("order", 4, 0, 10)));
  }
  if (name == "explicit") {
    node.only({"name", "sets"});
    std::vector<IntervalUnion> sets;
    for (const auto& s : node.at("sets").items()) sets.push_back(s.as_set());
    return explicit_family("explicit", sets);
  }
  if (name == "trajectory") {
    node.only({"name", "window", "count", "x0", "alpha"});
    json proc = {{"kind", "rotation"}};
    if (node.has("alpha")) proc["alpha"] = node.at("alpha").json();
    if (node.has("x0")) proc["x0"] = node.at("x0").json();
    const ProcessSpec spec = process_from_json(ConfigNode(proc, node.pointer()), 0, precision);
    const auto& rp = std::get<RotationParams>(spec.params);
    return trajectory_family(rp.alpha, rp.x0, node.uint_or("window", 64, 1, std::uint64_t{1} << 40),
                             node.uint_or("count", 8, 1, 4096), precision);
  }
  if (name == "union") {
    node.only({"name", "parts"});
    const auto parts = node.at("parts").items();
    if (parts.empty()) node.at("parts").fail("need at least one family");
    SetFamily fam = family_from_json(parts[0], precision);
    for (std::size_t i = 1; i < parts.size(); ++i)
      fam = concat_families(fam, family_from_json(parts[i], precision));
    return fam;
  }
  node.at("name").fail("unknown family '" + name + "'");
}

std::vector<std::size_t> m_grid_from_json(const ConfigNode& cfg, std::size_t fallback_m) {
  std::vector<std::size_t> grid;
  if (auto g = cfg.get("m_grid")) {
    for (const auto& x : g->items()) {
      grid.push_back(x.as_uint(1, kMaxPathLength));
      if (grid.size() > 1 && grid.back() <= grid[grid.size() - 2])
        x.fail("m_grid must be strictly ascending");
    }
    if (grid.empty()) g->fail("m_grid must be nonempty");
    return grid;
  }
  const std::size_t m = cfg.uint_or("m", fallback_m, 1, kMaxPathLength);
  for (std::size_t decade = 1; decade <= m; decade *= 10)
    for (std::size_t step : {1, 2, 5})
      if (decade * step < m) grid.push_back(decade * step);
  grid.push_back(m);
  return grid;
}

std::vector<std::uint64_t> seeds_from_json(const ConfigNode& cfg, std::uint64_t base,
                                           std::size_t fallback_count) {
  std::vector<std::uint64_t> seeds;
  const auto node = cfg.get("seeds");
  if (node && node->json().is_array()) {
    for (const auto& x : node->items()) seeds.push_back(x.as_uint());
    if (seeds.empty()) node->fail("seed list must be nonempty");
    std::sort(seeds.begin(), seeds.end());
    if (std::adjacent_find(seeds.begin(), seeds.end()) != seeds.end()) node->fail("duplicate seeds");
    return seeds;
  }
  const std::size_t count = node ? node->as_uint(1, 100000) : fallback_count;
  for (std::size_t i = 0; i < count; ++i) seeds.push_back(base + i);
  return seeds;
}

RunReport run(std::string_view subcommand, const json& config, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  const ConfigNode cfg(config, "");
  if (!config.is_object()) cfg.fail("config must be a JSON object");
  RunReport r;
  if (subcommand == "shatter") r = cmd_shatter(cfg, workers);
  else if (subcommand == "vcdim") r = cmd_vcdim(cfg, workers);
  else if (subcommand == "join-witness") r = cmd_join_witness(cfg, workers);
  else if (subcommand == "converge") r = cmd_converge(cfg, workers);
  else if (subcommand == "counterexample") r = cmd_counterexample(cfg, workers);
  else if (subcommand == "isomorphism") r = cmd_isomorphism(cfg, workers);
  else if (subcommand == "induced") r = cmd_induced(cfg, workers);
  else if (subcommand == "graph-lift") r = cmd_graph_lift(cfg, workers);
  else if (subcommand == "suite") r = cmd_suite(cfg, workers);
  else throw DomainError("unknown subcommand '" + std::string(subcommand) + "'");
  const auto elapsed = std::chrono::steady_clock::now() - start;
  r.json["subcommand"] = subcommand;
  r.json["config"] = config;
  r.json["version"] = kVersion;
  r.json["workers"] = workers;
  r.json["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  json files = json::array();
  for (const auto& f : r.files) files.push_back(f.name);
  r.json["files"] = files;
  return r;
}

}  // namespace ergvc
