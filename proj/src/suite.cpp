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

#include "ergvc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "ergvc/deviation.hpp"
#include "ergvc/functions.hpp"
#include "ergvc/induced.hpp"
#include "ergvc/isomorphism.hpp"
#include "ergvc/oracle.hpp"
#include "ergvc/parallel.hpp"
#include "ergvc/process.hpp"
#include "ergvc/random.hpp"
#include "ergvc/vc.hpp"

namespace ergvc {

namespace {

std::string count_of(std::size_t ok, std::size_t total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

// ------------------------------------------------------------------ 1

CriterionResult sauer_consistency(unsigned workers) {
  constexpr std::size_t kFamilies = 500;
  struct Row {
    std::uint64_t shatter = 0;
    unsigned dim = 0;
    std::size_t points = 0;
    bool ok = false;
  };
  std::vector<Row> rows(kFamilies);
  parallel_for(kFamilies, workers, [&](std::size_t f) {
    Draws d(1000 + f);
    const std::size_t npts = static_cast<std::size_t>(d.between(1, 12));
    std::vector<Rat> points;
    for (auto j : random_permutation(d, 128)) {
      if (points.size() == npts) break;
      points.push_back(Rat(static_cast<long>(2 * j + 1), 256));
    }
    std::vector<IntervalUnion> sets;
    const auto nsets = d.between(1, 40);
    for (std::int64_t i = 0; i < nsets; ++i) sets.push_back(random_grid_union(d, 3, 64));
    const SetFamily fam = explicit_family("random", sets);
    const TraceTable table = trace_table(points, fam, sets.size());
    Row r;
    r.points = npts;
    r.shatter = table.distinct_rows().size();
    r.dim = vc_dimension_rows(table.rows, npts, static_cast<unsigned>(npts)).dim;
    r.ok = Int(static_cast<unsigned long>(r.shatter)) <= sauer_bound(npts, r.dim).exact;
    rows[f] = r;
  });
  CriterionResult out;
  std::ostringstream digest;
  std::size_t ok = 0;
  for (const auto& r : rows) {
    ok += r.ok;
    digest << r.points << ':' << r.shatter << ':' << r.dim << '\n';
  }
  out.passed = ok == kFamilies;
  out.detail = count_of(ok, kFamilies) + " random families within the Sauer bound";
  out.digest = digest.str();
  return out;
}

// ------------------------------------------------------------------ 2

CriterionResult join_witness(unsigned) {
  std::size_t ok = 0, total = 0;
  std::ostringstream digest;
  for (unsigned k = 1; k <= 4; ++k) {
    const std::size_t n = std::size_t{1} << k;
    for (std::uint64_t variant = 0; variant < 3; ++variant) {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      if (variant > 0) {
        Draws d(variant * 100 + k);
        perm = random_permutation(d, n);
      }
      std::vector<IntervalUnion> sets;
      for (std::size_t u = 0; u < n; ++u)
        sets.push_back(dyadic_digit_set(static_cast<unsigned>(perm[u] + 1)));
      ++total;
      const JoinPartition jp = join(sets);
      if (!jp.is_full()) continue;
      const auto witness = full_join_witness(jp);
      const auto fam = explicit_family("join", sets);
      bool pattern = witness.size() == k;
      for (std::size_t u = 0; u < n && pattern; ++u)
        for (std::size_t i = 0; i < k; ++i)
          pattern = pattern && sets[u].contains(witness[i]) == (((u >> i) & 1) != 0);
      const auto s = shatter_coefficient(witness, fam, n);
      if (pattern && s == n) ++ok;
      for (const auto& w : witness) digest << w << ' ';
      digest << s << '\n';
    }
  }
  CriterionResult out;
  out.passed = ok == total;
  out.detail = count_of(ok, total) + " full joins (k=1..4) give shattered witnesses";
  out.digest = digest.str();
  return out;
}

// ------------------------------------------------------------------ 3

CriterionResult known_dimensions(unsigned) {
  std::ostringstream digest, detail;
  bool pass = true;
  const VcResult dy = vc_dimension(dyadic_union_family(6), dyadic_union_family(6).budget(),
                                   dyadic_grid(6), 3);
  pass = pass && dy.dim == 2 && !dy.lower_bound;
  detail << "dyadic dim " << dy.dim;
  digest << dy.dim << '\n';
  for (unsigned k = 1; k <= 3; ++k) {
    const SetFamily fam = interval_union_family(k, 4);
    const VcResult r = vc_dimension(fam, fam.budget(), dyadic_grid(3), std::min(2 * k + 1, 8u));
    pass = pass && r.dim == 2 * k && !r.lower_bound;
    detail << ", " << k << "-intervals dim " << r.dim;
    digest << r.dim << '\n';
  }
  const SetFamily dyadic = dyadic_union_family(4);
  const std::vector<SetFamily> shipped{
      dyadic_family(3),          half_interval_family(4),      interval_union_family(1, 4),
      interval_union_family(2, 4), dyadic_union_family(4),
      trajectory_family(golden_alpha(), Rat(0), 64, 8, 128),
      explicit_family("empty", std::vector<IntervalUnion>{})};
  const auto grid = dyadic_grid(4);
  std::size_t ok = 0;
  for (const auto& fam : shipped) {
    const VcResult base = vc_dimension(fam, fam.budget(), grid, 8);
    const SetFamily with = concat_families(fam, dyadic);
    const VcResult joined = vc_dimension(with, with.budget(), grid, std::min(base.dim + 4, 16u));
    const bool holds = !base.lower_bound && joined.dim <= base.dim + 3;
    ok += holds;
    digest << base.dim << ' ' << joined.dim << '\n';
  }
  pass = pass && ok == shipped.size();
  detail << "; union-with-dyadic bound " << count_of(ok, shipped.size());
  CriterionResult out;
  out.passed = pass;
  out.detail = detail.str();
  out.digest = digest.str();
  return out;
}

// ------------------------------------------------------------------ 4

CriterionResult uniform_convergence(unsigned workers) {
  constexpr std::size_t kSeeds = 100;
  std::vector<Rat> small(kSeeds), large(kSeeds);
  parallel_for(kSeeds, workers, [&](std::size_t s) {
    ProcessSpec spec;
    spec.seed = s + 1;
    const SamplePath path = generate(spec, 10'000);
    small[s] = ks_exact(path, 100);
    large[s] = ks_exact(path, 10'000);
  });
  const Rat med_small = median(small);
  const Rat med_large = median(large);
  const std::size_t under = static_cast<std::size_t>(
      std::count_if(large.begin(), large.end(), [](const Rat& v) { return v <= Rat(1, 50); }));
  ProcessSpec rot;
  rot.params = RotationParams{};
  const Rat golden = ks_exact(generate(rot, 10'000), 10'000);

  CriterionResult out;
  out.passed = med_small >= Rat(5) * med_large && under >= 99 && golden <= Rat(1, 100);
  std::ostringstream detail, digest;
  detail << "median KS " << format_f64(med_small.to_double()) << " -> "
         << format_f64(med_large.to_double()) << " (ratio "
         << format_f64((med_small / med_large).to_double()) << "), " << count_of(under, kSeeds)
         << " seeds <= 0.02 at m=1e4, golden rotation " << format_f64(golden.to_double());
  for (std::size_t s = 0; s < kSeeds; ++s) digest << small[s] << ' ' << large[s] << '\n';
  digest << golden << '\n';
  out.detail = detail.str();
  out.digest = digest.str();
  return out;
}

// ------------------------------------------------------------------ 5

CriterionResult counterexample(unsigned workers) {
  std::vector<std::size_t> grid(1000);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = i + 1;
  std::ostringstream digest;
  std::size_t ones = 0, total = 0;
  for (unsigned precision : {64u, 128u}) {
    for (const Rat& x0 : {Rat(0), Rat(1, 3)}) {
      ProcessSpec spec;
      spec.precision = precision;
      spec.params = RotationParams{golden_alpha(), x0};
      const SetFamily fam = trajectory_family(golden_alpha(), x0, 64, 8, precision);
      const auto gammas = gamma_m_grid(fam, fam.budget(), generate(spec, 1000), grid, workers);
      for (const auto& g : gammas) {
        ++total;
        ones += g.value == Rat(1);
        digest << g.value << ' ' << g.argmax << '\n';
      }
    }
  }
  CriterionResult out;
  out.passed = ones == total;
  out.detail = count_of(ones, total) + " grid values equal 1 exactly (m=1..1000, P=64,128)";
  out.digest = digest.str();
  return out;
}

// ------------------------------------------------------------------ 6

CriterionResult isomorphism(unsigned) {
  std::ostringstream digest;
  std::vector<PiecewiseTranslation> maps;
  for (unsigned stage = 1; stage <= 6; ++stage) {
    Draws d(600 + stage);
    std::vector<IntervalUnion> sets;
    for (unsigned j = 0; j < stage; ++j) sets.push_back(random_rational_union(d, 3));
    maps.push_back(build_phi(sets));
  }
  std::size_t exact_probes = 0;
  Draws probes(601);
  for (std::size_t t = 0; t < 100; ++t) {
    const auto& phi = maps[t % maps.size()];
    const Rat dev = verify_measure_preserving(phi, {random_rational_union(probes, 4)});
    exact_probes += dev.is_zero();
    digest << dev << '\n';
  }
  std::size_t exact_images = 0;
  Draws cells(602);
  for (std::size_t t = 0; t < 50; ++t) {
    const auto& phi = maps[t % maps.size()];
    std::vector<Interval> parts;
    for (const auto& p : phi.pieces())
      if (cells.below(2)) parts.insert(parts.end(), p.cell.parts().begin(), p.cell.parts().end());
    const SetImage img = image_of_set(phi, IntervalUnion::normalize(std::move(parts)));
    exact_images += img.symdiff_measure.is_zero();
    digest << img.packed.str() << '\n';
  }
  const DoublingCheck dc = doubling_limit_check(8, 10);
  const bool doubling_ok = dc.max_deviation <= pow2_neg(7);
  digest << dc.max_deviation << '\n';
  CriterionResult out;
  out.passed = exact_probes == 100 && exact_images == 50 && doubling_ok;
  out.detail = count_of(exact_probes, 100) + " probes measure-exact, " +
               count_of(exact_images, 50) + " cell-aligned images exact, doubling stage 8 deviation " +
               dc.max_deviation.str() + " (bound 1/128)";
  out.digest = digest.str();
  return out;
}

// ------------------------------------------------------------------ 7

CriterionResult induced_identity(unsigned workers) {
  constexpr std::size_t kInstances = 1000;
  std::vector<std::string> lines(kInstances);
  std::vector<char> equal(kInstances, 0);
  parallel_for(kInstances, workers, [&](std::size_t t) {
    Draws d(7000 + t);
    for (;;) {
      ProcessSpec spec;
      spec.seed = d.next();
      spec.precision = d.below(2) ? 64 : 128;
      switch (d.below(3)) {
        case 0: spec.params = IidParams{}; break;
        case 1: spec.params = RotationParams{golden_alpha(), d.unit_rational(30) * Rat(9, 10)}; break;
        default: spec.params = DoublingParams{}; break;
      }
      const SamplePath path = generate(spec, static_cast<std::size_t>(d.between(8, 96)));
      const IntervalUnion A = random_rational_union(d, 3);
      const IntervalUnion C = random_rational_union(d, 3);
      std::size_t hits = 0;
      for (std::size_t i = 0; i < path.size(); ++i) hits += A.contains(path[i]);
      if (hits < 2) continue;
      const InducedPath ip = induce(path, A, hits);
      const auto m = static_cast<std::size_t>(d.between(2, static_cast<std::int64_t>(hits)));
      const XtildexCheck x = verify_xtildex(ip, path, C, m);
      equal[t] = x.equal;
      lines[t] = x.lhs.str() + " " + x.rhs.str();
      return;
    }
  });
  const auto exact = static_cast<std::size_t>(std::count(equal.begin(), equal.end(), 1));

  ProcessSpec rot;
  rot.params = RotationParams{};
  const IntervalUnion A = IntervalUnion::single(Rat(0), Rat(1, 3));
  const SamplePath path = generate(rot, 40'000);
  const InducedPath ip = induce(path, A, 10'000);
  const Rat w = wm(ip, 10'000);
  const Rat mrt = mean_return_time(induce(path, A, 1000));
  const bool w_ok = Rat(95, 100) <= w && w <= Rat(105, 100);
  const bool mrt_ok = abs(mrt - Rat(3)) <= Rat(3, 10);

  CriterionResult out;
  out.passed = exact == kInstances && w_ok && mrt_ok;
  out.detail = count_of(exact, kInstances) + " identity instances exact, W_1e4 = " +
               format_f64(w.to_double()) + ", mean return time " + format_f64(mrt.to_double());
  std::ostringstream digest;
  for (const auto& l : lines) digest << l << '\n';
  digest << w << ' ' << mrt << '\n';
  out.digest = digest.str();
  return out;
}

// ------------------------------------------------------------------ 8

PiecewiseFn random_piecewise_linear(Draws& d) {
  const auto interior = static_cast<std::size_t>(d.between(0, 4));
  std::vector<Rat> bps{Rat(0), Rat(1)};
  while (bps.size() < interior + 2) {
    Rat x = d.unit_rational(24);
    if (x.sign() > 0 && x < Rat(1) && std::find(bps.begin(), bps.end(), x) == bps.end())
      bps.push_back(std::move(x));
  }
  std::sort(bps.begin(), bps.end());
  std::vector<LinearPiece> pieces;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    pieces.push_back({Rat(static_cast<long>(d.between(-6, 6)), static_cast<long>(d.between(1, 4))),
                      Rat(static_cast<long>(d.between(-6, 6)), static_cast<long>(d.between(1, 4)))});
  return PiecewiseFn(std::move(bps), std::move(pieces));
}

CriterionResult function_reductions(unsigned workers) {
  std::ostringstream digest;
  std::size_t sandwich_ok = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    Draws d(8000 + t);
    const PiecewiseFn f = random_piecewise_linear(d);
    const Rat M = f.sup_abs() + Rat(static_cast<long>(d.between(0, 2)), 2);
    const unsigned K = static_cast<unsigned>(d.between(1, 10));
    if (M.is_zero()) {
      ++sandwich_ok;
      continue;
    }
    const PiecewiseFn fbar = discretize_major(f, M, K);
    const SandwichCheck sc = sandwich_check(f, fbar, M, K);
    sandwich_ok += sc.holds;
    digest << fbar.pieces().size() << ' ' << fbar.integral() << '\n';
  }

  constexpr std::size_t kSeeds = 100;
  const auto ramps = ramp_family(10);
  const double lm = lm_bound(1000, 2);
  std::vector<GammaSplit> splits(kSeeds);
  std::vector<char> graph_ok(kSeeds, 0);
  parallel_for(kSeeds, workers, [&](std::size_t s) {
    ProcessSpec spec;
    spec.seed = 800 + s;
    const GraphSample gs = graph_lift(generate(spec, 1000), 800 + s);
    splits[s] = gamma_split(ramps, gs, 1000);
    const auto rows = graph_rows(ramps, gs, 12);
    const VcResult vc = vc_dimension_rows(rows, 12, 12);
    std::vector<std::uint64_t> distinct(rows);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    graph_ok[s] = vc.dim <= 2 &&
                  Int(static_cast<unsigned long>(distinct.size())) <= sauer_bound(12, 2).exact;
  });
  std::size_t split_ok = 0, within = 0;
  for (const auto& g : splits) {
    split_ok += g.bound_ok;
    within += g.gamma2.to_double() <= lm;
    digest << g.gamma << ' ' << g.gamma1 << ' ' << g.gamma2 << '\n';
  }
  const auto graph_count = static_cast<std::size_t>(std::count(graph_ok.begin(), graph_ok.end(), 1));

  CriterionResult out;
  out.passed = sandwich_ok == 100 && split_ok == kSeeds && within >= 90 && graph_count == kSeeds;
  out.detail = count_of(sandwich_ok, 100) + " sandwiches exact, " + count_of(split_ok, kSeeds) +
               " splits with gamma <= gamma1 + gamma2, " + count_of(within, kSeeds) +
               " seeds with gamma2 <= L_1000 = " + format_f64(lm) + ", " +
               count_of(graph_count, kSeeds) + " graph traces within Sauer";
  out.digest = digest.str();
  return out;
}

// ------------------------------------------------------------------ 9

CriterionResult oracle_equivalence(unsigned workers) {
  constexpr std::size_t kInstances = 1000;
  std::vector<char> match(kInstances, 0);
  std::vector<std::string> values(kInstances);
  parallel_for(kInstances, workers, [&](std::size_t t) {
    Draws d(9000 + t);
    const std::size_t k = 1 + t % 2;
    const std::size_t m = 1 + (t / 2) % 8;
    std::vector<Rat> pts;
    // Even instances use a coarse grid so that ties and shared endpoints occur.
    for (std::size_t i = 0; i < m; ++i)
      pts.push_back(t % 4 < 2 ? Rat(static_cast<long>(d.below(16)), 16)
                              : Rat(static_cast<long>(d.below(1u << 20)), 1L << 20));
    const SamplePath path = SamplePath::from_rats(pts);
    const Rat dp = gamma_k_intervals_exact(path, m, k).value;
    const Rat brute = gamma_k_intervals_brute(path, m, k);
    match[t] = dp == brute;
    values[t] = dp.str();
  });
  const auto ok = static_cast<std::size_t>(std::count(match.begin(), match.end(), 1));
  CriterionResult out;
  out.passed = ok == kInstances;
  out.detail = count_of(ok, kInstances) + " paths (m<=8, k<=2) match the brute-force oracle";
  std::ostringstream digest;
  for (const auto& v : values) digest << v << '\n';
  out.digest = digest.str();
  return out;
}

CriterionResult run_one(int id, unsigned workers);

// ----------------------------------------------------------------- 10

CriterionResult determinism(unsigned workers) {
  std::vector<int> ids;
  for (int i = 1; i < kCriterionCount; ++i) ids.push_back(i);
  auto digest_of = [&](unsigned w) {
    std::string all;
    for (int id : ids) all += "#" + std::to_string(id) + "\n" + run_one(id, w).digest;
    return all;
  };
  const std::string first = digest_of(workers);
  const std::string again = digest_of(workers);
  const std::string serial = digest_of(1);
  const std::string wide = digest_of(8);
  CriterionResult out;
  const bool reruns = first == again;
  const bool across = serial == wide && first == serial;
  out.passed = reruns && across;
  out.detail = std::string("exact outputs of criteria 1-9 ") +
               (reruns ? "identical" : "differ") + " across two runs and " +
               (across ? "identical" : "differ") + " across 1 vs 8 workers (" +
               std::to_string(first.size()) + " bytes)";
  return out;
}

const char* kNames[kCriterionCount] = {
    "Sauer consistency",     "full-join witness",     "known dimensions",
    "uniform convergence",   "orbit counterexample",  "isomorphism exactness",
    "induced identity",      "function reductions",   "oracle equivalence",
    "determinism"};

CriterionResult run_one(int id, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = sauer_consistency(workers); break;
    case 2: r = join_witness(workers); break;
    case 3: r = known_dimensions(workers); break;
    case 4: r = uniform_convergence(workers); break;
    case 5: r = counterexample(workers); break;
    case 6: r = isomorphism(workers); break;
    case 7: r = induced_identity(workers); break;
    case 8: r = function_reductions(workers); break;
    case 9: r = oracle_equivalence(workers); break;
    case 10: r = determinism(workers); break;
    default: r.detail = "unknown criterion";
  }
  r.id = id;
  if (id >= 1 && id <= kCriterionCount) r.name = kNames[id - 1];
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, unsigned workers) {
  std::vector<CriterionResult> out;
  for (int id : ids) {
    try {
      out.push_back(run_one(id, workers));
    } catch (const std::exception& e) {
      CriterionResult r;
      r.id = id;
      r.name = id >= 1 && id <= kCriterionCount ? kNames[id - 1] : "unknown";
      r.detail = std::string("error: ") + e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string format_criteria(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    os << "criterion " << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << ' ' << r.name << ": "
       << r.detail << " [" << secs << " s]\n";
  }
  return os.str();
}

}  // namespace ergvc
