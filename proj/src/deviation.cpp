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

#include "ergvc/deviation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "ergvc/error.hpp"
#include "ergvc/parallel.hpp"

namespace ergvc {

unsigned default_workers() {
  if (const char* env = std::getenv("ERGVC_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace {

void check_m(const SamplePath& path, std::size_t m) {
  if (m < 1 || m > path.size())
    throw DomainError("m=" + std::to_string(m) + " outside [1, " +
                      std::to_string(path.size()) + "]");
}

Rat gap_to_measure(std::size_t count, std::size_t m, const Rat& measure) {
  return abs(Rat(static_cast<long>(count), static_cast<long>(m)) - measure);
}

}  // namespace

std::size_t hit_count(const Member& set, const SamplePath& path, std::size_t m) {
  check_m(path, m);
  std::size_t count = 0;
  for (std::size_t i = 0; i < m; ++i) count += set.contains(path[i]);
  return count;
}

Rat discrepancy(const Member& set, const SamplePath& path, std::size_t m) {
  return gap_to_measure(hit_count(set, path, m), m, set.measure());
}

Rat discrepancy(const IntervalUnion& set, const SamplePath& path, std::size_t m) {
  return discrepancy(Member{set, std::nullopt}, path, m);
}

GammaValue gamma_m(const SetFamily& fam, std::size_t upto,
                   const SamplePath& path, std::size_t m) {
  return gamma_m_grid(fam, upto, path, {m}).front();
}

std::vector<GammaValue> gamma_m_grid(const SetFamily& fam, std::size_t upto,
                                     const SamplePath& path,
                                     const std::vector<std::size_t>& m_grid,
                                     unsigned workers) {
  if (m_grid.empty()) return {};
  for (std::size_t g = 0; g < m_grid.size(); ++g) {
    check_m(path, m_grid[g]);
    if (g && m_grid[g] <= m_grid[g - 1])
      throw DomainError("m grid must be strictly ascending");
  }
  if (upto > fam.budget())
    throw DomainError("upto exceeds the family budget");

  // per_member[i][g] = discrepancy of member i at m_grid[g]
  std::vector<std::vector<Rat>> per_member(upto);
  parallel_for(upto, workers, [&](std::size_t i) {
    const Member member = fam.enumerate(i);
    std::vector<Rat> row;
    row.reserve(m_grid.size());
    std::size_t count = 0, pos = 0;
    for (auto m : m_grid) {
      for (; pos < m; ++pos) count += member.contains(path[pos]);
      row.push_back(gap_to_measure(count, m, member.measure()));
    }
    per_member[i] = std::move(row);
  });

  std::vector<GammaValue> out(m_grid.size());
  for (std::size_t g = 0; g < m_grid.size(); ++g) {
    out[g].budget = upto;
    for (std::size_t i = 0; i < upto; ++i) {
      if (i == 0 || per_member[i][g] > out[g].value) {
        out[g].value = per_member[i][g];
        out[g].argmax = i;
      }
    }
  }
  return out;
}

AdaptiveGamma gamma_m_adaptive(const SetFamily& fam, const SamplePath& path,
                               std::size_t m, std::size_t start) {
  std::size_t budget = std::min(std::max<std::size_t>(start, 1), fam.budget());
  AdaptiveGamma out{gamma_m(fam, budget, path, m), false};
  while (budget < fam.budget()) {
    budget = std::min(budget * 2, fam.budget());
    GammaValue next = gamma_m(fam, budget, path, m);
    const bool same = next.value == out.gamma.value;
    out.gamma = std::move(next);
    if (same) {
      out.stable = true;
      break;
    }
  }
  return out;
}

Rat ks_exact(const SamplePath& path, std::size_t m) {
  check_m(path, m);
  std::vector<Dyadic> xs(path.points().begin(), path.points().begin() + m);
  std::sort(xs.begin(), xs.end());
  // Everything scaled by m * 2^128.
  Int unit = 1;
  unit <<= 128;
  const Int mm(static_cast<unsigned long>(m));
  Int best = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const Int x = to_int(xs[i - 1].bits()) * mm;
    const Int above = Int(static_cast<unsigned long>(i)) * unit - x;
    const Int below = x - Int(static_cast<unsigned long>(i - 1)) * unit;
    if (above > best) best = above;
    if (below > best) best = below;
  }
  return Rat(best, unit * mm);
}

namespace {

// Max total weight of at most k disjoint contiguous segments (possibly none).
Int best_k_segments(const std::vector<Int>& w, std::size_t k) {
  // open[j]: best total using j segments with the j-th ending at the current
  // element; closed[j]: best total using at most j segments so far.
  std::vector<Int> open(k + 1), closed(k + 1, Int(0));
  std::vector<bool> open_valid(k + 1, false);
  for (const auto& x : w) {
    for (std::size_t j = k; j >= 1; --j) {
      Int start = closed[j - 1] + x;
      if (open_valid[j]) {
        Int extend = open[j] + x;
        if (extend > start) start = std::move(extend);
      }
      open[j] = std::move(start);
      open_valid[j] = true;
      if (open[j] > closed[j]) closed[j] = open[j];
    }
  }
  Int best = 0;
  for (const auto& c : closed)
    if (c > best) best = c;
  return best;
}

}  // namespace

KIntervalsSup gamma_k_intervals_exact(const SamplePath& path, std::size_t m,
                                      std::size_t k, std::uint64_t cost_cap) {
  check_m(path, m);
  if (k < 1) throw DomainError("k must be >= 1");
  if (static_cast<long double>(k) * static_cast<long double>(m) >
      static_cast<long double>(cost_cap))
    throw ResourceError("k*m exceeds the interval-DP cost cap");

  std::vector<Dyadic> xs(path.points().begin(), path.points().begin() + m);
  std::sort(xs.begin(), xs.end());

  Int unit = 1;
  unit <<= 128;
  const Int mm(static_cast<unsigned long>(m));
  // Alternating sequence gap_0, point_1, gap_1, ..., point_r, gap_r over the
  // distinct sample values, weighted in units of 1/(m 2^128).
  std::vector<Int> pos, neg;
  pos.reserve(2 * m + 1);
  neg.reserve(2 * m + 1);
  Int prev = 0;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && xs[j] == xs[i]) ++j;
    const Int x = to_int(xs[i].bits());
    const Int gap = (x - prev) * mm;
    const Int mass = Int(static_cast<unsigned long>(j - i)) * unit;
    pos.push_back(-gap);
    neg.push_back(gap);
    pos.push_back(mass);
    neg.push_back(-mass);
    prev = x;
    i = j;
  }
  const Int tail = (unit - prev) * mm;
  pos.push_back(-tail);
  neg.push_back(tail);

  const Int p = best_k_segments(pos, k);
  const Int n = best_k_segments(neg, k);
  const Int scale = unit * mm;
  KIntervalsSup out;
  out.positive_excess = Rat(p, scale);
  out.negative_excess = Rat(n, scale);
  out.value = max(out.positive_excess, out.negative_excess);
  out.attained_in_limit = p > 0 && p >= n;
  return out;
}

DiscrepancyFamily discrepancy_family(const JoinPartition& jp,
                                     const IntervalUnion& C,
                                     const SamplePath& path, std::size_t m,
                                     const Rat& eta) {
  if (eta.sign() <= 0 || eta > Rat(1)) throw DomainError("eta must be in (0,1]");
  check_m(path, m);
  DiscrepancyFamily out;
  std::vector<Interval> parts;
  const Rat half_eta = eta / Rat(2);
  for (std::size_t c = 0; c < jp.cells().size(); ++c) {
    const IntervalUnion& A = jp.cells()[c].set;
    if (discrepancy(intersect(C, A), path, m) > half_eta * A.measure()) {
      out.cells.push_back(c);
      parts.insert(parts.end(), A.parts().begin(), A.parts().end());
    }
  }
  out.union_set = IntervalUnion::normalize(std::move(parts));
  out.measure = out.union_set.measure();
  return out;
}

Rat median(std::vector<Rat> values) {
  if (values.empty()) throw DomainError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / Rat(2);
}

TraceBundle deviation_trace(const SetFamily& fam, std::size_t upto,
                            const ProcessSpec& spec,
                            const std::vector<std::size_t>& m_grid,
                            const std::vector<std::uint64_t>& seeds,
                            unsigned workers) {
  if (m_grid.empty()) throw DomainError("m grid must be nonempty");
  if (seeds.empty()) throw DomainError("seed list must be nonempty");
  const std::vector<Rat> boundary = boundary_points(fam, upto);
  TraceBundle bundle;
  bundle.grid = m_grid;
  bundle.per_seed.resize(seeds.size());
  parallel_for(seeds.size(), workers, [&](std::size_t s) {
    ProcessSpec seeded = spec;
    seeded.seed = seeds[s];
    const SamplePath path = generate(seeded, m_grid.back(), boundary);
    const auto gammas = gamma_m_grid(fam, upto, path, m_grid);
    DeviationTrace t;
    t.seed = seeds[s];
    t.grid = m_grid;
    for (const auto& g : gammas) {
      t.gammas.push_back(g.value);
      t.argmax.push_back(g.argmax);
    }
    bundle.per_seed[s] = std::move(t);
  });
  for (std::size_t g = 0; g < m_grid.size(); ++g) {
    std::vector<Rat> column;
    for (const auto& t : bundle.per_seed) column.push_back(t.gammas[g]);
    bundle.median.push_back(median(std::move(column)));
  }
  return bundle;
}

std::string format_f64(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string trace_csv(const TraceBundle& bundle) {
  std::ostringstream os;
  os << "seed,m,gamma_num,gamma_den,gamma_f64,argmax_member\n";
  for (const auto& t : bundle.per_seed)
    for (std::size_t g = 0; g < t.grid.size(); ++g)
      os << t.seed << ',' << t.grid[g] << ',' << t.gammas[g].num() << ','
         << t.gammas[g].den() << ',' << format_f64(t.gammas[g].to_double())
         << ',' << t.argmax[g] << '\n';
  return os.str();
}

std::string median_csv(const TraceBundle& bundle) {
  std::ostringstream os;
  os << "m,gamma_num,gamma_den,gamma_f64\n";
  for (std::size_t g = 0; g < bundle.grid.size(); ++g)
    os << bundle.grid[g] << ',' << bundle.median[g].num() << ','
       << bundle.median[g].den() << ',' << format_f64(bundle.median[g].to_double())
       << '\n';
  return os.str();
}

}  // namespace ergvc
