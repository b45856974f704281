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

#include "ergvc/vc.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "ergvc/error.hpp"

namespace ergvc {

std::vector<std::uint64_t> TraceTable::distinct_rows() const {
  std::vector<std::uint64_t> out;
  std::unordered_set<std::uint64_t> seen;
  for (auto r : rows)
    if (seen.insert(r).second) out.push_back(r);
  return out;
}

TraceTable trace_table(const std::vector<Rat>& points, const SetFamily& fam,
                       std::size_t upto) {
  if (points.size() > kMaxTracePoints)
    throw ResourceError("trace tables hold at most 64 points");
  std::vector<Rat> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("point set contains duplicates");
  TraceTable t{points, {}};
  t.rows.reserve(upto);
  for (const auto& m : fam.members(upto)) {
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (m.contains(points[j])) row |= std::uint64_t{1} << j;
    t.rows.push_back(row);
  }
  return t;
}

std::uint64_t shatter_coefficient(const std::vector<Rat>& points,
                                  const SetFamily& fam, std::size_t upto) {
  return trace_table(points, fam, upto).distinct_rows().size();
}

namespace {

// Packs the bits of `row` selected by `subset` into the low bits.
std::uint64_t extract(std::uint64_t row, std::uint64_t subset) {
  std::uint64_t out = 0;
  unsigned bit = 0;
  while (subset) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(subset));
    out |= ((row >> j) & 1u) << bit++;
    subset &= subset - 1;
  }
  return out;
}

}  // namespace

std::uint64_t projection_count(std::span<const std::uint64_t> rows,
                               std::uint64_t subset) {
  std::unordered_set<std::uint64_t> seen;
  for (auto r : rows) seen.insert(r & subset);
  return seen.size();
}

bool is_shattered(std::span<const std::uint64_t> rows, std::uint64_t subset) {
  const int k = std::popcount(subset);
  if (k >= 64) return false;
  return projection_count(rows, subset) == (std::uint64_t{1} << k);
}

VcResult vc_dimension_rows(std::span<const std::uint64_t> rows_in,
                           std::size_t npoints, unsigned max_k) {
  if (npoints > kMaxTracePoints)
    throw ResourceError("VC search grids hold at most 64 points");
  if (max_k > npoints)
    throw PreconditionError("max_k exceeds the grid size");
  if (max_k > 24) throw ResourceError("max_k above 24 not supported");

  std::vector<std::uint64_t> rows;
  {
    std::unordered_set<std::uint64_t> seen;
    for (auto r : rows_in)
      if (seen.insert(r).second) rows.push_back(r);
  }

  VcResult result;
  std::vector<std::uint32_t> stamp;
  std::uint32_t generation = 0;
  for (unsigned k = 1; k <= max_k; ++k) {
    const std::uint64_t need = std::uint64_t{1} << k;
    if (rows.size() < need) break;
    stamp.assign(need, 0);
    generation = 0;
    std::vector<std::size_t> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      std::uint64_t subset = 0;
      for (auto i : idx) subset |= std::uint64_t{1} << i;
      ++generation;
      std::uint64_t distinct = 0;
      for (auto r : rows) {
        auto& s = stamp[extract(r, subset)];
        if (s != generation) {
          s = generation;
          if (++distinct == need) break;
        }
      }
      if (distinct == need) {
        result.dim = k;
        result.witness_index = idx;
        found = true;
        break;
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == npoints - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    // Shattering is hereditary: no shattered k-set means none larger.
    if (!found) break;
    if (k == max_k && max_k < npoints) result.lower_bound = true;
  }
  return result;
}

VcResult vc_dimension(const SetFamily& fam, std::size_t upto,
                      const std::vector<Rat>& grid, unsigned max_k) {
  const TraceTable t = trace_table(grid, fam, upto);
  VcResult r = vc_dimension_rows(t.rows, grid.size(), max_k);
  for (auto i : r.witness_index) r.witness.push_back(grid[i]);
  return r;
}

std::vector<Rat> dyadic_grid(unsigned order) {
  if (order > 6) throw ResourceError("dyadic grid order above 6 exceeds 64 points");
  std::vector<Rat> out;
  const long den = 1L << (order + 1);
  for (long j = 0; j < (1L << order); ++j) out.emplace_back(2 * j + 1, den);
  return out;
}

SauerBound sauer_bound(std::uint64_t m, std::uint64_t V) {
  if (m < V)
    throw DomainError("Sauer bound needs m >= V (m=" + std::to_string(m) +
                      ", V=" + std::to_string(V) + ")");
  SauerBound b{0, 0};
  for (std::uint64_t j = 0; j <= V; ++j) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), m, j);
    b.exact += c;
  }
  mpz_ui_pow_ui(b.poly.get_mpz_t(), m + 1, V);
  return b;
}

const JoinCell* JoinPartition::find(std::uint64_t sign) const {
  for (const auto& c : cells_)
    if (c.sign == sign) return &c;
  return nullptr;
}

JoinPartition join(const std::vector<IntervalUnion>& sets, std::size_t cap) {
  if (sets.empty()) throw PreconditionError("join needs at least one set");
  if (sets.size() > cap || sets.size() >= 64)
    throw ResourceError("join of " + std::to_string(sets.size()) +
                        " sets exceeds cap " + std::to_string(cap));
  std::vector<Rat> cuts{Rat(0), Rat(1)};
  for (const auto& s : sets) {
    auto e = s.endpoints();
    cuts.insert(cuts.end(), e.begin(), e.end());
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Sweep the elementary segments; every source is constant on each one.
  std::vector<std::size_t> cursor(sets.size(), 0);
  std::vector<std::uint64_t> order;
  std::unordered_map<std::uint64_t, std::vector<Interval>> pieces;
  for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
    const Rat& lo = cuts[t];
    std::uint64_t sign = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto& parts = sets[i].parts();
      auto& c = cursor[i];
      while (c < parts.size() && parts[c].hi <= lo) ++c;
      if (c < parts.size() && parts[c].lo <= lo) sign |= std::uint64_t{1} << i;
    }
    auto [it, fresh] = pieces.try_emplace(sign);
    if (fresh) order.push_back(sign);
    it->second.push_back({lo, cuts[t + 1]});
  }
  std::vector<JoinCell> cells;
  cells.reserve(order.size());
  for (auto sign : order)
    cells.push_back({sign, IntervalUnion::normalize(std::move(pieces[sign]))});
  return JoinPartition(sets, std::move(cells));
}

std::vector<Rat> full_join_witness(const JoinPartition& jp) {
  const std::size_t n = jp.k();
  if (n < 2 || !std::has_single_bit(n))
    throw PreconditionError("witness needs 2^k sources indexed by subsets of [k]");
  if (!jp.is_full()) throw PreconditionError("join is not full");
  const unsigned k = static_cast<unsigned>(std::countr_zero(n));
  std::vector<Rat> points;
  points.reserve(k);
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t sign = 0;
    for (std::size_t u = 0; u < n; ++u)
      if ((u >> i) & 1u) sign |= std::uint64_t{1} << u;
    const JoinCell* cell = jp.find(sign);
    const Interval& first = cell->set.parts().front();
    points.push_back((first.lo + first.hi) / Rat(2));
  }
  const TraceTable t =
      trace_table(points, explicit_family("witness-check", jp.sources()), n);
  if (!is_shattered(t.rows, (std::uint64_t{1} << k) - 1))
    throw std::logic_error("witness points are not shattered");
  return points;
}

}  // namespace ergvc
