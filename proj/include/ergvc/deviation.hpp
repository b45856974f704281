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

#ifndef ERGVC_DEVIATION_HPP
#define ERGVC_DEVIATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ergvc/family.hpp"
#include "ergvc/process.hpp"
#include "ergvc/vc.hpp"

namespace ergvc {

/// |count/m - measure| with count the hits of `set` among the first m points.
/// Throws DomainError unless 1 <= m <= path.size().
Rat discrepancy(const Member& set, const SamplePath& path, std::size_t m);
Rat discrepancy(const IntervalUnion& set, const SamplePath& path, std::size_t m);

/// Number of the first m points inside `set`.
std::size_t hit_count(const Member& set, const SamplePath& path, std::size_t m);

/// Budgeted supremum: the largest discrepancy among members [0, budget),
/// with the first index attaining it. An empty family gives value 0 and
/// argmax == budget == 0.
struct GammaValue {
  Rat value;
  std::size_t argmax = 0;
  std::size_t budget = 0;
};

GammaValue gamma_m(const SetFamily& fam, std::size_t upto,
                   const SamplePath& path, std::size_t m);

/// gamma_m at every m of an ascending grid, with one pass over the path per
/// member.
std::vector<GammaValue> gamma_m_grid(const SetFamily& fam, std::size_t upto,
                                     const SamplePath& path,
                                     const std::vector<std::size_t>& m_grid,
                                     unsigned workers = 1);

/// Doubles the budget from `start` until the value stops changing or the
/// family budget is exhausted. `stable` reports which of the two happened.
struct AdaptiveGamma {
  GammaValue gamma;
  bool stable = false;
};
AdaptiveGamma gamma_m_adaptive(const SetFamily& fam, const SamplePath& path,
                               std::size_t m, std::size_t start = 16);

/// Exact sup over all t of |F_m(t) - t| for the half-intervals [0,t):
/// max_i max(i/m - x_(i), x_(i) - (i-1)/m).
Rat ks_exact(const SamplePath& path, std::size_t m);

struct KIntervalsSup {
  Rat value;
  Rat positive_excess;  ///< sup of (empirical - measure)
  Rat negative_excess;  ///< sup of (measure - empirical)
  /// True when the supremum is approached by shrinking intervals around
  /// sample points rather than attained by a fixed union.
  bool attained_in_limit = false;
};

inline constexpr std::uint64_t kDefaultIntervalCostCap = 200'000'000;

/// Exact supremum of |empirical - measure| over unions of at most k
/// intervals, by a best-k-segments dynamic program over the alternating
/// gap/point sequence. Throws ResourceError when k*m exceeds `cost_cap`.
KIntervalsSup gamma_k_intervals_exact(const SamplePath& path, std::size_t m,
                                      std::size_t k,
                                      std::uint64_t cost_cap = kDefaultIntervalCostCap);

/// Cells A of a join whose restricted discrepancy Δ(A ∩ C) exceeds
/// (eta/2) λ(A), together with their union G and λ(G).
struct DiscrepancyFamily {
  std::vector<std::size_t> cells;  ///< indices into jp.cells()
  IntervalUnion union_set;
  Rat measure;
};

DiscrepancyFamily discrepancy_family(const JoinPartition& jp,
                                     const IntervalUnion& C,
                                     const SamplePath& path, std::size_t m,
                                     const Rat& eta);

struct DeviationTrace {
  std::uint64_t seed = 0;
  std::vector<std::size_t> grid;
  std::vector<Rat> gammas;
  std::vector<std::size_t> argmax;
};

struct TraceBundle {
  std::vector<DeviationTrace> per_seed;
  std::vector<std::size_t> grid;
  std::vector<Rat> median;
};

/// Per-seed Γ traces over an ascending m grid plus the per-m median. Paths
/// are generated with `spec` reseeded per seed and the family's boundary
/// points registered for jitter.
TraceBundle deviation_trace(const SetFamily& fam, std::size_t upto,
                            const ProcessSpec& spec,
                            const std::vector<std::size_t>& m_grid,
                            const std::vector<std::uint64_t>& seeds,
                            unsigned workers = 1);

/// Median of a nonempty list: the middle value, or the mean of the two
/// middle values.
Rat median(std::vector<Rat> values);

/// seed,m,gamma_num,gamma_den,gamma_f64,argmax_member
std::string trace_csv(const TraceBundle& bundle);
/// m,gamma_num,gamma_den,gamma_f64
std::string median_csv(const TraceBundle& bundle);

/// Shortest round-trip decimal form of a double.
std::string format_f64(double v);

}  // namespace ergvc

#endif  // ERGVC_DEVIATION_HPP
