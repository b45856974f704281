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

#ifndef ERGVC_VC_HPP
#define ERGVC_VC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ergvc/family.hpp"
#include "ergvc/interval_set.hpp"
#include "ergvc/rational.hpp"

namespace ergvc {

inline constexpr std::size_t kMaxTracePoints = 64;

/// Membership pattern of each family member on a point set. Bit j of a row
/// is set when the member contains points[j].
struct TraceTable {
  std::vector<Rat> points;
  std::vector<std::uint64_t> rows;

  /// Rows with duplicates removed, in first-seen order.
  std::vector<std::uint64_t> distinct_rows() const;
};

/// Throws DomainError on duplicate points and ResourceError above 64 points.
TraceTable trace_table(const std::vector<Rat>& points, const SetFamily& fam,
                       std::size_t upto);

/// Number of distinct traces C ∩ D over the first `upto` members.
std::uint64_t shatter_coefficient(const std::vector<Rat>& points,
                                  const SetFamily& fam, std::size_t upto);

/// Distinct projections of `rows` onto the points selected by `subset`.
std::uint64_t projection_count(std::span<const std::uint64_t> rows,
                               std::uint64_t subset);

bool is_shattered(std::span<const std::uint64_t> rows, std::uint64_t subset);

struct VcResult {
  unsigned dim = 0;
  /// Indices (into the grid) of the first shattered dim-subset found.
  std::vector<std::size_t> witness_index;
  std::vector<Rat> witness;
  /// True when the search stopped at max_k with a shattered set, so the
  /// grid-relative dimension is only known to be >= dim.
  bool lower_bound = false;
};

/// Exhaustive grid-relative VC dimension over membership rows. Subsets are
/// searched in lexicographic order; the first witness is kept.
VcResult vc_dimension_rows(std::span<const std::uint64_t> rows,
                           std::size_t npoints, unsigned max_k);

VcResult vc_dimension(const SetFamily& fam, std::size_t upto,
                      const std::vector<Rat>& grid, unsigned max_k);

/// The 2^order cell midpoints (2j+1) / 2^(order+1).
std::vector<Rat> dyadic_grid(unsigned order);

struct SauerBound {
  Int exact;  ///< sum_{j<=V} C(m, j)
  Int poly;   ///< (m+1)^V
};

/// Throws DomainError when m < V.
SauerBound sauer_bound(std::uint64_t m, std::uint64_t V);

struct JoinCell {
  /// Bit i set when the cell lies inside sources[i].
  std::uint64_t sign = 0;
  IntervalUnion set;
};

/// Nonempty cells of A_1 v ... v A_k, in order of their leftmost point.
class JoinPartition {
 public:
  JoinPartition(std::vector<IntervalUnion> sources, std::vector<JoinCell> cells)
      : sources_(std::move(sources)), cells_(std::move(cells)) {}

  const std::vector<IntervalUnion>& sources() const noexcept { return sources_; }
  const std::vector<JoinCell>& cells() const noexcept { return cells_; }
  std::size_t k() const noexcept { return sources_.size(); }
  bool is_full() const noexcept {
    return k() < 64 && cells_.size() == (std::uint64_t{1} << k());
  }
  const JoinCell* find(std::uint64_t sign) const;

 private:
  std::vector<IntervalUnion> sources_;
  std::vector<JoinCell> cells_;
};

inline constexpr std::size_t kDefaultJoinCap = 20;

/// Throws PreconditionError for an empty input and ResourceError above cap.
JoinPartition join(const std::vector<IntervalUnion>& sets,
                   std::size_t cap = kDefaultJoinCap);

/// Given a full join of 2^k sets C(U), where sources[U] is C(U) with U read
/// as a bitmask over [k], returns points x_1..x_k with x_i in C(V) exactly
/// when i is in V. Each point is the midpoint of the first interval of its
/// cell. Throws PreconditionError when the join is not full or the source
/// count is not a power of two.
std::vector<Rat> full_join_witness(const JoinPartition& jp);

}  // namespace ergvc

#endif  // ERGVC_VC_HPP
