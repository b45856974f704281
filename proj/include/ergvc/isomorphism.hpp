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

#ifndef ERGVC_ISOMORPHISM_HPP
#define ERGVC_ISOMORPHISM_HPP

#include <vector>

#include "ergvc/interval_set.hpp"
#include "ergvc/rational.hpp"

namespace ergvc {

/// A cell of the current join and the left end of the interval it is
/// packed onto.
struct TranslationPiece {
  IntervalUnion cell;
  Rat beta;

  Rat image_hi() const { return beta + cell.measure(); }
};

/// One source interval and where it lands: [lo, hi) -> [image_lo, image_lo + hi - lo).
struct TranslationSegment {
  Interval source;
  Rat image_lo;

  Rat shift() const { return image_lo - source.lo; }
};

/// Measure-preserving map of [0,1) that packs each cell A of a partition,
/// in left-to-right order of its parts, onto [beta(A), beta(A) + λ(A)).
/// Pieces are kept in increasing beta order.
class PiecewiseTranslation {
 public:
  static PiecewiseTranslation identity();

  /// Rebuilds a map from its segments, one piece per segment. Throws
  /// DomainError if sources or images do not tile [0,1).
  static PiecewiseTranslation from_segments(std::vector<TranslationSegment> segments,
                                            unsigned stage);

  const std::vector<TranslationPiece>& pieces() const noexcept { return pieces_; }
  unsigned stage() const noexcept { return stage_; }

  /// beta(A) + λ([0,x] ∩ A) for the cell A holding x. x must be in [0,1).
  Rat apply(const Rat& x) const;

  std::vector<TranslationSegment> segments() const;

  /// Exact image of a set under the map.
  IntervalUnion image(const IntervalUnion& set) const;
  /// Exact preimage of a set under the map.
  IntervalUnion preimage(const IntervalUnion& set) const;

  /// Largest cell diameter; bounds |φ_N(x) - φ_M(x)| for M >= N when the
  /// sequence keeps refining.
  Rat max_cell_diameter() const;
  Rat max_cell_measure() const;

  /// Throws std::logic_error unless sources and images both tile [0,1).
  void check_invariants() const;

 private:
  PiecewiseTranslation(std::vector<TranslationPiece> pieces, unsigned stage)
      : pieces_(std::move(pieces)), stage_(stage) {}

  friend PiecewiseTranslation phi_step(const PiecewiseTranslation&,
                                       const IntervalUnion&);

  std::vector<TranslationPiece> pieces_;
  unsigned stage_ = 0;
};

/// φ_1: packs C1 onto [0, λ(C1)) and its complement onto [λ(C1), 1).
PiecewiseTranslation phi_one(const IntervalUnion& c1);

/// Splits every cell A into A ∩ C (kept at beta(A)) followed by A \ C (at
/// beta(A) + λ(A ∩ C)); empty parts are dropped.
PiecewiseTranslation phi_step(const PiecewiseTranslation& phi,
                              const IntervalUnion& next);

/// φ_n for the sequence C_1..C_n.
PiecewiseTranslation build_phi(const std::vector<IntervalUnion>& sets);

/// {x : binary digit j of x is 1}, j >= 1.
IntervalUnion dyadic_digit_set(unsigned j);

/// B_1, C_1, B_2, C_2, ... with B_j = dyadic_digit_set(j). Joins of the
/// result refine D_n, so cell diameters shrink to zero.
std::vector<IntervalUnion> interleave_dyadic(const std::vector<IntervalUnion>& sets);

struct SetImage {
  IntervalUnion image;  ///< φ(C)
  IntervalUnion packed; ///< U(C): union of [beta(A), beta(A)+λ(A)) over cells A ⊆ C
  Rat symdiff_measure;
};

/// Throws DomainError when C is not a union of cells of the map.
SetImage image_of_set(const PiecewiseTranslation& phi, const IntervalUnion& c);

/// max over probes B of |λ(φ^-1 B) - λ(B)|.
Rat verify_measure_preserving(const PiecewiseTranslation& phi,
                              const std::vector<IntervalUnion>& probes);

/// C_j = ∪_i [2i/2^(j+1), (2i+1)/2^(j+1)), the sets whose limit map is the
/// doubling map.
std::vector<IntervalUnion> doubling_sets(unsigned n);

struct DoublingCheck {
  Rat max_deviation;
  Rat worst_point;
  Rat bound;  ///< 2^(1-n)
};

/// max over x = j / 2^probe_order of |φ_n(x) - (2x mod 1)|.
DoublingCheck doubling_limit_check(unsigned n, unsigned probe_order = 10);

}  // namespace ergvc

#endif  // ERGVC_ISOMORPHISM_HPP
