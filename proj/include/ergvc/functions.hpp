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

#ifndef ERGVC_FUNCTIONS_HPP
#define ERGVC_FUNCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ergvc/deviation.hpp"
#include "ergvc/dyadic.hpp"
#include "ergvc/interval_set.hpp"
#include "ergvc/process.hpp"
#include "ergvc/rational.hpp"

namespace ergvc {

struct LinearPiece {
  Rat slope;
  Rat intercept;

  Rat at(const Rat& x) const { return slope * x + intercept; }
  friend bool operator==(const LinearPiece&, const LinearPiece&) = default;
};

/// Piecewise-linear function on [0,1): piece i covers [b_i, b_{i+1}).
/// Isolated point values (atoms) override the piece formula; they arise
/// where a level crossing closes a piece on the right.
class PiecewiseFn {
 public:
  /// breakpoints must run strictly from 0 to 1 with one piece per gap;
  /// atoms must lie in [0,1) with distinct positions.
  PiecewiseFn(std::vector<Rat> breakpoints, std::vector<LinearPiece> pieces,
              std::vector<std::pair<Rat, Rat>> atoms = {});

  static PiecewiseFn constant(const Rat& c);
  static PiecewiseFn linear(const Rat& slope, const Rat& intercept);
  /// Value 1 on the set and 0 elsewhere.
  static PiecewiseFn indicator(const IntervalUnion& set);

  const std::vector<Rat>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<LinearPiece>& pieces() const noexcept { return pieces_; }
  const std::vector<std::pair<Rat, Rat>>& atoms() const noexcept { return atoms_; }

  /// Index of the piece holding x in [0,1).
  std::size_t piece_index(const Rat& x) const;
  Rat eval(const Rat& x) const;
  Rat eval(Dyadic x) const { return eval(x.to_rat()); }
  /// Limit from the left at breakpoint i >= 1 (piece i-1 evaluated at b_i).
  Rat left_limit(std::size_t i) const;

  /// Exact ∫_0^1 f dλ.
  Rat integral() const;
  /// sup |f|, attained at a piece end, a left limit or an atom.
  Rat sup_abs() const;

  friend bool operator==(const PiecewiseFn&, const PiecewiseFn&) = default;

 private:
  std::vector<Rat> breakpoints_;
  std::vector<LinearPiece> pieces_;
  std::vector<std::pair<Rat, Rat>> atoms_;
};

/// f̄(x) = M - (2M/K) #{1 <= j <= K : f(x) <= M - 2Mj/K}, built exactly as a
/// step function. Throws DomainError if K = 0 or M < sup|f|.
PiecewiseFn discretize_major(const PiecewiseFn& f, const Rat& M, unsigned K);

/// Value of f̄ for a single value y of f.
Rat discretize_value(const Rat& y, const Rat& M, unsigned K);

struct SandwichCheck {
  bool holds = false;
  std::size_t points_checked = 0;
};

/// Checks f̄ - 2M/K <= f <= f̄ at every breakpoint, left limit, atom and
/// piece midpoint of both functions.
SandwichCheck sandwich_check(const PiecewiseFn& f, const PiecewiseFn& fbar,
                             const Rat& M, unsigned K);

struct Truncation {
  PiecewiseFn fm;
  Rat tail;  ///< 2 ∫ F I(F > M) dλ
};

/// f_M = f I(F <= M). Throws DomainError if F < |f| somewhere.
Truncation truncate_envelope(const PiecewiseFn& f, const PiecewiseFn& F,
                             const Rat& M);

/// {x : f(x) > t} up to finitely many points: each piece contributes the
/// open stretch where its formula exceeds t, closed on the left.
IntervalUnion superlevel_set(const PiecewiseFn& f, const Rat& t);

/// sup over the family of |m^-1 sum f(x_i) - ∫ f dλ|.
GammaValue gamma_fn(const std::vector<PiecewiseFn>& fns, const SamplePath& path,
                    std::size_t m);

/// Points x_i of a path paired with auxiliary uniforms y_i drawn from their
/// own counter stream.
struct GraphSample {
  std::vector<Dyadic> xs;
  std::vector<Dyadic> ys;
  std::uint64_t yseed = 0;

  std::size_t size() const noexcept { return xs.size(); }
};

GraphSample graph_lift(const SamplePath& path, std::uint64_t yseed);

/// m^-1 sum I(y_i <= f(x_i)).
Rat graph_frequency(const PiecewiseFn& f, const GraphSample& gs, std::size_t m);

struct GammaSplit {
  Rat envelope;  ///< M used for (f + M) / 2M; 0 when not rescaled
  Rat gamma;     ///< Γ of the rescaled family
  Rat gamma1;    ///< sup |m^-1 sum I(y <= g(x)) - E g|
  Rat gamma2;    ///< sup |m^-1 sum (I(y <= g(x)) - g(x))|
  bool bound_ok = false;  ///< gamma <= gamma1 + gamma2

  /// The three suprema back in the units of the original family.
  Rat scale() const { return envelope.is_zero() ? Rat(1) : Rat(2) * envelope; }
};

/// With rescale set, every f is replaced by (f + M)/2M for the family
/// envelope M. Without it, values must already lie in [0,1] or DomainError
/// is thrown.
GammaSplit gamma_split(const std::vector<PiecewiseFn>& fns, const GraphSample& gs,
                       std::size_t m, bool rescale = true);

/// Membership rows of the graph sets {(x,y) : y <= g(x)} on the first
/// npoints lifted points (npoints <= 64), with g rescaled as in gamma_split.
std::vector<std::uint64_t> graph_rows(const std::vector<PiecewiseFn>& fns,
                                      const GraphSample& gs, std::size_t npoints,
                                      bool rescale = true);

/// 2 sqrt(ln(2 (m+1)^V) / m).
double lm_bound(std::uint64_t m, unsigned V);

/// count ramps r_j(x) = min(1, x / c_j) with c_j = (j+1)/count. The family
/// is pointwise decreasing in j.
std::vector<PiecewiseFn> ramp_family(std::size_t count);

}  // namespace ergvc

#endif  // ERGVC_FUNCTIONS_HPP
