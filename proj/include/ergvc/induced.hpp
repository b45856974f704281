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

#ifndef ERGVC_INDUCED_HPP
#define ERGVC_INDUCED_HPP

#include <cstddef>
#include <vector>

#include "ergvc/interval_set.hpp"
#include "ergvc/process.hpp"
#include "ergvc/rational.hpp"

namespace ergvc {

/// First L visits of a one-sided path to A. The first visit plays the role
/// of time 0, so return times are tau_l = hits[l] - hits[0] with tau_0 = 0.
struct InducedPath {
  IntervalUnion A;
  std::vector<std::size_t> hits;   ///< 1-based indices into the base path
  std::vector<Dyadic> points;      ///< base[hits[l] - 1]

  std::size_t size() const noexcept { return hits.size(); }
  std::size_t tau(std::size_t l) const { return hits.at(l) - hits.front(); }
};

/// Throws PreconditionError if λ(A) = 0 and InsufficientDataError (carrying
/// the number of hits found) if the path visits A fewer than L times.
InducedPath induce(const SamplePath& path, const IntervalUnion& A, std::size_t L);

/// λ(A) tau_{m-1} / m, for 1 <= m <= ip.size().
Rat wm(const InducedPath& ip, std::size_t m);

struct XtildexCheck {
  Rat lhs;     ///< m^-1 sum_{i<m} I(X~_i in C)
  Rat middle;  ///< m^-1 sum over base indices in [tau_0, tau_{m-1}] of I(X_j in C ∩ A)
  Rat rhs;     ///< λ(A)^-1 W_m tau_{m-1}^-1 sum over the same indices
  bool equal = false;
};

/// Evaluates the three members of the induced-frequency identity exactly.
/// Needs 2 <= m <= ip.size() so that tau_{m-1} > 0.
XtildexCheck verify_xtildex(const InducedPath& ip, const SamplePath& base,
                            const IntervalUnion& C, std::size_t m);

/// Average gap between consecutive hits. Needs at least 2 hits.
Rat mean_return_time(const InducedPath& ip);

struct TransferCheck {
  Rat induced_gamma;    ///< sup_C |freq of C among X~ - λ(C ∩ A)/λ(A)|
  Rat base_gamma;       ///< sup_C |tau^-1 (hits in C ∩ A) - λ(C ∩ A)|
  Rat w;                ///< W_m
  Rat exact_bound;      ///< base_gamma/λ(A) - |W_m - 1|/W_m
  Rat asymptotic_bound; ///< base_gamma/λ(A) - |W_m - 1|
  bool exact_holds = false;
  bool asymptotic_holds = false;
};

/// Compares the induced supremum with the supremum of the base path over
/// C ∩ A, for the sets of a finite family. The base sum runs over the m
/// hits in [tau_0, tau_{m-1}] and is normalized by tau_{m-1}. The
/// subtracted term uses sup_C (hits in C ∩ A)/tau_{m-1} = m/tau_{m-1} =
/// λ(A)/W_m, which makes exact_bound a valid finite-m lower bound; the
/// form with |W_m - 1| alone only holds in the limit.
TransferCheck transfer_check(const InducedPath& ip,
                             const std::vector<IntervalUnion>& family,
                             std::size_t m);

}  // namespace ergvc

#endif  // ERGVC_INDUCED_HPP
