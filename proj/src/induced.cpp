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

#include "ergvc/induced.hpp"

#include "ergvc/error.hpp"

namespace ergvc {

namespace {

void check_m(const InducedPath& ip, std::size_t m, std::size_t least) {
  if (m < least || m > ip.size())
    throw DomainError("m=" + std::to_string(m) + " outside [" +
                      std::to_string(least) + ", " + std::to_string(ip.size()) + "]");
}

Rat ratio(std::size_t a, std::size_t b) {
  return Rat(Int(static_cast<unsigned long>(a)), Int(static_cast<unsigned long>(b)));
}

std::size_t count_in(const IntervalUnion& C, const InducedPath& ip, std::size_t m) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < m; ++i) n += C.contains(ip.points[i]);
  return n;
}

}  // namespace

InducedPath induce(const SamplePath& path, const IntervalUnion& A, std::size_t L) {
  if (A.measure().is_zero()) throw PreconditionError("induced set has measure 0");
  InducedPath ip;
  ip.A = A;
  for (std::size_t i = 0; i < path.size() && ip.hits.size() < L; ++i) {
    if (A.contains(path[i])) {
      ip.hits.push_back(i + 1);
      ip.points.push_back(path[i]);
    }
  }
  if (ip.hits.size() < L)
    throw InsufficientDataError("path visits A " + std::to_string(ip.hits.size()) +
                                    " times, " + std::to_string(L) + " requested",
                                ip.hits.size());
  return ip;
}

Rat wm(const InducedPath& ip, std::size_t m) {
  check_m(ip, m, 1);
  return ip.A.measure() * ratio(ip.tau(m - 1), m);
}

XtildexCheck verify_xtildex(const InducedPath& ip, const SamplePath& base,
                            const IntervalUnion& C, std::size_t m) {
  check_m(ip, m, 2);
  if (ip.hits[m - 1] > base.size()) throw DomainError("base path shorter than the hits");
  const IntervalUnion CA = intersect(C, ip.A);
  XtildexCheck out;
  out.lhs = ratio(count_in(C, ip, m), m);
  // Walk the base path itself rather than the recorded hits.
  std::size_t base_count = 0;
  for (std::size_t j = ip.hits[0]; j <= ip.hits[m - 1]; ++j)
    base_count += CA.contains(base[j - 1]);
  out.middle = ratio(base_count, m);
  const std::size_t tau = ip.tau(m - 1);
  out.rhs = wm(ip, m) / ip.A.measure() * ratio(base_count, tau);
  out.equal = out.lhs == out.middle && out.middle == out.rhs;
  return out;
}

Rat mean_return_time(const InducedPath& ip) {
  if (ip.size() < 2) throw InsufficientDataError("need at least 2 hits", ip.size());
  return ratio(ip.hits.back() - ip.hits.front(), ip.size() - 1);
}

TransferCheck transfer_check(const InducedPath& ip,
                             const std::vector<IntervalUnion>& family,
                             std::size_t m) {
  check_m(ip, m, 2);
  const Rat lambda = ip.A.measure();
  const std::size_t tau = ip.tau(m - 1);
  TransferCheck out;
  for (const auto& C : family) {
    const IntervalUnion CA = intersect(C, ip.A);
    const std::size_t hits = count_in(CA, ip, m);
    out.induced_gamma = max(out.induced_gamma, abs(ratio(hits, m) - CA.measure() / lambda));
    out.base_gamma = max(out.base_gamma, abs(ratio(hits, tau) - CA.measure()));
  }
  out.w = wm(ip, m);
  const Rat gap = abs(out.w - Rat(1));
  out.exact_bound = out.base_gamma / lambda - gap / out.w;
  out.asymptotic_bound = out.base_gamma / lambda - gap;
  out.exact_holds = out.induced_gamma >= out.exact_bound;
  out.asymptotic_holds = out.induced_gamma >= out.asymptotic_bound;
  return out;
}

}  // namespace ergvc
