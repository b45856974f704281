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

#ifndef ERGVC_ORACLE_HPP
#define ERGVC_ORACLE_HPP

#include <cstddef>

#include "ergvc/process.hpp"
#include "ergvc/rational.hpp"

namespace ergvc {

/// Exhaustive sup of |empirical - measure| over unions of at most k
/// half-open intervals. Endpoints range over 0, 1 and both one-sided
/// limits at every sample point; the count of a candidate union is decided
/// symbolically and its measure from the limit values. Cost grows like
/// (2m+2)^(2k); meant for m <= 8 and k <= 2.
Rat gamma_k_intervals_brute(const SamplePath& path, std::size_t m, std::size_t k);

}  // namespace ergvc

#endif  // ERGVC_ORACLE_HPP
