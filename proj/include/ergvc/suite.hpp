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

#ifndef ERGVC_SUITE_HPP
#define ERGVC_SUITE_HPP

#include <string>
#include <vector>

namespace ergvc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  /// Exact outputs of the experiment, compared byte for byte by the
  /// determinism criterion.
  std::string digest;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

/// Runs the listed acceptance experiments (ids 1..10) in order.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, unsigned workers);

/// One line per criterion: "criterion <id> PASS|FAIL <name>: <detail>".
std::string format_criteria(const std::vector<CriterionResult>& results);

}  // namespace ergvc

#endif  // ERGVC_SUITE_HPP
