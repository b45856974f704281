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

#ifndef ERGVC_HARNESS_HPP
#define ERGVC_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ergvc/config.hpp"
#include "ergvc/family.hpp"

namespace ergvc {

inline constexpr const char* kVersion = "0.1.0";

struct RunFile {
  std::string name;
  std::string content;
};

/// Outcome of one subcommand. `json` holds the config echo, results,
/// version, wall time and the exact/float flag of every emitted column.
/// exit_code is 0 on success and 1 when a suite criterion failed; config
/// and resource failures are thrown instead.
struct RunReport {
  int exit_code = 0;
  nlohmann::json json;
  std::vector<RunFile> files;
  std::string text;
};

const std::vector<std::string>& subcommands();

/// Runs a subcommand on a parsed config object. Throws ConfigError for
/// schema violations and ResourceError when a cap is hit.
RunReport run(std::string_view subcommand, const nlohmann::json& config,
              unsigned workers);

/// Builds a registered family from {"name": ..., params}. Names: dyadic,
/// dyadic-level, half-intervals, k-intervals, empty, none, explicit,
/// trajectory, union.
SetFamily family_from_json(const ConfigNode& node, unsigned precision);

/// Ascending grid from "m_grid", or the 1-2-5 sequence up to "m" (always
/// ending at m).
std::vector<std::size_t> m_grid_from_json(const ConfigNode& cfg, std::size_t fallback_m);

/// "seeds": count (giving seed, seed+1, ...) or explicit list.
std::vector<std::uint64_t> seeds_from_json(const ConfigNode& cfg, std::uint64_t base,
                                           std::size_t fallback_count);

}  // namespace ergvc

#endif  // ERGVC_HARNESS_HPP
