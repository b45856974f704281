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

#ifndef ERGVC_CONFIG_HPP
#define ERGVC_CONFIG_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ergvc/interval_set.hpp"
#include "ergvc/rational.hpp"

namespace ergvc {

/// Read-only view of one JSON config value that knows its JSON pointer.
/// Every accessor throws ConfigError naming the offending pointer.
class ConfigNode {
 public:
  ConfigNode(const nlohmann::json& value, std::string pointer)
      : value_(&value), pointer_(std::move(pointer)) {}

  const nlohmann::json& json() const noexcept { return *value_; }
  const std::string& pointer() const noexcept { return pointer_; }

  bool has(std::string_view key) const;
  ConfigNode at(std::string_view key) const;
  std::optional<ConfigNode> get(std::string_view key) const;
  std::vector<ConfigNode> items() const;

  /// Rejects keys outside `allowed`.
  void only(std::initializer_list<std::string_view> allowed) const;

  std::uint64_t as_uint(std::uint64_t lo = 0, std::uint64_t hi = UINT64_MAX) const;
  bool as_bool() const;
  std::string as_string() const;
  /// Integer, or string "p" / "p/q".
  Rat as_rat() const;
  /// Interval DSL string.
  IntervalUnion as_set() const;

  std::uint64_t uint_or(std::string_view key, std::uint64_t fallback,
                        std::uint64_t lo = 0, std::uint64_t hi = UINT64_MAX) const;
  bool bool_or(std::string_view key, bool fallback) const;
  std::string string_or(std::string_view key, std::string fallback) const;
  Rat rat_or(std::string_view key, const Rat& fallback) const;

  [[noreturn]] void fail(const std::string& what) const;

 private:
  void require_object() const;

  const nlohmann::json* value_;
  std::string pointer_;
};

/// Escapes a key for use as a JSON pointer token.
std::string pointer_token(std::string_view key);

}  // namespace ergvc

#endif  // ERGVC_CONFIG_HPP
