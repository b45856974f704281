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

#include "ergvc/config.hpp"

#include <algorithm>

#include "ergvc/dsl.hpp"
#include "ergvc/error.hpp"

namespace ergvc {

std::string pointer_token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

void ConfigNode::fail(const std::string& what) const {
  throw ConfigError(pointer_.empty() ? "/" : pointer_, what);
}

void ConfigNode::require_object() const {
  if (!value_->is_object()) fail("expected an object");
}

bool ConfigNode::has(std::string_view key) const {
  require_object();
  return value_->contains(key);
}

ConfigNode ConfigNode::at(std::string_view key) const {
  require_object();
  const auto it = value_->find(key);
  if (it == value_->end())
    ConfigNode(*value_, pointer_ + "/" + pointer_token(key)).fail("required field missing");
  return ConfigNode(*it, pointer_ + "/" + pointer_token(key));
}

std::optional<ConfigNode> ConfigNode::get(std::string_view key) const {
  if (!has(key)) return std::nullopt;
  return at(key);
}

std::vector<ConfigNode> ConfigNode::items() const {
  if (!value_->is_array()) fail("expected an array");
  std::vector<ConfigNode> out;
  for (std::size_t i = 0; i < value_->size(); ++i)
    out.emplace_back((*value_)[i], pointer_ + "/" + std::to_string(i));
  return out;
}

void ConfigNode::only(std::initializer_list<std::string_view> allowed) const {
  require_object();
  for (const auto& [key, v] : value_->items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      ConfigNode(v, pointer_ + "/" + pointer_token(key)).fail("unknown field");
}

std::uint64_t ConfigNode::as_uint(std::uint64_t lo, std::uint64_t hi) const {
  if (!value_->is_number_integer() || (value_->is_number_integer() && !value_->is_number_unsigned() &&
                                       value_->get<std::int64_t>() < 0))
    fail("expected a non-negative integer");
  const auto v = value_->get<std::uint64_t>();
  if (v < lo || v > hi)
    fail("value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
         std::to_string(hi) + "]");
  return v;
}

bool ConfigNode::as_bool() const {
  if (!value_->is_boolean()) fail("expected a boolean");
  return value_->get<bool>();
}

std::string ConfigNode::as_string() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

Rat ConfigNode::as_rat() const {
  if (value_->is_number_integer()) return Rat(value_->get<long>());
  if (!value_->is_string()) fail("expected a rational as integer or \"p/q\" string");
  try {
    return Rat::parse(value_->get<std::string>());
  } catch (const Error& e) {
    fail(e.what());
  }
}

IntervalUnion ConfigNode::as_set() const {
  const std::string text = as_string();
  try {
    return parse_interval_union(text);
  } catch (const Error& e) {
    fail(e.what());
  }
}

std::uint64_t ConfigNode::uint_or(std::string_view key, std::uint64_t fallback,
                                  std::uint64_t lo, std::uint64_t hi) const {
  if (auto n = get(key)) return n->as_uint(lo, hi);
  return fallback;
}

bool ConfigNode::bool_or(std::string_view key, bool fallback) const {
  if (auto n = get(key)) return n->as_bool();
  return fallback;
}

std::string ConfigNode::string_or(std::string_view key, std::string fallback) const {
  if (auto n = get(key)) return n->as_string();
  return fallback;
}

Rat ConfigNode::rat_or(std::string_view key, const Rat& fallback) const {
  if (auto n = get(key)) return n->as_rat();
  return fallback;
}

}  // namespace ergvc
