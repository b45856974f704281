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

#ifndef ERGVC_DSL_HPP
#define ERGVC_DSL_HPP

#include <string>
#include <string_view>

#include "ergvc/interval_set.hpp"

namespace ergvc {

/// Parses the interval-union text form
///
///   union := term ('u' term)*
///   term  := '[' rat ',' rat ')'
///   rat   := int ('/' int)?
///
/// Whitespace between tokens is ignored. The printer's "{}" (empty set) is
/// accepted as well. Throws SyntaxError (with byte position) on malformed
/// input and DomainError for lo >= hi or endpoints outside [0,1].
IntervalUnion parse_interval_union(std::string_view text);

/// Canonical printer; inverse of the parser on normalized unions.
inline std::string print_interval_union(const IntervalUnion& u) {
  return u.str();
}

}  // namespace ergvc

#endif  // ERGVC_DSL_HPP
