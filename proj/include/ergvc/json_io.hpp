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

#ifndef ERGVC_JSON_IO_HPP
#define ERGVC_JSON_IO_HPP

#include <cstdint>

#include <json.hpp>

#include "ergvc/config.hpp"
#include "ergvc/functions.hpp"
#include "ergvc/isomorphism.hpp"
#include "ergvc/process.hpp"

namespace ergvc {

/// {"kind": "iid" | "rotation" | "doubling" | "markov", ...}. Rotation takes
/// "alpha" ("golden", a 0x hex fraction or a rational) and "x0"; doubling
/// takes "bits"; markov takes "matrix" (rows of rationals) and "cells"
/// (interval strings).
ProcessSpec process_from_json(const ConfigNode& node, std::uint64_t seed,
                              unsigned precision);
nlohmann::json process_to_json(const ProcessSpec& spec);

/// {"breakpoints": [...], "pieces": [{"value": r} | {"slope": r,
/// "intercept": r}], "atoms": [[x, v], ...]} with rationals as strings.
PiecewiseFn function_from_json(const ConfigNode& node);
nlohmann::json function_to_json(const PiecewiseFn& f);

/// {"stage": n, "pieces": [[src_lo, src_hi, beta], ...]} where beta is the
/// left end of the image of [src_lo, src_hi).
nlohmann::json translation_to_json(const PiecewiseTranslation& phi);
PiecewiseTranslation translation_from_json(const ConfigNode& node);

/// Rational pair as {"num": "...", "den": "...", "f64": x}.
nlohmann::json rat_json(const Rat& r);

}  // namespace ergvc

#endif  // ERGVC_JSON_IO_HPP
