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

#include "ergvc/json_io.hpp"

#include "ergvc/error.hpp"

namespace ergvc {

using nlohmann::json;

namespace {

Dyadic alpha_from(const ConfigNode& node) {
  if (node.json().is_string()) {
    const std::string text = node.as_string();
    if (text == "golden") return golden_alpha();
    if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
      try {
        return Dyadic::parse_hex(text);
      } catch (const Error& e) {
        node.fail(e.what());
      }
    }
  }
  const Rat r = node.as_rat();
  if (r.sign() <= 0 || r >= Rat(1)) node.fail("alpha must be in (0,1)");
  return Dyadic::floor_of(r, kMaxPrecision);
}

}  // namespace

ProcessSpec process_from_json(const ConfigNode& node, std::uint64_t seed,
                              unsigned precision) {
  ProcessSpec spec;
  spec.seed = seed;
  spec.precision = precision;
  const std::string kind = node.at("kind").as_string();
  if (kind == "iid") {
    node.only({"kind"});
    spec.params = IidParams{};
  } else if (kind == "rotation") {
    node.only({"kind", "alpha", "x0"});
    RotationParams p;
    if (auto a = node.get("alpha")) p.alpha = alpha_from(*a);
    p.x0 = node.rat_or("x0", Rat(0));
    if (p.x0.sign() < 0 || p.x0 >= Rat(1)) node.at("x0").fail("x0 must be in [0,1)");
    spec.params = p;
  } else if (kind == "doubling") {
    node.only({"kind", "bits"});
    DoublingParams p;
    if (auto bits = node.get("bits"))
      for (const auto& b : bits->items()) p.bits.push_back(static_cast<std::uint8_t>(b.as_uint(0, 1)));
    spec.params = p;
  } else if (kind == "markov") {
    node.only({"kind", "matrix", "cells"});
    MarkovParams p;
    for (const auto& row : node.at("matrix").items()) {
      std::vector<Rat> r;
      for (const auto& v : row.items()) r.push_back(v.as_rat());
      p.matrix.push_back(std::move(r));
    }
    for (const auto& c : node.at("cells").items()) p.cells.push_back(c.as_set());
    spec.params = p;
  } else {
    node.at("kind").fail("unknown process kind '" + kind + "'");
  }
  return spec;
}

json process_to_json(const ProcessSpec& spec) {
  json out;
  switch (spec.kind()) {
    case ProcessKind::IidUniform:
      out["kind"] = "iid";
      break;
    case ProcessKind::Rotation: {
      const auto& p = std::get<RotationParams>(spec.params);
      out["kind"] = "rotation";
      out["alpha"] = p.alpha.hex();
      out["x0"] = p.x0.str();
      break;
    }
    case ProcessKind::Doubling: {
      const auto& p = std::get<DoublingParams>(spec.params);
      out["kind"] = "doubling";
      out["bits"] = json::array();
      for (auto b : p.bits) out["bits"].push_back(b);
      break;
    }
    case ProcessKind::Markov: {
      const auto& p = std::get<MarkovParams>(spec.params);
      out["kind"] = "markov";
      out["matrix"] = json::array();
      for (const auto& row : p.matrix) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        out["matrix"].push_back(r);
      }
      out["cells"] = json::array();
      for (const auto& c : p.cells) out["cells"].push_back(c.str());
      break;
    }
  }
  return out;
}

PiecewiseFn function_from_json(const ConfigNode& node) {
  node.only({"breakpoints", "pieces", "atoms"});
  std::vector<Rat> bps;
  for (const auto& b : node.at("breakpoints").items()) bps.push_back(b.as_rat());
  std::vector<LinearPiece> pieces;
  for (const auto& p : node.at("pieces").items()) {
    if (p.has("value")) {
      p.only({"value"});
      pieces.push_back({Rat(0), p.at("value").as_rat()});
    } else {
      p.only({"slope", "intercept"});
      pieces.push_back({p.at("slope").as_rat(), p.rat_or("intercept", Rat(0))});
    }
  }
  std::vector<std::pair<Rat, Rat>> atoms;
  if (auto a = node.get("atoms"))
    for (const auto& pair : a->items()) {
      const auto xy = pair.items();
      if (xy.size() != 2) pair.fail("atom must be [x, value]");
      atoms.emplace_back(xy[0].as_rat(), xy[1].as_rat());
    }
  try {
    return PiecewiseFn(std::move(bps), std::move(pieces), std::move(atoms));
  } catch (const DomainError& e) {
    node.fail(e.what());
  }
}

json function_to_json(const PiecewiseFn& f) {
  json out;
  out["breakpoints"] = json::array();
  for (const auto& b : f.breakpoints()) out["breakpoints"].push_back(b.str());
  out["pieces"] = json::array();
  for (const auto& p : f.pieces()) {
    if (p.slope.is_zero()) out["pieces"].push_back({{"value", p.intercept.str()}});
    else out["pieces"].push_back({{"slope", p.slope.str()}, {"intercept", p.intercept.str()}});
  }
  if (!f.atoms().empty()) {
    out["atoms"] = json::array();
    for (const auto& [x, v] : f.atoms()) out["atoms"].push_back({x.str(), v.str()});
  }
  return out;
}

json translation_to_json(const PiecewiseTranslation& phi) {
  json out;
  out["stage"] = phi.stage();
  out["pieces"] = json::array();
  for (const auto& s : phi.segments())
    out["pieces"].push_back({s.source.lo.str(), s.source.hi.str(), s.image_lo.str()});
  return out;
}

PiecewiseTranslation translation_from_json(const ConfigNode& node) {
  node.only({"stage", "pieces"});
  std::vector<TranslationSegment> segs;
  for (const auto& p : node.at("pieces").items()) {
    const auto triple = p.items();
    if (triple.size() != 3) p.fail("piece must be [src_lo, src_hi, beta]");
    const Rat lo = triple[0].as_rat();
    const Rat hi = triple[1].as_rat();
    if (!(lo < hi)) p.fail("empty source interval");
    segs.push_back({Interval{lo, hi}, triple[2].as_rat()});
  }
  try {
    return PiecewiseTranslation::from_segments(
        std::move(segs), static_cast<unsigned>(node.uint_or("stage", 0, 0, 1u << 20)));
  } catch (const DomainError& e) {
    node.at("pieces").fail(e.what());
  }
}

json rat_json(const Rat& r) {
  return {{"num", r.num().get_str()}, {"den", r.den().get_str()}, {"f64", r.to_double()}};
}

}  // namespace ergvc
