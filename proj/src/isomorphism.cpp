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

#include "ergvc/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "ergvc/error.hpp"

namespace ergvc {

namespace {

// True when the half-open intervals, sorted by lo, tile [0,1) exactly.
bool tiles_unit(std::vector<Interval> ivs) {
  std::sort(ivs.begin(), ivs.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Rat cursor(0);
  for (const auto& iv : ivs) {
    if (iv.lo != cursor || !(iv.lo < iv.hi)) return false;
    cursor = iv.hi;
  }
  return cursor == Rat(1);
}

IntervalUnion shifted(const Interval& iv, const Rat& by) {
  return IntervalUnion::single(iv.lo + by, iv.hi + by);
}

}  // namespace

PiecewiseTranslation PiecewiseTranslation::identity() {
  return PiecewiseTranslation({TranslationPiece{IntervalUnion::whole(), Rat(0)}}, 0);
}

PiecewiseTranslation PiecewiseTranslation::from_segments(
    std::vector<TranslationSegment> segments, unsigned stage) {
  std::vector<Interval> sources, images;
  for (const auto& s : segments) {
    sources.push_back(s.source);
    images.push_back({s.image_lo, s.image_lo + s.source.length()});
  }
  if (!tiles_unit(sources) || !tiles_unit(images))
    throw DomainError("segments must tile [0,1) on both sides");
  std::sort(segments.begin(), segments.end(),
            [](const auto& a, const auto& b) { return a.image_lo < b.image_lo; });
  std::vector<TranslationPiece> pieces;
  pieces.reserve(segments.size());
  for (const auto& s : segments)
    pieces.push_back({IntervalUnion::single(s.source.lo, s.source.hi), s.image_lo});
  return PiecewiseTranslation(std::move(pieces), stage);
}

Rat PiecewiseTranslation::apply(const Rat& x) const {
  if (x.sign() < 0 || x >= Rat(1))
    throw DomainError("point " + x.str() + " outside [0,1)");
  for (const auto& p : pieces_)
    if (p.cell.contains(x)) return p.beta + p.cell.measure_below(x);
  throw std::logic_error("cells do not cover [0,1)");
}

std::vector<TranslationSegment> PiecewiseTranslation::segments() const {
  std::vector<TranslationSegment> out;
  for (const auto& p : pieces_) {
    Rat at = p.beta;
    for (const auto& part : p.cell.parts()) {
      out.push_back({part, at});
      at += part.length();
    }
  }
  return out;
}

IntervalUnion PiecewiseTranslation::image(const IntervalUnion& set) const {
  std::vector<Interval> parts;
  for (const auto& seg : segments()) {
    const IntervalUnion hit = intersect(set, IntervalUnion::single(seg.source.lo, seg.source.hi));
    for (const auto& iv : hit.parts())
      parts.push_back({iv.lo + seg.shift(), iv.hi + seg.shift()});
  }
  return IntervalUnion::normalize(std::move(parts));
}

IntervalUnion PiecewiseTranslation::preimage(const IntervalUnion& set) const {
  std::vector<Interval> parts;
  for (const auto& seg : segments()) {
    const Rat s = seg.shift();
    const IntervalUnion hit = intersect(set, shifted(seg.source, s));
    for (const auto& iv : hit.parts())
      parts.push_back({iv.lo - s, iv.hi - s});
  }
  return IntervalUnion::normalize(std::move(parts));
}

Rat PiecewiseTranslation::max_cell_diameter() const {
  Rat best;
  for (const auto& p : pieces_) best = max(best, p.cell.diameter());
  return best;
}

Rat PiecewiseTranslation::max_cell_measure() const {
  Rat best;
  for (const auto& p : pieces_) best = max(best, p.cell.measure());
  return best;
}

void PiecewiseTranslation::check_invariants() const {
  std::vector<Interval> sources, images;
  for (const auto& p : pieces_) {
    if (p.cell.empty()) throw std::logic_error("empty cell in translation");
    sources.insert(sources.end(), p.cell.parts().begin(), p.cell.parts().end());
    images.push_back({p.beta, p.image_hi()});
  }
  if (!tiles_unit(std::move(sources)))
    throw std::logic_error("translation sources do not tile [0,1)");
  if (!tiles_unit(std::move(images)))
    throw std::logic_error("translation images do not tile [0,1)");
}

PiecewiseTranslation phi_one(const IntervalUnion& c1) {
  return phi_step(PiecewiseTranslation::identity(), c1);
}

PiecewiseTranslation phi_step(const PiecewiseTranslation& phi,
                              const IntervalUnion& next) {
  std::vector<TranslationPiece> pieces;
  pieces.reserve(2 * phi.pieces().size());
  for (const auto& p : phi.pieces()) {
    IntervalUnion inside = intersect(p.cell, next);
    IntervalUnion outside = difference(p.cell, next);
    const Rat inside_measure = inside.measure();
    if (!inside.empty()) pieces.push_back({std::move(inside), p.beta});
    if (!outside.empty()) pieces.push_back({std::move(outside), p.beta + inside_measure});
  }
  return PiecewiseTranslation(std::move(pieces), phi.stage() + 1);
}

PiecewiseTranslation build_phi(const std::vector<IntervalUnion>& sets) {
  PiecewiseTranslation phi = PiecewiseTranslation::identity();
  for (const auto& s : sets) phi = phi_step(phi, s);
  return phi;
}

IntervalUnion dyadic_digit_set(unsigned j) {
  if (j < 1 || j > 24) throw DomainError("digit index must be in [1,24]");
  const long den = 1L << j;
  std::vector<Interval> parts;
  for (long i = 1; i < den; i += 2) parts.push_back({Rat(i, den), Rat(i + 1, den)});
  return IntervalUnion::normalize(std::move(parts));
}

std::vector<IntervalUnion> interleave_dyadic(const std::vector<IntervalUnion>& sets) {
  std::vector<IntervalUnion> out;
  out.reserve(2 * sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out.push_back(dyadic_digit_set(static_cast<unsigned>(i + 1)));
    out.push_back(sets[i]);
  }
  return out;
}

SetImage image_of_set(const PiecewiseTranslation& phi, const IntervalUnion& c) {
  std::vector<Interval> packed;
  for (const auto& p : phi.pieces()) {
    const IntervalUnion inside = intersect(p.cell, c);
    if (inside.empty()) continue;
    if (inside != p.cell)
      throw DomainError("set is not a union of cells at stage " +
                        std::to_string(phi.stage()));
    packed.push_back({p.beta, p.image_hi()});
  }
  SetImage out;
  out.image = phi.image(c);
  out.packed = IntervalUnion::normalize(std::move(packed));
  out.symdiff_measure = symmetric_difference(out.image, out.packed).measure();
  return out;
}

Rat verify_measure_preserving(const PiecewiseTranslation& phi,
                              const std::vector<IntervalUnion>& probes) {
  Rat worst;
  for (const auto& b : probes)
    worst = max(worst, abs(phi.preimage(b).measure() - b.measure()));
  return worst;
}

std::vector<IntervalUnion> doubling_sets(unsigned n) {
  if (n < 1 || n > 20) throw DomainError("doubling stage must be in [1,20]");
  std::vector<IntervalUnion> out;
  for (unsigned j = 1; j <= n; ++j) {
    const long den = 1L << (j + 1);
    std::vector<Interval> parts;
    for (long i = 0; i < (1L << j); ++i)
      parts.push_back({Rat(2 * i, den), Rat(2 * i + 1, den)});
    out.push_back(IntervalUnion::normalize(std::move(parts)));
  }
  return out;
}

DoublingCheck doubling_limit_check(unsigned n, unsigned probe_order) {
  if (probe_order > 20) throw ResourceError("probe order above 20");
  const PiecewiseTranslation phi = build_phi(doubling_sets(n));
  DoublingCheck out;
  out.bound = Rat(2) * pow2_neg(n);
  const long den = 1L << probe_order;
  // Walk the probes left to right alongside the segments.
  const auto segs = [&] {
    auto s = phi.segments();
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
      return a.source.lo < b.source.lo;
    });
    return s;
  }();
  std::size_t seg = 0;
  for (long j = 0; j < den; ++j) {
    const Rat x(j, den);
    while (!segs[seg].source.contains(x)) ++seg;
    const Rat fx = x + segs[seg].shift();
    Rat doubled = Rat(2) * x;
    if (doubled >= Rat(1)) doubled -= Rat(1);
    const Rat dev = abs(fx - doubled);
    if (dev > out.max_deviation) {
      out.max_deviation = dev;
      out.worst_point = x;
    }
  }
  return out;
}

}  // namespace ergvc
