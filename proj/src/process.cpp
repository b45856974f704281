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

#include "ergvc/process.hpp"

#include <algorithm>
#include <unordered_set>

#include "ergvc/error.hpp"

namespace ergvc {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

u128 precision_low_mask(unsigned precision) {
  const unsigned shift = kMaxPrecision - precision;
  return shift == 0 ? 0 : (u128{1} << shift) - 1;
}

Dyadic truncate(u128 bits, unsigned precision) {
  return Dyadic::from_bits(bits & ~precision_low_mask(precision));
}

struct U128Hash {
  std::size_t operator()(u128 v) const noexcept {
    return static_cast<std::size_t>(splitmix(static_cast<std::uint64_t>(v) ^
                                             splitmix(static_cast<std::uint64_t>(v >> 64))));
  }
};

std::vector<Dyadic> rotation_points(const RotationParams& p, unsigned precision,
                                    std::size_t M) {
  if (p.alpha.bits() == 0) throw DomainError("rotation alpha must be in (0,1)");
  const Dyadic step = rotation_step(p.alpha, precision);
  Dyadic x = Dyadic::floor_of(p.x0, precision);
  std::vector<Dyadic> out;
  out.reserve(M);
  for (std::size_t i = 0; i < M; ++i) {
    x = x + step;
    out.push_back(x);
  }
  return out;
}

std::uint8_t doubling_bit(const DoublingParams& p, std::uint64_t seed,
                          std::uint64_t j) {
  if (j < p.bits.size()) return p.bits[j];
  return static_cast<std::uint8_t>(
      (counter_draw(seed, Stream::DoublingBits, j / 64) >> (j % 64)) & 1u);
}

std::vector<Dyadic> doubling_points(const DoublingParams& p, std::uint64_t seed,
                                    unsigned precision, std::size_t M) {
  for (auto b : p.bits)
    if (b > 1) throw DomainError("doubling bit stream entries must be 0 or 1");
  // x_i reads b_i b_{i+1} ... b_{i+P-1}; x_{i+1} is x_i shifted left by one.
  const u128 last_bit = u128{1} << (kMaxPrecision - precision);
  u128 x = 0;
  for (unsigned t = 0; t < precision; ++t)
    if (doubling_bit(p, seed, 1 + t)) x |= u128{1} << (kMaxPrecision - 1 - t);
  std::vector<Dyadic> out;
  out.reserve(M);
  out.push_back(Dyadic::from_bits(x));
  for (std::size_t i = 2; i <= M; ++i) {
    x <<= 1;
    if (doubling_bit(p, seed, i + precision - 1)) x |= last_bit;
    out.push_back(Dyadic::from_bits(x));
  }
  return out;
}

void validate_markov(const MarkovParams& p) {
  const std::size_t n = p.cells.size();
  if (n == 0) throw DomainError("markov chain needs at least one cell");
  if (p.matrix.size() != n)
    throw DomainError("markov matrix must be square with one row per cell");
  Rat covered;
  for (std::size_t a = 0; a < n; ++a) {
    if (p.cells[a].empty()) throw DomainError("markov cells must be nonempty");
    covered += p.cells[a].measure();
    for (std::size_t b = a + 1; b < n; ++b)
      if (!intersect(p.cells[a], p.cells[b]).empty())
        throw DomainError("markov cells must be disjoint");
  }
  if (covered != Rat(1)) throw DomainError("markov cells must cover [0,1)");
  for (std::size_t a = 0; a < n; ++a) {
    if (p.matrix[a].size() != n) throw DomainError("markov matrix must be square");
    Rat row;
    for (const auto& v : p.matrix[a]) {
      if (v.sign() < 0) throw DomainError("markov probabilities must be >= 0");
      row += v;
    }
    if (row != Rat(1)) throw DomainError("markov matrix rows must sum to 1");
  }
  // Lebesgue marginal: pi_b = lambda(cell_b) must be stationary.
  for (std::size_t b = 0; b < n; ++b) {
    Rat flow;
    for (std::size_t a = 0; a < n; ++a) flow += p.cells[a].measure() * p.matrix[a][b];
    if (flow != p.cells[b].measure())
      throw DomainError("cell measures are not stationary for the markov matrix");
  }
}

// ceil(cum * 2^64) thresholds so that u < threshold[s] selects state <= s.
std::vector<u128> cumulative_thresholds(const std::vector<Rat>& probs) {
  std::vector<u128> out;
  Rat cum;
  for (const auto& p : probs) {
    cum += p;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), Int(cum.num() << 64).get_mpz_t(), cum.den().get_mpz_t());
    const Int hi = q >> 64;
    out.push_back((u128{hi.get_ui()} << 64) | u128{Int(q - (hi << 64)).get_ui()});
  }
  return out;
}

std::size_t pick(const std::vector<u128>& thresholds, std::uint64_t u) {
  for (std::size_t s = 0; s < thresholds.size(); ++s)
    if (u128{u} < thresholds[s]) return s;
  return thresholds.size() - 1;
}

Dyadic uniform_in(const IntervalUnion& cell, u128 draw, unsigned precision) {
  const Rat v = truncate(draw, precision).to_rat();
  Rat target = v * cell.measure();
  for (const auto& part : cell.parts()) {
    if (target < part.length()) {
      const Rat x = part.lo + target;
      Dyadic d = Dyadic::floor_of(x, precision);
      if (d.to_rat() < part.lo) d = d + ulp(precision);
      return d;
    }
    target -= part.length();
  }
  throw std::logic_error("uniform_in: target beyond cell measure");
}

std::vector<Dyadic> markov_points(const MarkovParams& p, std::uint64_t seed,
                                  unsigned precision, std::size_t M) {
  validate_markov(p);
  std::vector<Rat> initial;
  for (const auto& c : p.cells) initial.push_back(c.measure());
  const auto start = cumulative_thresholds(initial);
  std::vector<std::vector<u128>> rows;
  for (const auto& r : p.matrix) rows.push_back(cumulative_thresholds(r));

  std::vector<Dyadic> out;
  out.reserve(M);
  std::size_t state = pick(start, counter_draw(seed, Stream::MarkovState, 0));
  for (std::size_t i = 0; i < M; ++i) {
    if (i > 0) state = pick(rows[state], counter_draw(seed, Stream::MarkovState, i));
    out.push_back(uniform_in(p.cells[state],
                             counter_draw128(seed, Stream::MarkovPosition, i),
                             precision));
  }
  return out;
}

}  // namespace

std::uint64_t counter_draw(std::uint64_t seed, Stream stream,
                           std::uint64_t index) {
  return splitmix(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(stream))) ^ index);
}

u128 counter_draw128(std::uint64_t seed, Stream stream, std::uint64_t index) {
  return (u128{counter_draw(seed, stream, 2 * index)} << 64) |
         counter_draw(seed, stream, 2 * index + 1);
}

Dyadic golden_alpha() {
  // (sqrt(5 * 2^256) - 2^128) / 2
  Int five = 5;
  five <<= 256;
  Int root;
  mpz_sqrt(root.get_mpz_t(), five.get_mpz_t());
  Int two128 = 1;
  two128 <<= 128;
  const Int value = (root - two128) >> 1;
  const Int hi = value >> 64;
  return Dyadic::from_bits((u128{hi.get_ui()} << 64) |
                           u128{Int(value - (hi << 64)).get_ui()});
}

std::string to_string(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::IidUniform: return "iid-uniform";
    case ProcessKind::Rotation: return "rotation";
    case ProcessKind::Doubling: return "doubling";
    case ProcessKind::Markov: return "markov";
  }
  return "unknown";
}

Dyadic rotation_step(Dyadic alpha, unsigned precision) {
  check_precision(precision);
  return Dyadic::from_bits(truncate(alpha.bits(), precision).bits() |
                           (u128{1} << (kMaxPrecision - precision)));
}

SamplePath SamplePath::from_points(std::vector<Dyadic> points, unsigned precision) {
  check_precision(precision);
  for (auto p : points)
    if ((p.bits() & precision_low_mask(precision)) != 0)
      throw DomainError("point " + p.hex() + " not on the precision grid");
  ProcessSpec spec;
  spec.precision = precision;
  return SamplePath(std::move(spec), std::move(points), {});
}

SamplePath SamplePath::from_rats(const std::vector<Rat>& points,
                                 unsigned precision) {
  std::vector<Dyadic> out;
  out.reserve(points.size());
  for (const auto& r : points) {
    auto d = Dyadic::exact(r, precision);
    if (!d) throw DomainError("point " + r.str() + " is not a dyadic in [0,1)");
    out.push_back(*d);
  }
  return from_points(std::move(out), precision);
}

SamplePath generate(const ProcessSpec& spec, std::size_t M,
                    std::span<const Rat> boundary) {
  check_precision(spec.precision);
  if (M == 0) throw DomainError("path length must be >= 1");
  const unsigned P = spec.precision;
  std::vector<Dyadic> points;
  switch (spec.kind()) {
    case ProcessKind::IidUniform:
      points.reserve(M);
      for (std::size_t i = 0; i < M; ++i)
        points.push_back(truncate(counter_draw128(spec.seed, Stream::Iid, i), P));
      break;
    case ProcessKind::Rotation:
      points = rotation_points(std::get<RotationParams>(spec.params), P, M);
      break;
    case ProcessKind::Doubling:
      points = doubling_points(std::get<DoublingParams>(spec.params), spec.seed, P, M);
      break;
    case ProcessKind::Markov:
      points = markov_points(std::get<MarkovParams>(spec.params), spec.seed, P, M);
      break;
  }

  std::vector<std::size_t> jittered;
  if (!boundary.empty()) {
    std::unordered_set<u128, U128Hash> hits;
    for (const auto& r : boundary)
      if (auto d = Dyadic::exact(r, P)) hits.insert(d->bits());
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!hits.contains(points[i].bits())) continue;
      jittered.push_back(i);
      do {
        points[i] = points[i] + ulp(P);
      } while (hits.contains(points[i].bits()));
    }
  }
  return SamplePath(spec, std::move(points), std::move(jittered));
}

SetFamily trajectory_family(Dyadic alpha, const Rat& x0, std::uint64_t window,
                            std::size_t count, unsigned precision,
                            std::uint64_t radius) {
  check_precision(precision);
  if (window < 1) throw DomainError("trajectory window must be >= 1");
  if (count < 1) throw DomainError("trajectory family needs at least one member");
  const Dyadic step = rotation_step(alpha, precision);
  const Dyadic base = Dyadic::floor_of(x0, precision);
  const Dyadic spacing = ulp(precision / 2);
  // Validate once; members are then built without rechecking.
  OrbitSegment probe(base, step, precision, radius);
  return SetFamily("trajectory", count, [=](std::size_t i) {
    const Dyadic b = base + Dyadic::from_bits(spacing.bits() * u128{i});
    return Member{IntervalUnion(), OrbitSegment(b, step, precision, radius)};
  });
}

std::vector<Dyadic> trajectory_atoms(const SetFamily& fam, std::size_t i,
                                     std::uint64_t window) {
  const Member m = fam.enumerate(i);
  if (!m.orbit) throw DomainError("member has no orbit atoms");
  return m.orbit->atoms(window);
}

OrbitStructure orbit_structure(const SetFamily& fam, std::size_t upto) {
  const auto members = fam.members(upto);
  OrbitStructure out;
  std::vector<const OrbitSegment*> orbits;
  for (const auto& m : members) {
    if (!m.orbit || !m.body.empty()) return out;
    orbits.push_back(&*m.orbit);
  }
  std::vector<bool> duplicate(orbits.size(), false);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& a = *orbits[i];
    const OrbitSegment doubled(a.base(), a.alpha(), a.precision(), 2 * a.radius());
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      const auto& b = *orbits[j];
      if (b.alpha() != a.alpha() || b.precision() != a.precision() ||
          b.radius() != a.radius())
        return out;
      if (b.base() == a.base()) {
        duplicate[j] = true;
        continue;
      }
      if (doubled.contains(b.base())) return out;
    }
  }
  out.disjoint_or_equal = true;
  out.distinct_members =
      static_cast<std::size_t>(std::count(duplicate.begin(), duplicate.end(), false));
  out.dimension = out.distinct_members >= 2 ? 1u : 0u;
  return out;
}

}  // namespace ergvc
