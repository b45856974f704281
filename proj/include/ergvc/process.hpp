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

#ifndef ERGVC_PROCESS_HPP
#define ERGVC_PROCESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ergvc/dyadic.hpp"
#include "ergvc/family.hpp"
#include "ergvc/interval_set.hpp"

namespace ergvc {

// Counter-based randomness: every draw is a pure function of
// (seed, stream, index), so paths split by index across workers.
enum class Stream : std::uint64_t {
  Iid = 1,
  DoublingBits = 2,
  MarkovState = 3,
  MarkovPosition = 4,
  GraphLift = 5,
  Test = 6,
};

std::uint64_t counter_draw(std::uint64_t seed, Stream stream,
                           std::uint64_t index);
/// 128 uniform bits built from two consecutive counter draws.
u128 counter_draw128(std::uint64_t seed, Stream stream, std::uint64_t index);

/// floor(((sqrt 5 - 1) / 2) * 2^128).
Dyadic golden_alpha();

struct IidParams {};

struct RotationParams {
  Dyadic alpha = golden_alpha();
  Rat x0;
};

struct DoublingParams {
  /// Leading bits of the coded stream b_0 b_1 ...; later bits come from the
  /// seed.
  std::vector<std::uint8_t> bits;
};

struct MarkovParams {
  std::vector<std::vector<Rat>> matrix;
  std::vector<IntervalUnion> cells;
};

enum class ProcessKind { IidUniform, Rotation, Doubling, Markov };

struct ProcessSpec {
  std::variant<IidParams, RotationParams, DoublingParams, MarkovParams> params;
  std::uint64_t seed = 0;
  unsigned precision = kMaxPrecision;

  ProcessKind kind() const {
    return static_cast<ProcessKind>(params.index());
  }
};

std::string to_string(ProcessKind kind);

/// The rotation step actually used at a given precision: alpha truncated to
/// P bits with the lowest bit forced on, which makes T^j injective in j.
Dyadic rotation_step(Dyadic alpha, unsigned precision);

/// Deterministic trajectory x_1..x_M. Indexing is 0-based in code:
/// points()[i] holds x_{i+1}.
class SamplePath {
 public:
  SamplePath(ProcessSpec spec, std::vector<Dyadic> points,
             std::vector<std::size_t> jittered)
      : spec_(std::move(spec)),
        points_(std::move(points)),
        jittered_(std::move(jittered)) {}

  /// Wraps explicit points (tests, CLI replays). Points must be on the
  /// precision grid.
  static SamplePath from_points(std::vector<Dyadic> points,
                                unsigned precision = kMaxPrecision);
  /// Convenience for exact dyadic rationals; throws DomainError otherwise.
  static SamplePath from_rats(const std::vector<Rat>& points,
                              unsigned precision = kMaxPrecision);

  const ProcessSpec& spec() const noexcept { return spec_; }
  std::span<const Dyadic> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  Dyadic operator[](std::size_t i) const { return points_[i]; }
  /// Indices nudged off a registered boundary point by one ulp.
  const std::vector<std::size_t>& jittered() const noexcept { return jittered_; }

 private:
  ProcessSpec spec_;
  std::vector<Dyadic> points_;
  std::vector<std::size_t> jittered_;
};

/// Throws DomainError for an invalid spec and for M == 0. Points equal to
/// one of `boundary` are moved up by 2^-P and logged.
SamplePath generate(const ProcessSpec& spec, std::size_t M,
                    std::span<const Rat> boundary = {});

inline constexpr std::uint64_t kDefaultOrbitRadius = std::uint64_t{1} << 60;

/// Orbit family for the rotation T x = x + alpha. Member 0 is the orbit of
/// x0; member i > 0 is the orbit of x0 + i * 2^-(P/2). Each member is an
/// OrbitSegment of radius `radius` with no interval part, so its Lebesgue
/// measure is 0. `window` is the number of steps on each side materialized
/// by trajectory_atoms().
SetFamily trajectory_family(Dyadic alpha, const Rat& x0, std::uint64_t window,
                            std::size_t count, unsigned precision = kMaxPrecision,
                            std::uint64_t radius = kDefaultOrbitRadius);

/// Materialized atoms {T^j x : |j| <= window} of member i.
std::vector<Dyadic> trajectory_atoms(const SetFamily& fam, std::size_t i,
                                     std::uint64_t window);

struct OrbitStructure {
  bool disjoint_or_equal = false;
  std::size_t distinct_members = 0;
  /// 1 when members are pairwise disjoint-or-equal and at least two are
  /// distinct; empty when the structural argument does not apply.
  std::optional<unsigned> dimension;
};

/// Structural VC check for orbit families: two members of radius R
/// intersect iff their bases differ by j * alpha with |j| <= 2R.
OrbitStructure orbit_structure(const SetFamily& fam, std::size_t upto);

}  // namespace ergvc

#endif  // ERGVC_PROCESS_HPP
