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

#include "ergvc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "ergvc/error.hpp"

namespace ergvc {

namespace {

// A position value + side * infinitesimal, side in {-1, 0, +1}.
struct Position {
  Rat value;
  int side = 0;

  bool before_point(const Rat& x) const {  // position <= x
    return value < x || (value == x && side <= 0);
  }
  bool after_point(const Rat& x) const {  // x < position
    return x < value || (x == value && side > 0);
  }
  friend bool operator<(const Position& a, const Position& b) {
    return a.value < b.value || (a.value == b.value && a.side < b.side);
  }
};

}  // namespace

Rat gamma_k_intervals_brute(const SamplePath& path, std::size_t m, std::size_t k) {
  if (m < 1 || m > path.size()) throw DomainError("m outside the path");
  if (k < 1 || k > 3) throw DomainError("brute force supports k in [1,3]");
  if (m > 12) throw ResourceError("brute force supports m <= 12");
  std::vector<Rat> xs;
  for (std::size_t i = 0; i < m; ++i) xs.push_back(path[i].to_rat());

  std::vector<Position> pos{{Rat(0), 0}, {Rat(1), 0}};
  for (const auto& x : xs) {
    pos.push_back({x, -1});
    pos.push_back({x, +1});
  }
  std::sort(pos.begin(), pos.end());
  struct Span {
    Position lo, hi;
    std::uint32_t mask = 0;
    Rat length;
  };
  std::vector<Span> ivs;
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      Span s{pos[a], pos[b], 0, pos[b].value - pos[a].value};
      for (std::size_t j = 0; j < m; ++j)
        if (s.lo.before_point(xs[j]) && s.hi.after_point(xs[j])) s.mask |= 1u << j;
      ivs.push_back(std::move(s));
    }

  const Rat mm(static_cast<long>(m));
  Rat best;
  std::vector<std::size_t> pick;
  // Union of the picked spans: count from the masks, measure by sweeping
  // the spans in order of their left ends.
  auto evaluate = [&] {
    std::uint32_t mask = 0;
    std::vector<const Span*> spans;
    for (auto i : pick) {
      mask |= ivs[i].mask;
      spans.push_back(&ivs[i]);
    }
    std::sort(spans.begin(), spans.end(),
              [](const Span* a, const Span* b) { return a->lo.value < b->lo.value; });
    Rat measure, reach;
    for (const Span* s : spans) {
      if (reach <= s->lo.value) measure += s->length;
      else if (reach < s->hi.value) measure += s->hi.value - reach;
      reach = max(reach, s->hi.value);
    }
    const Rat freq = Rat(static_cast<long>(std::popcount(mask))) / mm;
    best = max(best, abs(freq - measure));
  };
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    evaluate();
    if (pick.size() == k) return;
    for (std::size_t i = from; i < ivs.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace ergvc
