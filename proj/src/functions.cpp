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

#include "ergvc/functions.hpp"

#include <algorithm>
#include <cmath>

#include "ergvc/error.hpp"

namespace ergvc {

namespace {

const Rat kOne(1);

void sort_unique(std::vector<Rat>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Breakpoints and atom positions of every function, plus 0 and 1.
std::vector<Rat> cuts_of(std::initializer_list<const PiecewiseFn*> fns) {
  std::vector<Rat> cuts{Rat(0), kOne};
  for (const auto* f : fns) {
    cuts.insert(cuts.end(), f->breakpoints().begin(), f->breakpoints().end());
    for (const auto& [x, v] : f->atoms()) cuts.push_back(x);
  }
  sort_unique(cuts);
  return cuts;
}

// Points strictly inside (a,b) where the formula equals t.
void add_crossing(const LinearPiece& p, const Rat& t, const Rat& a, const Rat& b,
                  std::vector<Rat>& out) {
  if (p.slope.is_zero()) return;
  const Rat x = (t - p.intercept) / p.slope;
  if (a < x && x < b) out.push_back(x);
}

const LinearPiece& formula_on(const PiecewiseFn& f, const Rat& p, const Rat& q) {
  return f.pieces()[f.piece_index((p + q) / Rat(2))];
}

// Assembles a function from per-gap formulas over sorted cuts, merging
// neighbours with equal formulas.
PiecewiseFn assemble(const std::vector<Rat>& cuts, const std::vector<LinearPiece>& gaps,
                     std::vector<std::pair<Rat, Rat>> atoms) {
  std::vector<Rat> bps{cuts.front()};
  std::vector<LinearPiece> pieces;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (!pieces.empty() && pieces.back() == gaps[i]) {
      bps.back() = cuts[i + 1];
    } else {
      pieces.push_back(gaps[i]);
      bps.push_back(cuts[i + 1]);
    }
  }
  return PiecewiseFn(std::move(bps), std::move(pieces), std::move(atoms));
}

Rat integral_of(const LinearPiece& p, const Rat& a, const Rat& b) {
  return p.slope * (b * b - a * a) / Rat(2) + p.intercept * (b - a);
}

Rat ratio(std::size_t a, std::size_t b) {
  return Rat(Int(static_cast<unsigned long>(a)), Int(static_cast<unsigned long>(b)));
}

}  // namespace

PiecewiseFn::PiecewiseFn(std::vector<Rat> breakpoints, std::vector<LinearPiece> pieces,
                         std::vector<std::pair<Rat, Rat>> atoms)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      atoms_(std::move(atoms)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != Rat(0) || breakpoints_.back() != kOne)
    throw DomainError("breakpoints must run from 0 to 1");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw DomainError("breakpoints must be strictly increasing");
  if (pieces_.size() + 1 != breakpoints_.size())
    throw DomainError("need one piece per breakpoint gap");
  std::sort(atoms_.begin(), atoms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].first.sign() < 0 || atoms_[i].first >= kOne)
      throw DomainError("atom outside [0,1)");
    if (i && atoms_[i].first == atoms_[i - 1].first)
      throw DomainError("duplicate atom position");
  }
  // Atoms equal to the piece formula carry no information.
  std::erase_if(atoms_, [this](const auto& a) {
    return pieces_[piece_index(a.first)].at(a.first) == a.second;
  });
}

PiecewiseFn PiecewiseFn::constant(const Rat& c) {
  return PiecewiseFn({Rat(0), kOne}, {LinearPiece{Rat(0), c}});
}

PiecewiseFn PiecewiseFn::linear(const Rat& slope, const Rat& intercept) {
  return PiecewiseFn({Rat(0), kOne}, {LinearPiece{slope, intercept}});
}

PiecewiseFn PiecewiseFn::indicator(const IntervalUnion& set) {
  std::vector<Rat> cuts{Rat(0), kOne};
  for (const auto& iv : set.parts()) {
    cuts.push_back(iv.lo);
    cuts.push_back(iv.hi);
  }
  sort_unique(cuts);
  std::vector<LinearPiece> gaps;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    gaps.push_back({Rat(0), set.contains(cuts[i]) ? kOne : Rat(0)});
  return assemble(cuts, gaps, {});
}

std::size_t PiecewiseFn::piece_index(const Rat& x) const {
  if (x.sign() < 0 || x >= kOne) throw DomainError("point " + x.str() + " outside [0,1)");
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

Rat PiecewiseFn::eval(const Rat& x) const {
  const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                                   [](const auto& a, const Rat& v) { return a.first < v; });
  if (it != atoms_.end() && it->first == x) return it->second;
  return pieces_[piece_index(x)].at(x);
}

Rat PiecewiseFn::left_limit(std::size_t i) const {
  if (i < 1 || i >= breakpoints_.size()) throw DomainError("no left limit at breakpoint 0");
  return pieces_[i - 1].at(breakpoints_[i]);
}

Rat PiecewiseFn::integral() const {
  Rat total;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    total += integral_of(pieces_[i], breakpoints_[i], breakpoints_[i + 1]);
  return total;
}

Rat PiecewiseFn::sup_abs() const {
  Rat best;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    best = max(best, abs(pieces_[i].at(breakpoints_[i])));
    best = max(best, abs(pieces_[i].at(breakpoints_[i + 1])));
  }
  for (const auto& [x, v] : atoms_) best = max(best, abs(v));
  return best;
}

Rat discretize_value(const Rat& y, const Rat& M, unsigned K) {
  const Rat eps = Rat(2) * M / Rat(static_cast<long>(K));
  // #{j in 1..K : y <= M - eps j} = clamp(floor((M - y)/eps), 0, K)
  const Rat q = (M - y) / eps;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
  if (fl < 0) fl = 0;
  if (fl > K) fl = K;
  return M - eps * Rat(fl, Int(1));
}

PiecewiseFn discretize_major(const PiecewiseFn& f, const Rat& M, unsigned K) {
  if (K < 1) throw DomainError("K must be >= 1");
  if (M < f.sup_abs())
    throw DomainError("M=" + M.str() + " below sup|f|=" + f.sup_abs().str());
  if (M.is_zero()) return PiecewiseFn::constant(Rat(0));
  const Rat eps = Rat(2) * M / Rat(static_cast<long>(K));
  std::vector<Rat> cuts = cuts_of({&f});
  {
    std::vector<Rat> crossings;
    for (std::size_t i = 0; i < f.pieces().size(); ++i)
      for (unsigned j = 1; j <= K; ++j)
        add_crossing(f.pieces()[i], M - eps * Rat(static_cast<long>(j)),
                     f.breakpoints()[i], f.breakpoints()[i + 1], crossings);
    cuts.insert(cuts.end(), crossings.begin(), crossings.end());
    sort_unique(cuts);
  }
  std::vector<LinearPiece> gaps;
  std::vector<std::pair<Rat, Rat>> atoms;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat& p = cuts[i];
    const Rat inside = discretize_value(formula_on(f, p, cuts[i + 1]).at((p + cuts[i + 1]) / Rat(2)), M, K);
    gaps.push_back({Rat(0), inside});
    const Rat at_p = discretize_value(f.eval(p), M, K);
    if (at_p != inside) atoms.emplace_back(p, at_p);
  }
  return assemble(cuts, gaps, std::move(atoms));
}

SandwichCheck sandwich_check(const PiecewiseFn& f, const PiecewiseFn& fbar,
                             const Rat& M, unsigned K) {
  const Rat eps = Rat(2) * M / Rat(static_cast<long>(K));
  const std::vector<Rat> cuts = cuts_of({&f, &fbar});
  SandwichCheck out{true, 0};
  auto check = [&](const Rat& fv, const Rat& gv) {
    ++out.points_checked;
    if (!(gv - eps <= fv && fv <= gv)) out.holds = false;
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat& p = cuts[i];
    const Rat& q = cuts[i + 1];
    const Rat mid = (p + q) / Rat(2);
    check(f.eval(p), fbar.eval(p));
    check(f.eval(mid), fbar.eval(mid));
    check(formula_on(f, p, q).at(q), formula_on(fbar, p, q).at(q));
  }
  return out;
}

Truncation truncate_envelope(const PiecewiseFn& f, const PiecewiseFn& F, const Rat& M) {
  std::vector<Rat> cuts = cuts_of({&f, &F});
  // Envelope check: F - f and F + f are linear between cuts.
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat& p = cuts[i];
    const Rat& q = cuts[i + 1];
    const LinearPiece& a = formula_on(f, p, q);
    const LinearPiece& b = formula_on(F, p, q);
    if (abs(f.eval(p)) > F.eval(p) || abs(a.at(q)) > b.at(q) ||
        abs(a.at((p + q) / Rat(2))) > b.at((p + q) / Rat(2)))
      throw DomainError("envelope violated on [" + p.str() + ", " + q.str() + ")");
  }
  {
    std::vector<Rat> crossings;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      add_crossing(formula_on(F, cuts[i], cuts[i + 1]), M, cuts[i], cuts[i + 1], crossings);
    cuts.insert(cuts.end(), crossings.begin(), crossings.end());
    sort_unique(cuts);
  }
  Truncation out{PiecewiseFn::constant(Rat(0)), Rat(0)};
  std::vector<LinearPiece> gaps;
  std::vector<std::pair<Rat, Rat>> atoms;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat& p = cuts[i];
    const Rat& q = cuts[i + 1];
    const LinearPiece& env = formula_on(F, p, q);
    const bool kept = env.at((p + q) / Rat(2)) <= M;
    const LinearPiece piece = kept ? formula_on(f, p, q) : LinearPiece{Rat(0), Rat(0)};
    if (!kept) out.tail += Rat(2) * integral_of(env, p, q);
    gaps.push_back(piece);
    const Rat at_p = F.eval(p) <= M ? f.eval(p) : Rat(0);
    if (at_p != piece.at(p)) atoms.emplace_back(p, at_p);
  }
  out.fm = assemble(cuts, gaps, std::move(atoms));
  return out;
}

IntervalUnion superlevel_set(const PiecewiseFn& f, const Rat& t) {
  std::vector<Interval> parts;
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    const LinearPiece& p = f.pieces()[i];
    Rat a = f.breakpoints()[i];
    Rat b = f.breakpoints()[i + 1];
    if (p.slope.is_zero()) {
      if (p.intercept > t) parts.push_back({a, b});
      continue;
    }
    const Rat x = (t - p.intercept) / p.slope;
    if (p.slope.sign() > 0) a = max(a, x);
    else b = min(b, x);
    if (a < b) parts.push_back({a, b});
  }
  return IntervalUnion::normalize(std::move(parts));
}

GammaValue gamma_fn(const std::vector<PiecewiseFn>& fns, const SamplePath& path,
                    std::size_t m) {
  if (m < 1 || m > path.size()) throw DomainError("m outside the path");
  std::vector<Rat> xs;
  xs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) xs.push_back(path[i].to_rat());
  GammaValue out;
  out.budget = fns.size();
  for (std::size_t k = 0; k < fns.size(); ++k) {
    Rat sum;
    for (const auto& x : xs) sum += fns[k].eval(x);
    const Rat dev = abs(sum / ratio(m, 1) - fns[k].integral());
    if (k == 0 || dev > out.value) {
      out.value = dev;
      out.argmax = k;
    }
  }
  return out;
}

GraphSample graph_lift(const SamplePath& path, std::uint64_t yseed) {
  GraphSample gs;
  gs.yseed = yseed;
  gs.xs.assign(path.points().begin(), path.points().end());
  gs.ys.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i)
    gs.ys.push_back(Dyadic::from_bits(counter_draw128(yseed, Stream::GraphLift, i)));
  return gs;
}

Rat graph_frequency(const PiecewiseFn& f, const GraphSample& gs, std::size_t m) {
  if (m < 1 || m > gs.size()) throw DomainError("m outside the graph sample");
  std::size_t count = 0;
  for (std::size_t i = 0; i < m; ++i) count += gs.ys[i].to_rat() <= f.eval(gs.xs[i]);
  return ratio(count, m);
}

namespace {

// Values g(x_i) of the possibly rescaled family, one row per function.
std::vector<std::vector<Rat>> lifted_values(const std::vector<PiecewiseFn>& fns,
                                            const GraphSample& gs, std::size_t m,
                                            bool rescale, Rat& envelope,
                                            std::vector<Rat>& means) {
  envelope = Rat(0);
  if (rescale) {
    for (const auto& f : fns) envelope = max(envelope, f.sup_abs());
    if (envelope.is_zero()) envelope = kOne;
  } else {
    for (const auto& f : fns)
      for (const auto& [x, v] : f.atoms())
        if (v.sign() < 0 || v > kOne) throw DomainError("function values outside [0,1]");
    for (const auto& f : fns)
      for (std::size_t i = 0; i < f.pieces().size(); ++i)
        for (const Rat* x : {&f.breakpoints()[i], &f.breakpoints()[i + 1]}) {
          const Rat v = f.pieces()[i].at(*x);
          if (v.sign() < 0 || v > kOne)
            throw DomainError("function values outside [0,1]; rescale the family");
        }
  }
  const Rat twice = Rat(2) * envelope;
  std::vector<std::vector<Rat>> out;
  means.clear();
  for (const auto& f : fns) {
    std::vector<Rat> row;
    row.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rat v = f.eval(gs.xs[i]);
      if (rescale) v = (v + envelope) / twice;
      row.push_back(std::move(v));
    }
    out.push_back(std::move(row));
    means.push_back(rescale ? (f.integral() + envelope) / twice : f.integral());
  }
  if (!rescale) envelope = Rat(0);
  return out;
}

}  // namespace

GammaSplit gamma_split(const std::vector<PiecewiseFn>& fns, const GraphSample& gs,
                       std::size_t m, bool rescale) {
  if (m < 1 || m > gs.size()) throw DomainError("m outside the graph sample");
  GammaSplit out;
  std::vector<Rat> means;
  const auto values = lifted_values(fns, gs, m, rescale, out.envelope, means);
  std::vector<Rat> ys;
  ys.reserve(m);
  for (std::size_t i = 0; i < m; ++i) ys.push_back(gs.ys[i].to_rat());
  const Rat mm = ratio(m, 1);
  for (std::size_t k = 0; k < fns.size(); ++k) {
    Rat sum;
    std::size_t below = 0;
    for (std::size_t i = 0; i < m; ++i) {
      sum += values[k][i];
      below += ys[i] <= values[k][i];
    }
    const Rat freq = ratio(below, m);
    out.gamma = max(out.gamma, abs(sum / mm - means[k]));
    out.gamma1 = max(out.gamma1, abs(freq - means[k]));
    out.gamma2 = max(out.gamma2, abs(freq - sum / mm));
  }
  out.bound_ok = out.gamma <= out.gamma1 + out.gamma2;
  return out;
}

std::vector<std::uint64_t> graph_rows(const std::vector<PiecewiseFn>& fns,
                                      const GraphSample& gs, std::size_t npoints,
                                      bool rescale) {
  if (npoints > 64) throw ResourceError("graph trace limited to 64 points");
  if (npoints > gs.size()) throw DomainError("npoints outside the graph sample");
  Rat envelope;
  std::vector<Rat> means;
  const auto values = lifted_values(fns, gs, npoints, rescale, envelope, means);
  std::vector<std::uint64_t> rows;
  for (const auto& row : values) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < npoints; ++i)
      if (gs.ys[i].to_rat() <= row[i]) bits |= std::uint64_t{1} << i;
    rows.push_back(bits);
  }
  return rows;
}

double lm_bound(std::uint64_t m, unsigned V) {
  if (m < 1) throw DomainError("m must be >= 1");
  const double md = static_cast<double>(m);
  return 2.0 * std::sqrt((std::log(2.0) + V * std::log1p(md)) / md);
}

std::vector<PiecewiseFn> ramp_family(std::size_t count) {
  if (count < 1) throw DomainError("ramp count must be >= 1");
  std::vector<PiecewiseFn> out;
  for (std::size_t j = 0; j < count; ++j) {
    const Rat c = ratio(j + 1, count);
    if (c == kOne) {
      out.push_back(PiecewiseFn::linear(kOne, Rat(0)));
      continue;
    }
    out.emplace_back(std::vector<Rat>{Rat(0), c, kOne},
                     std::vector<LinearPiece>{{kOne / c, Rat(0)}, {Rat(0), kOne}});
  }
  return out;
}

}  // namespace ergvc
