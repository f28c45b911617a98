/*
   Copyright 2026 The k3verify authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "k3v/strong_gb_z.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace k3v {

namespace {

using ZTerm = std::pair<Mono, Integer>;

/// Terms sorted descending under the active order.
struct ZPol {
  std::vector<ZTerm> t;
};

bool pzero(const ZPol& f) { return f.t.empty(); }
const Mono& plm(const ZPol& f) { return f.t.front().first; }
const Integer& plc(const ZPol& f) { return f.t.front().second; }

/// c = q*a + r with |r| <= a/2, r = +a/2 on the boundary; a > 0.
void sym_divmod(const Integer& c, const Integer& a, Integer& q, Integer& r) {
  r = Integer::mod(c, a);
  Integer twice = r + r;
  if (Integer::cmp(twice, a) > 0) r = r - a;
  q = Integer::divexact(c - r, a);
}

/// alpha*a + beta*(shift*b), merged. A vanishing scalar drops its side
/// entirely; gcdext hands gpol a zero cofactor whenever one leading
/// coefficient divides the other.
ZPol combine(const MonomialOrder& ord, const ZPol& a, const Integer& alpha,
             const ZPol& b, const Integer& beta, const Mono& shift) {
  ZPol r;
  if (alpha.is_zero() && beta.is_zero()) return r;
  if (alpha.is_zero()) {
    r.t.reserve(b.t.size());
    for (const auto& tc : b.t) r.t.emplace_back(shift * tc.first, beta * tc.second);
    return r;
  }
  if (beta.is_zero()) {
    r.t.reserve(a.t.size());
    for (const auto& tc : a.t)
      r.t.emplace_back(tc.first, alpha.is_one() ? tc.second : tc.second * alpha);
    return r;
  }
  r.t.reserve(a.t.size() + b.t.size());
  const bool scale_a = !alpha.is_one();
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    Mono mb = shift * b.t[j].first;
    int c = ord.cmp(a.t[i].first, mb);
    if (c > 0) {
      r.t.emplace_back(a.t[i].first, scale_a ? a.t[i].second * alpha : a.t[i].second);
      ++i;
    } else if (c < 0) {
      r.t.emplace_back(mb, beta * b.t[j].second);
      ++j;
    } else {
      Integer v = (scale_a ? a.t[i].second * alpha : a.t[i].second) + beta * b.t[j].second;
      if (!v.is_zero()) r.t.emplace_back(a.t[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i)
    r.t.emplace_back(a.t[i].first, scale_a ? a.t[i].second * alpha : a.t[i].second);
  for (; j < b.t.size(); ++j) r.t.emplace_back(shift * b.t[j].first, beta * b.t[j].second);
  return r;
}

struct ZEngine {
  MonomialOrder ord;
  GbConfig cfg;
  GbStats stats;
  bool budget_hit = false;
  std::vector<ZPol> G;

  explicit ZEngine(const MonomialOrder& o, const GbConfig& c) : ord(o), cfg(c) {}

  /// Strong normal form: every coefficient is a symmetric remainder with
  /// respect to every applicable reducer. `skip_lead` leaves the leading term
  /// alone (tail reduction of basis elements).
  ZPol reduce(ZPol f, const std::vector<ZPol>& basis, const std::vector<uint32_t>& use,
              bool skip_lead = false) {
    size_t idx = skip_lead && !f.t.empty() ? 1 : 0;
    while (idx < f.t.size()) {
      const Mono m = f.t[idx].first;
      bool progressed = false;
      for (uint32_t gi : use) {
        const ZPol& g = basis[gi];
        if (!plm(g).divides(m)) continue;
        Integer q, r;
        sym_divmod(f.t[idx].second, plc(g), q, r);
        if (q.is_zero()) continue;
        f = combine(ord, f, Integer(1), g, -q, plm(g).quotient_of(m));
        ++stats.steps;
        progressed = true;
        break;
      }
      if (!progressed) {
        ++idx;
        continue;
      }
      // stay on the same slot: either the term's coefficient shrank and other
      // reducers may apply, or it vanished and the next term slid in
    }
    return f;
  }

  void flip_positive(ZPol& f) const {
    if (!f.t.empty() && plc(f).sign() < 0)
      for (auto& tc : f.t) tc.second = -tc.second;
  }

  struct Pair {
    uint32_t i, j;
    Mono u;
  };

  std::vector<Pair> pairs;

  void insert(ZPol h) {
    flip_positive(h);
    uint32_t t = static_cast<uint32_t>(G.size());
    for (uint32_t i = 0; i < t; ++i) pairs.push_back({i, t, lcm(plm(G[i]), plm(h))});
    G.push_back(std::move(h));
  }

  size_t select_pair() const {
    size_t best = 0;
    for (size_t a = 1; a < pairs.size(); ++a) {
      const Pair& x = pairs[a];
      const Pair& y = pairs[best];
      bool better;
      if (x.u.deg != y.u.deg) {
        better = x.u.deg < y.u.deg;
      } else if (int c = ord.cmp(x.u, y.u); c != 0) {
        better = c < 0;
      } else {
        better = x.i != y.i ? x.i < y.i : x.j < y.j;
      }
      if (better) best = a;
    }
    return best;
  }

  ZPol spol(const ZPol& f, const ZPol& g) const {
    Mono u = lcm(plm(f), plm(g));
    Integer l = Integer::lcm(plc(f), plc(g));
    ZPol fs = f;
    for (auto& tc : fs.t) tc.first = plm(f).quotient_of(u) * tc.first;
    return combine(ord, fs, Integer::divexact(l, plc(f)), g,
                   -Integer::divexact(l, plc(g)), plm(g).quotient_of(u));
  }

  ZPol gpol(const ZPol& f, const ZPol& g) const {
    Mono u = lcm(plm(f), plm(g));
    Integer s, t;
    Integer::gcdext(plc(f), plc(g), s, t);
    ZPol fs = f;
    for (auto& tc : fs.t) tc.first = plm(f).quotient_of(u) * tc.first;
    return combine(ord, fs, s, g, t, plm(g).quotient_of(u));
  }

  std::vector<uint32_t> all_indices() const {
    std::vector<uint32_t> v(G.size());
    for (uint32_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
  }

  void run(std::vector<ZPol> gens) {
    std::sort(gens.begin(), gens.end(), [&](const ZPol& a, const ZPol& b) {
      if (a.t.empty() || b.t.empty()) return !b.t.empty();
      return ord.cmp(a.t.front().first, b.t.front().first) < 0;
    });
    for (ZPol& g : gens) {
      if (pzero(g)) continue;
      ZPol r = reduce(std::move(g), G, all_indices());
      if (!pzero(r)) insert(std::move(r));
    }
    while (!pairs.empty()) {
      if (stats.pairs >= cfg.max_pairs) {
        budget_hit = true;
        return;
      }
      size_t k = select_pair();
      Pair pr = pairs[k];
      pairs.erase(pairs.begin() + static_cast<long>(k));
      ++stats.pairs;
      for (int which = 0; which < 2; ++which) {
        ZPol s = which == 0 ? spol(G[pr.i], G[pr.j]) : gpol(G[pr.i], G[pr.j]);
        ZPol r = reduce(std::move(s), G, all_indices());
        if (!pzero(r)) insert(std::move(r));
      }
    }
  }

  /// Minimal basis: drop elements whose leading term — coefficient included —
  /// is divisible by another kept element's; then put tails into symmetric-
  /// remainder normal form. Sorted descending by leading monomial, ascending
  /// by leading coefficient on ties.
  std::vector<ZPol> final_basis() {
    std::vector<uint32_t> order_idx(G.size());
    for (uint32_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](uint32_t a, uint32_t b) {
      if (int c = ord.cmp(plm(G[a]), plm(G[b])); c != 0) return c > 0;
      if (int c = Integer::cmp(plc(G[a]), plc(G[b])); c != 0) return c < 0;
      return a < b;
    });
    std::vector<char> dropped(G.size(), 0);
    for (uint32_t gi : order_idx) {
      for (uint32_t hi : order_idx) {
        if (hi == gi || dropped[hi]) continue;
        if (plm(G[hi]).divides(plm(G[gi])) && plc(G[gi]).divisible_by(plc(G[hi]))) {
          dropped[gi] = 1;
          break;
        }
      }
    }
    std::vector<uint32_t> keep;
    for (uint32_t gi : order_idx)
      if (!dropped[gi]) keep.push_back(gi);
    std::vector<ZPol> out;
    out.reserve(keep.size());
    for (size_t k = 0; k < keep.size(); ++k) {
      std::vector<uint32_t> others;
      others.reserve(keep.size() - 1);
      for (size_t j = 0; j < keep.size(); ++j)
        if (j != k) others.push_back(keep[j]);
      out.push_back(reduce(G[keep[k]], G, others, /*skip_lead=*/true));
    }
    return out;
  }

  void certify(const std::vector<ZPol>& basis) {
    std::vector<uint32_t> all(basis.size());
    for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    for (size_t i = 0; i < basis.size(); ++i) {
      for (size_t j = i + 1; j < basis.size(); ++j) {
        if (!pzero(reduce(spol(basis[i], basis[j]), basis, all)) ||
            !pzero(reduce(gpol(basis[i], basis[j]), basis, all)))
          throw std::logic_error(
              "strong_gb_Z: an S- or gcd-polynomial of the computed basis does not "
              "reduce to zero");
      }
    }
  }
};

ZPol to_zpol(const MPoly& f, const MonomialOrder& ord) {
  ZPol r;
  r.t.reserve(f.nterms());
  for (const Term& t : f.terms()) r.t.emplace_back(t.m, std::get<Integer>(t.c));
  std::sort(r.t.begin(), r.t.end(),
            [&](const ZTerm& a, const ZTerm& b) { return ord.cmp(a.first, b.first) > 0; });
  return r;
}

MPoly from_zpol(const ZPol& g, const Ring::Ptr& out) {
  std::vector<Term> terms;
  terms.reserve(g.t.size());
  for (const auto& tc : g.t) terms.push_back({tc.first, tc.second});
  return MPoly(out, std::move(terms));
}

}  // namespace

StrongGbResult strong_gb_Z(const Ideal& I, const MonomialOrder& order,
                           const GbConfig& cfg) {
  if (!I.ring->dom().is_Z())
    throw std::invalid_argument("strong_gb_Z: coefficients must be integers");
  Ring::Ptr out = Ring::make(I.ring->vars(), Domain::ZZ(), order);
  ZEngine eng(order, cfg);
  std::vector<ZPol> gens;
  gens.reserve(I.gens.size());
  for (const MPoly& g : I.gens) gens.push_back(to_zpol(g, order));
  eng.run(std::move(gens));

  StrongGbResult res;
  res.stats = eng.stats;
  if (eng.budget_hit) {
    res.status = GbStatus::Budget;
    for (const ZPol& g : eng.G) res.basis.push_back(from_zpol(g, out));
    return res;
  }
  auto basis = eng.final_basis();
  if (cfg.certify) eng.certify(basis);
  for (const ZPol& g : basis) res.basis.push_back(from_zpol(g, out));
  res.stats = eng.stats;
  return res;
}

MPoly normal_form_Z(const MPoly& f, const std::vector<MPoly>& basis) {
  if (!f.dom().is_Z())
    throw std::invalid_argument("normal_form_Z: coefficients must be integers");
  const MonomialOrder& ord = f.ring()->order();
  ZEngine eng(ord, GbConfig{});
  std::vector<uint32_t> use;
  for (const MPoly& b : basis) {
    if (!(*b.ring() == *f.ring()))
      throw std::invalid_argument("normal_form_Z: basis lives in a different ring");
    if (b.is_zero()) throw std::invalid_argument("normal_form_Z: zero basis element");
    use.push_back(static_cast<uint32_t>(eng.G.size()));
    eng.G.push_back(to_zpol(b, ord));
    eng.flip_positive(eng.G.back());
  }
  return from_zpol(eng.reduce(to_zpol(f, ord), eng.G, use), f.ring());
}

}  // namespace k3v
