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

#include "k3v/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "k3v/rng.hpp"
#include "k3v/unipoly.hpp"

namespace k3v {

void DenominatorLog::record(const Integer& v) {
  Integer a = Integer::abs(v);
  if (Integer::cmp(a, Integer(1)) <= 0) return;
  ++counts[a];
}

std::vector<Integer> DenominatorLog::values() const {
  std::vector<Integer> out;
  out.reserve(counts.size());
  for (const auto& [v, n] : counts) out.push_back(v);
  return out;
}

uint64_t DenominatorLog::total() const {
  uint64_t n = 0;
  for (const auto& [v, c] : counts) n += c;
  return n;
}

namespace {

// ---------------------------------------------------------------------------
// Coefficient policies. One engine below serves three arithmetic backends:
// machine-word prime fields (the mass-testing workhorse), arbitrary field
// domains, and a fraction-free integer mirror of a monic computation over Q
// that logs every value divided by along the way.

struct Mod64Policy {
  using Coef = uint64_t;
  static constexpr bool kFracFree = false;
  uint64_t p;

  Coef zero() const { return 0; }
  Coef one() const { return 1; }
  bool is_zero(Coef a) const { return a == 0; }
  bool is_one(Coef a) const { return a == 1; }
  Coef add(Coef a, Coef b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  Coef sub(Coef a, Coef b) const { return a >= b ? a - b : a + p - b; }
  Coef neg(Coef a) const { return a == 0 ? 0 : p - a; }
  Coef mul(Coef a, Coef b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  Coef inv(Coef a) const {
    uint64_t r = 1, base = a, e = p - 2;  // Fermat
    while (e != 0) {
      if (e & 1u) r = mul(r, base);
      base = mul(base, base);
      e >>= 1u;
    }
    return r;
  }
};

struct BigFieldPolicy {
  using Coef = Value;
  static constexpr bool kFracFree = false;
  Domain d;

  Coef zero() const { return d.zero(); }
  Coef one() const { return d.one(); }
  bool is_zero(const Coef& a) const { return d.is_zero(a); }
  bool is_one(const Coef& a) const { return d.is_one(a); }
  Coef add(const Coef& a, const Coef& b) const { return d.add(a, b); }
  Coef sub(const Coef& a, const Coef& b) const { return d.sub(a, b); }
  Coef neg(const Coef& a) const { return d.neg(a); }
  Coef mul(const Coef& a, const Coef& b) const { return d.mul(a, b); }
  Coef inv(const Coef& a) const { return d.inv(a); }
};

/// Integer coefficients standing in for a monic run over Q. Polynomials are
/// kept primitive with positive leading coefficient; the values stripped as
/// content or pending as monic divisors go to the log when one is attached.
struct ZRecordPolicy {
  using Coef = Integer;
  static constexpr bool kFracFree = true;
  DenominatorLog* log = nullptr;

  Coef zero() const { return Integer(0); }
  Coef one() const { return Integer(1); }
  bool is_zero(const Coef& a) const { return a.is_zero(); }
  bool is_one(const Coef& a) const { return a.is_one(); }
  Coef add(const Coef& a, const Coef& b) const { return a + b; }
  Coef sub(const Coef& a, const Coef& b) const { return a - b; }
  Coef neg(const Coef& a) const { return -a; }
  Coef mul(const Coef& a, const Coef& b) const { return a * b; }
  void record(const Integer& v) const {
    if (log) log->record(v);
  }
};

// ---------------------------------------------------------------------------
// Buchberger engine, generic over the coefficient policy.

template <class P>
class Engine {
 public:
  using C = typename P::Coef;

  /// Terms sorted descending under the active order, plus the sugar degree.
  struct Pol {
    std::vector<std::pair<Mono, C>> t;
    uint32_t sugar = 0;
  };

  Engine(P pol, const MonomialOrder& ord, const GbConfig& cfg)
      : pol_(std::move(pol)), ord_(ord), cfg_(cfg) {}

  const GbStats& stats() const { return stats_; }
  bool budget_hit() const { return budget_hit_; }
  const std::vector<Pol>& all_polys() const { return G_; }
  const std::vector<uint32_t>& alive() const { return alive_; }
  const P& policy() const { return pol_; }

  static bool pzero(const Pol& f) { return f.t.empty(); }
  static const Mono& lm(const Pol& f) { return f.t.front().first; }
  static const C& lc(const Pol& f) { return f.t.front().second; }

  /// alpha*a - beta*(shift*b), merged; exact cancellations dropped.
  Pol combine(const Pol& a, const C& alpha, const Pol& b, const C& beta,
              const Mono& shift) const {
    Pol r;
    r.t.reserve(a.t.size() + b.t.size());
    const bool scale_a = !pol_.is_one(alpha);
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
      Mono mb = shift * b.t[j].first;
      int c = ord_.cmp(a.t[i].first, mb);
      if (c > 0) {
        r.t.emplace_back(a.t[i].first,
                         scale_a ? pol_.mul(a.t[i].second, alpha) : a.t[i].second);
        ++i;
      } else if (c < 0) {
        r.t.emplace_back(mb, pol_.neg(pol_.mul(beta, b.t[j].second)));
        ++j;
      } else {
        C v = pol_.sub(scale_a ? pol_.mul(a.t[i].second, alpha) : a.t[i].second,
                       pol_.mul(beta, b.t[j].second));
        if (!pol_.is_zero(v)) r.t.emplace_back(a.t[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    for (; i < a.t.size(); ++i)
      r.t.emplace_back(a.t[i].first,
                       scale_a ? pol_.mul(a.t[i].second, alpha) : a.t[i].second);
    for (; j < b.t.size(); ++j)
      r.t.emplace_back(shift * b.t[j].first, pol_.neg(pol_.mul(beta, b.t[j].second)));
    r.sugar = std::max(a.sugar, b.sugar + shift.deg);
    return r;
  }

  /// Fraction-free path: primitive part with positive leading coefficient;
  /// the stripped content is logged.
  void normalize_z(Pol& f) const {
    if constexpr (P::kFracFree) {
      if (f.t.empty()) return;
      Integer g(0);
      for (const auto& tc : f.t) {
        g = Integer::gcd(g, tc.second);
        if (g.is_one()) break;
      }
      if (f.t.front().second.sign() < 0) g = -g;
      if (!g.is_one()) {
        pol_.record(g);
        for (auto& tc : f.t) tc.second = Integer::divexact(tc.second, g);
      }
    }
  }

  /// Field path: scale the leading coefficient to 1.
  void monicize(Pol& f) const {
    if constexpr (!P::kFracFree) {
      if (f.t.empty() || pol_.is_one(lc(f))) return;
      C s = pol_.inv(lc(f));
      for (auto& tc : f.t) tc.second = pol_.mul(tc.second, s);
    }
  }

  /// Complete reduction: no term of the result is divisible by a reducer's
  /// leading monomial. Field-path reducers must be monic. A processed prefix
  /// keeps its monomials under every later step (scaling and merging below
  /// the current term never disturb it), so one left-to-right sweep suffices.
  Pol reduce(Pol f, const std::vector<Pol>& G, const std::vector<uint32_t>& use) {
    size_t idx = 0;
    while (idx < f.t.size()) {
      const Mono m = f.t[idx].first;
      const Pol* g = nullptr;
      for (uint32_t gi : use) {
        if (lm(G[gi]).divides(m)) {
          g = &G[gi];
          break;
        }
      }
      if (!g) {
        ++idx;
        continue;
      }
      Mono shift = lm(*g).quotient_of(m);
      C cf = f.t[idx].second;
      if constexpr (P::kFracFree) {
        f = combine(f, lc(*g), *g, cf, shift);
        normalize_z(f);
      } else {
        f = combine(f, pol_.one(), *g, cf, shift);
      }
      ++stats_.steps;
    }
    return f;
  }

  /// S-polynomial; leading terms cancel exactly.
  Pol spoly(const Pol& f, const Pol& g) const {
    Mono u = lcm(lm(f), lm(g));
    Mono sf = lm(f).quotient_of(u);
    Mono sg = lm(g).quotient_of(u);
    Pol fs = f;
    for (auto& tc : fs.t) tc.first = sf * tc.first;
    fs.sugar = f.sugar + sf.deg;
    if constexpr (P::kFracFree) {
      return combine(fs, lc(g), g, lc(f), sg);
    } else {
      return combine(fs, pol_.one(), g, pol_.one(), sg);  // both monic
    }
  }

  void insert(Pol h) {
    normalize_z(h);
    monicize(h);
    G_.push_back(std::move(h));
    if constexpr (P::kFracFree) pol_.record(lc(G_.back()));
    all_.push_back(static_cast<uint32_t>(G_.size() - 1));
    update_pairs(static_cast<uint32_t>(G_.size() - 1));
  }

  void run(std::vector<Pol> gens) {
    std::sort(gens.begin(), gens.end(), [&](const Pol& a, const Pol& b) {
      if (a.t.empty() || b.t.empty()) return !b.t.empty();
      return ord_.cmp(a.t.front().first, b.t.front().first) < 0;
    });
    for (Pol& g : gens) {
      if (pzero(g)) continue;
      Pol r = reduce(std::move(g), G_, all_);
      if (!pzero(r)) insert(std::move(r));
    }
    while (!pairs_.empty()) {
      if (stats_.pairs >= cfg_.max_pairs) {
        budget_hit_ = true;
        return;
      }
      size_t k = select_pair();
      Pair pr = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<long>(k));
      ++stats_.pairs;
      Pol s = spoly(G_[pr.i], G_[pr.j]);
      s.sugar = pr.sugar;
      Pol r = reduce(std::move(s), G_, all_);
      if (!pzero(r)) insert(std::move(r));
    }
  }

  /// Minimal basis with fully reduced tails, sorted descending by leading
  /// monomial. The live leading monomials are pairwise indivisible by
  /// construction, so only tails need work; leading terms cannot change.
  std::vector<Pol> final_basis() {
    std::vector<uint32_t> keep = alive_;
    std::sort(keep.begin(), keep.end(), [&](uint32_t a, uint32_t b) {
      return ord_.cmp(lm(G_[a]), lm(G_[b])) > 0;
    });
    std::vector<Pol> out;
    out.reserve(keep.size());
    for (size_t k = 0; k < keep.size(); ++k) {
      std::vector<uint32_t> others;
      others.reserve(keep.size() - 1);
      for (size_t j = 0; j < keep.size(); ++j)
        if (j != k) others.push_back(keep[j]);
      out.push_back(reduce(G_[keep[k]], G_, others));
    }
    return out;
  }

  /// Re-derives the defining property: every S-polynomial of the basis has
  /// normal form zero. Cheap next to the computation itself, and it turns a
  /// silent engine bug into a loud failure.
  void certify(const std::vector<Pol>& basis) {
    std::vector<uint32_t> all(basis.size());
    std::iota(all.begin(), all.end(), 0u);
    for (size_t i = 0; i < basis.size(); ++i) {
      for (size_t j = i + 1; j < basis.size(); ++j) {
        Pol r = reduce(spoly(basis[i], basis[j]), basis, all);
        if (!pzero(r))
          throw std::logic_error(
              "groebner: an S-polynomial of the computed basis does not reduce to zero");
      }
    }
  }

 private:
  struct Pair {
    uint32_t i, j;
    Mono u;
    uint32_t sugar;
  };

  /// Gebauer-Moller update for a new basis element at index t: the chain
  /// criterion prunes old pairs, the strict-divisor and equal-lcm rules prune
  /// the new column, the product criterion drops coprime survivors, and live
  /// elements whose leading monomial the newcomer divides retire from pair
  /// creation (they stay available as reducers).
  void update_pairs(uint32_t t) {
    const Mono& ht = lm(G_[t]);
    struct Cand {
      uint32_t i;
      Mono u;
      bool cop;
    };
    std::vector<Cand> cand;
    cand.reserve(alive_.size());
    for (uint32_t i : alive_)
      cand.push_back({i, lcm(lm(G_[i]), ht), coprime(lm(G_[i]), ht)});

    std::vector<char> drop(cand.size(), 0);
    for (size_t a = 0; a < cand.size(); ++a) {
      for (size_t b = 0; b < cand.size(); ++b) {
        if (b == a || cand[b].u == cand[a].u) continue;
        if (cand[b].u.divides(cand[a].u)) {
          drop[a] = 1;
          break;
        }
      }
    }
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      size_t rep = a;  // keep one per lcm class, preferring a coprime member
      for (size_t b = a + 1; b < cand.size(); ++b)
        if (!drop[b] && cand[b].u == cand[a].u && cand[b].cop && !cand[rep].cop) rep = b;
      for (size_t b = a; b < cand.size(); ++b)
        if (!drop[b] && cand[b].u == cand[a].u && b != rep) drop[b] = 1;
    }
    for (size_t a = 0; a < cand.size(); ++a)
      if (!drop[a] && cand[a].cop) drop[a] = 1;

    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const Pair& pr : pairs_) {
      bool cut = ht.divides(pr.u) && lcm(lm(G_[pr.i]), ht) != pr.u &&
                 lcm(lm(G_[pr.j]), ht) != pr.u;
      if (!cut) kept.push_back(pr);
    }
    pairs_ = std::move(kept);
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      const Mono& u = cand[a].u;
      uint32_t sug = std::max(G_[cand[a].i].sugar + (u.deg - lm(G_[cand[a].i]).deg),
                              G_[t].sugar + (u.deg - ht.deg));
      pairs_.push_back({cand[a].i, t, u, sug});
    }

    std::vector<uint32_t> still;
    still.reserve(alive_.size() + 1);
    for (uint32_t i : alive_)
      if (!ht.divides(lm(G_[i]))) still.push_back(i);
    still.push_back(t);
    alive_ = std::move(still);
  }

  size_t select_pair() const {
    size_t best = 0;
    for (size_t a = 1; a < pairs_.size(); ++a) {
      const Pair& x = pairs_[a];
      const Pair& y = pairs_[best];
      bool better;
      if (cfg_.strategy == PairStrategy::Sugar && x.sugar != y.sugar) {
        better = x.sugar < y.sugar;
      } else if (x.u.deg != y.u.deg) {
        better = x.u.deg < y.u.deg;
      } else if (int c = ord_.cmp(x.u, y.u); c != 0) {
        better = c < 0;
      } else {
        better = x.i != y.i ? x.i < y.i : x.j < y.j;
      }
      if (better) best = a;
    }
    return best;
  }

  P pol_;
  MonomialOrder ord_;
  GbConfig cfg_;
  GbStats stats_;
  bool budget_hit_ = false;

  std::vector<Pol> G_;
  std::vector<uint32_t> alive_;
  std::vector<uint32_t> all_;
  std::vector<Pair> pairs_;
};

// ---------------------------------------------------------------------------
// MPoly <-> engine conversions.

template <class P>
typename Engine<P>::Pol to_pol(const P& pol, const MPoly& f, const MonomialOrder& ord) {
  typename Engine<P>::Pol r;
  r.t.reserve(f.nterms());
  if constexpr (P::kFracFree) {
    // clear denominators poly-wide; their lcm is a logged divisor
    Integer den(1);
    for (const Term& t : f.terms()) den = Integer::lcm(den, std::get<Rational>(t.c).den());
    pol.record(den);
    for (const Term& t : f.terms()) {
      const Rational& c = std::get<Rational>(t.c);
      r.t.emplace_back(t.m, c.num() * Integer::divexact(den, c.den()));
    }
  } else if constexpr (std::is_same_v<P, Mod64Policy>) {
    for (const Term& t : f.terms())
      r.t.emplace_back(t.m, std::get<FFElem>(t.c).c[0].to_ulong());
  } else {
    for (const Term& t : f.terms()) r.t.emplace_back(t.m, t.c);
  }
  std::sort(r.t.begin(), r.t.end(),
            [&](const auto& a, const auto& b) { return ord.cmp(a.first, b.first) > 0; });
  r.sugar = f.is_zero() ? 0 : static_cast<uint32_t>(f.total_degree());
  return r;
}

template <class P>
MPoly from_pol(const P& pol, const typename Engine<P>::Pol& g, const Ring::Ptr& out) {
  std::vector<Term> terms;
  terms.reserve(g.t.size());
  if constexpr (P::kFracFree) {
    if (!g.t.empty()) {
      // primitive integer terms become a monic polynomial over Q; the leading
      // coefficient is the divisor this element has been carrying all along
      const Integer& l = g.t.front().second;
      pol.record(l);
      for (const auto& tc : g.t)
        terms.push_back({tc.first, Value(Rational(tc.second, l))});
    }
  } else if constexpr (std::is_same_v<P, Mod64Policy>) {
    const FiniteField::Ptr& F = out->dom().field();
    for (const auto& tc : g.t)
      terms.push_back({tc.first, F->from_integer(Integer(static_cast<long>(tc.second)))});
  } else {
    for (const auto& tc : g.t) terms.push_back({tc.first, tc.second});
  }
  return MPoly(out, std::move(terms));
}

template <class P>
GbResult run_policy(P pol, const Ideal& I, const Ring::Ptr& out_ring,
                    const MonomialOrder& ord, const GbConfig& cfg, bool want_log) {
  DenominatorLog log;
  if constexpr (P::kFracFree) pol.log = want_log ? &log : nullptr;

  Engine<P> eng(pol, ord, cfg);
  std::vector<typename Engine<P>::Pol> gens;
  gens.reserve(I.gens.size());
  for (const MPoly& g : I.gens) gens.push_back(to_pol(eng.policy(), g, ord));
  eng.run(std::move(gens));

  GbResult res;
  res.stats = eng.stats();
  if (eng.budget_hit()) {
    res.status = GbStatus::Budget;
    std::vector<uint32_t> keep = eng.alive();
    std::sort(keep.begin(), keep.end(), [&](uint32_t a, uint32_t b) {
      return ord.cmp(eng.all_polys()[a].t.front().first,
                     eng.all_polys()[b].t.front().first) > 0;
    });
    for (uint32_t i : keep)
      res.basis.push_back(from_pol(eng.policy(), eng.all_polys()[i], out_ring));
  } else {
    auto basis = eng.final_basis();
    if (cfg.certify) eng.certify(basis);
    for (const auto& g : basis) res.basis.push_back(from_pol(eng.policy(), g, out_ring));
  }
  if constexpr (P::kFracFree) {
    if (want_log) res.denominators = std::move(log);
  }
  return res;
}

template <class P>
MPoly nf_policy(P pol, const MPoly& f, const std::vector<MPoly>& divisors) {
  const MonomialOrder& ord = f.ring()->order();
  Engine<P> eng(std::move(pol), ord, GbConfig{});
  std::vector<typename Engine<P>::Pol> G;
  std::vector<uint32_t> use;
  G.reserve(divisors.size());
  for (const MPoly& d : divisors) {
    auto g = to_pol(eng.policy(), d, ord);
    eng.monicize(g);
    use.push_back(static_cast<uint32_t>(G.size()));
    G.push_back(std::move(g));
  }
  auto r = eng.reduce(to_pol(eng.policy(), f, ord), G, use);
  return from_pol(eng.policy(), r, f.ring());
}

bool fits_word_prime(const Domain& d) {
  return d.is_Fq() && d.field()->k() == 1 && d.field()->p().bits() <= 31;
}

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& divisors) {
  const Domain& dom = f.dom();
  if (dom.is_Z())
    throw std::invalid_argument("normal_form: coefficients must form a field");
  for (const MPoly& d : divisors) {
    if (!(*d.ring() == *f.ring()))
      throw std::invalid_argument("normal_form: divisors live in a different ring");
    if (d.is_zero()) throw std::invalid_argument("normal_form: zero divisor");
  }
  if (fits_word_prime(dom))
    return nf_policy(Mod64Policy{dom.field()->p().to_ulong()}, f, divisors);
  return nf_policy(BigFieldPolicy{dom}, f, divisors);
}

GbResult buchberger(const Ideal& I, const MonomialOrder& order, const GbConfig& cfg) {
  const Domain& dom = I.ring->dom();
  if (dom.is_Z())
    throw std::invalid_argument(
        "buchberger: integer coefficient rings are handled by strong_gb_Z");
  Ring::Ptr out = Ring::make(I.ring->vars(), dom, order);
  if (dom.is_Fq()) {
    if (fits_word_prime(dom))
      return run_policy(Mod64Policy{dom.field()->p().to_ulong()}, I, out, order, cfg,
                        false);
    return run_policy(BigFieldPolicy{dom}, I, out, order, cfg, false);
  }
  return run_policy(ZRecordPolicy{}, I, out, order, cfg, cfg.record_denominators);
}

EliminationResult elimination_ideal(const Ideal& I, uint16_t elim_mask,
                                    const GbConfig& cfg) {
  unsigned n = I.ring->nvars();
  if (elim_mask == 0 || (elim_mask >> n) != 0)
    throw std::invalid_argument("elimination_ideal: mask must select existing variables");
  GbResult gb = buchberger(I, MonomialOrder::block(elim_mask), cfg);
  EliminationResult res;
  res.status = gb.status;
  res.denominators = std::move(gb.denominators);
  for (const MPoly& g : gb.basis) {
    bool free_of_elim = true;
    for (unsigned i = 0; i < n && free_of_elim; ++i)
      if (((elim_mask >> i) & 1u) != 0 && g.degree_in(i) > 0) free_of_elim = false;
    if (free_of_elim) res.gens.push_back(g.with_order(I.ring->order()));
  }
  return res;
}

Triviality is_trivial(const Ideal& I, const GbConfig& cfg) {
  GbResult gb = buchberger(I, MonomialOrder::grevlex(), cfg);
  if (gb.status == GbStatus::Budget) return Triviality::Inconclusive;
  if (gb.basis.size() == 1 && gb.basis[0].is_constant()) return Triviality::Trivial;
  return Triviality::Proper;
}

// ---------------------------------------------------------------------------
// Zero-dimensional solving over a prime field.

namespace {

/// A polynomial all of whose terms involve only variable `var`, as a dense
/// univariate polynomial over the same domain.
UniPoly to_unipoly_in(const MPoly& f, unsigned var) {
  Domain d = f.dom();
  std::vector<Value> cs(static_cast<size_t>(f.degree_in(var)) + 1, d.zero());
  for (const Term& t : f.terms()) cs[t.m.e[var]] = t.c;
  return UniPoly(std::move(d), std::move(cs));
}

/// Distinct roots of f in the field of its coefficients.
std::vector<FFElem> roots_in_field(const UniPoly& f, const FiniteField::Ptr& F, Rng& rng) {
  if (f.deg() <= 0) return {};
  const Domain& d = f.dom();
  UniPoly fm = f.monic();
  UniPoly t = UniPoly::monomial(d, d.one(), 1);
  UniPoly g = unipoly_gcd(fm, t.powmod(F->q(), fm) - t);
  if (g.deg() <= 0) return {};
  auto fac = unipoly_factor(g, rng);
  std::vector<FFElem> roots;
  roots.reserve(fac.factors.size());
  for (const auto& [h, mult] : fac.factors)
    roots.push_back(F->neg(std::get<FFElem>(h.coeff(0))));
  return roots;
}

/// Number of distinct roots of squarefree f lying in the degree-j extension
/// of its coefficient field.
uint64_t roots_within(const UniPoly& f, const FiniteField::Ptr& F, unsigned j) {
  const Domain& d = f.dom();
  UniPoly t = UniPoly::monomial(d, d.one(), 1);
  UniPoly g = unipoly_gcd(f, t.powmod(Integer::pow(F->q(), j), f) - t);
  return g.deg() <= 0 ? 0u : static_cast<uint64_t>(g.deg());
}

UniPoly squarefree_part(const UniPoly& f) {
  UniPoly r = UniPoly::one(f.dom());
  for (const auto& [g, mult] : squarefree_decomposition(f)) r = r * g;
  return r;
}

/// The univariate polynomial in the first variable obtained by fixing the
/// second to beta, with coefficients moved into beta's field.
UniPoly fiber_poly(const MPoly& f, const FFElem& beta, const FiniteField::Ptr& Fm) {
  Domain dm = Domain::GF(Fm);
  int da = f.degree_in(0);
  int db = f.degree_in(1);
  std::vector<FFElem> bp(static_cast<size_t>(db) + 1);
  bp[0] = Fm->one();
  for (int i = 1; i <= db; ++i) bp[i] = Fm->mul(bp[static_cast<size_t>(i) - 1], beta);
  std::vector<Value> cs(static_cast<size_t>(da) + 1, dm.zero());
  for (const Term& t : f.terms()) {
    FFElem c = Fm->from_integer(std::get<FFElem>(t.c).c[0]);
    cs[t.m.e[0]] = dm.add(cs[t.m.e[0]], Fm->mul(c, bp[t.m.e[1]]));
  }
  return UniPoly(std::move(dm), std::move(cs));
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

}  // namespace

SolveResult solve_zero_dim(const Ideal& I, unsigned K, const GbConfig& cfg) {
  const Domain& dom = I.ring->dom();
  if (!dom.is_Fq() || dom.field()->k() != 1)
    throw std::invalid_argument("solve_zero_dim: coefficients must lie in a prime field");
  unsigned n = I.ring->nvars();
  if (n != 1 && n != 2)
    throw std::invalid_argument("solve_zero_dim: supports 1 or 2 variables");
  if (K < 1 || K > 6)
    throw std::invalid_argument("solve_zero_dim: extension bound must be in 1..6");

  SolveResult res;
  GbResult gb = buchberger(I, MonomialOrder::lex(), cfg);
  if (gb.status == GbStatus::Budget) {
    res.kind = SolveResult::Kind::Inconclusive;
    return res;
  }
  if (gb.basis.empty()) {  // zero ideal
    res.kind = SolveResult::Kind::PositiveDim;
    return res;
  }
  if (gb.basis.size() == 1 && gb.basis[0].is_constant()) {
    res.kind = SolveResult::Kind::Solved;  // no solutions anywhere
    return res;
  }

  // Zero-dimensional iff every variable has a basis element whose leading
  // monomial is a pure power of it. Under lex the pure power of the last
  // variable forces that element univariate: it is the eliminant.
  int elim_idx = -1;
  bool first_var_bounded = (n == 1);
  for (size_t i = 0; i < gb.basis.size(); ++i) {
    const Mono& m = gb.basis[i].lm();
    if (n == 1) {
      if (m.e[0] > 0) elim_idx = static_cast<int>(i);
    } else {
      if (m.e[0] == 0 && m.e[1] > 0) elim_idx = static_cast<int>(i);
      if (m.e[0] > 0 && m.e[1] == 0) first_var_bounded = true;
    }
  }
  if (elim_idx < 0 || !first_var_bounded) {
    res.kind = SolveResult::Kind::PositiveDim;
    return res;
  }

  const FiniteField::Ptr& Fp = dom.field();
  UniPoly elim = to_unipoly_in(gb.basis[static_cast<size_t>(elim_idx)], n - 1);
  Rng rng(kDefaultSeed);
  auto efac = unipoly_factor(elim, rng);
  std::map<unsigned, uint64_t> beyond;  // min_degree -> count

  if (n == 1) {
    for (const auto& [h, mult] : efac.factors) {
      unsigned d = static_cast<unsigned>(h.deg());
      if (d > K) {
        beyond[d] += d;
        continue;
      }
      FiniteField::Ptr Fd = d == 1 ? Fp : FiniteField::make(Fp->p(), d);
      for (const FFElem& r : roots_in_field(unipoly_coerce(Domain::GF(Fd), h), Fd, rng))
        res.points.push_back({Fd, {r}, d});
    }
  } else {
    // Degree-m extensions, smallest first. Every solution of field degree m
    // has both coordinates in F_{p^m}, is found there, and is kept exactly
    // when the lcm of its coordinate degrees is m — so nothing repeats.
    for (unsigned m = 1; m <= K; ++m) {
      FiniteField::Ptr Fm = m == 1 ? Fp : FiniteField::make(Fp->p(), m);
      Domain dm = Domain::GF(Fm);
      for (const FFElem& beta : roots_in_field(unipoly_coerce(dm, elim), Fm, rng)) {
        unsigned db = Fm->degree_over_prime(beta);
        UniPoly g = UniPoly::zero(dm);
        bool first = true;
        for (const MPoly& B : gb.basis) {
          UniPoly fib = fiber_poly(B, beta, Fm);
          g = first ? (fib.is_zero() ? fib : fib.monic()) : unipoly_gcd(g, fib);
          first = false;
          if (g.deg() == 0) break;
        }
        for (const FFElem& alpha : roots_in_field(g, Fm, rng)) {
          unsigned da = Fm->degree_over_prime(alpha);
          if (lcm_u(da, db) == m) res.points.push_back({Fm, {alpha, beta}, m});
        }
        if (db == m) {
          // Exact census of the solutions above this beta: counting distinct
          // roots of the fiber polynomial within each tower level separates
          // what lies inside the bound from what lies beyond it. Solutions
          // above beta have field degree a multiple of m.
          UniPoly gsf = squarefree_part(g);
          if (gsf.deg() > 0) {
            uint64_t total = static_cast<uint64_t>(gsf.deg());
            std::vector<uint64_t> exact(K / m + 1, 0);
            uint64_t found = 0;
            for (unsigned u = 1; u <= K / m; ++u) {
              uint64_t r = roots_within(gsf, Fm, u);
              for (unsigned v = 1; v < u; ++v)
                if (u % v == 0) r -= exact[v];
              exact[u] = r;
              found += r;
            }
            if (total > found) beyond[K + 1] += total - found;
          }
        }
      }
    }
    // Eliminant factors past the bound: every root of the eliminant extends
    // to a solution, because the pure power of the first variable has a unit
    // leading coefficient (extension theorem), and the solutions above the
    // conjugate roots of one factor are pairwise distinct.
    for (const auto& [h, mult] : efac.factors) {
      unsigned d = static_cast<unsigned>(h.deg());
      if (d > K) beyond[d] += d;
    }
  }

  res.kind = SolveResult::Kind::Solved;
  for (const auto& [d, c] : beyond) res.beyond.push_back({d, c});
  return res;
}

}  // namespace k3v
