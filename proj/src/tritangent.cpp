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

#include "k3v/tritangent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "k3v/prime.hpp"

namespace k3v {

namespace {

void check_sextic(const MPoly& f) {
  if (f.ring()->nvars() != 3)
    throw std::invalid_argument("tritangent: expected a polynomial in three variables");
  if (f.is_zero() || f.total_degree() != 6)
    throw std::invalid_argument("tritangent: expected a nonzero form of degree 6");
  for (const Term& t : f.terms())
    if (t.m.deg != 6)
      throw std::invalid_argument("tritangent: polynomial is not homogeneous");
}

constexpr long kBinom[7][7] = {
    {1, 0, 0, 0, 0, 0, 0},      {1, 1, 0, 0, 0, 0, 0},     {1, 2, 1, 0, 0, 0, 0},
    {1, 3, 3, 1, 0, 0, 0},      {1, 4, 6, 4, 1, 0, 0},     {1, 5, 10, 10, 5, 1, 0},
    {1, 6, 15, 20, 15, 6, 1}};

/// The seven t-coefficients of f(1, t, a + b*t) as polynomials in the chart
/// variables, built in `r2` (two variables; `ai`, `bi` are the indices of a
/// and b, letting the caller swap the variable order).
std::array<MPoly, 7> chart_a_coeffs(const MPoly& f, const Ring::Ptr& r2,
                                    unsigned ai, unsigned bi) {
  const Domain& d = r2->dom();
  std::array<std::vector<Term>, 7> terms;
  for (const Term& t : f.terms()) {
    Value cc = d.coerce(f.dom(), t.c);
    unsigned ey = t.m.e[1], ez = t.m.e[2];
    for (unsigned j = 0; j <= ez; ++j) {
      Value v = d.mul(cc, d.from_integer(Integer(kBinom[ez][j])));
      Mono m;
      m.e[ai] = static_cast<uint16_t>(ez - j);
      m.e[bi] = static_cast<uint16_t>(j);
      m.deg = ez;
      terms[ey + j].push_back({m, std::move(v)});
    }
  }
  std::array<MPoly, 7> out = {MPoly(r2), MPoly(r2), MPoly(r2), MPoly(r2),
                              MPoly(r2), MPoly(r2), MPoly(r2)};
  for (int i = 0; i < 7; ++i) out[i] = MPoly(r2, std::move(terms[i]));
  return out;
}

/// The seven t-coefficients of f(1, a, t) in the one-variable ring `r1`.
std::array<MPoly, 7> chart_b_coeffs(const MPoly& f, const Ring::Ptr& r1) {
  const Domain& d = r1->dom();
  std::array<std::vector<Term>, 7> terms;
  for (const Term& t : f.terms()) {
    Value cc = d.coerce(f.dom(), t.c);
    Mono m = Mono::var(0, t.m.e[1]);
    terms[t.m.e[2]].push_back({m, std::move(cc)});
  }
  std::array<MPoly, 7> out = {MPoly(r1), MPoly(r1), MPoly(r1), MPoly(r1),
                              MPoly(r1), MPoly(r1), MPoly(r1)};
  for (int i = 0; i < 7; ++i) out[i] = MPoly(r1, std::move(terms[i]));
  return out;
}

Ideal substitute_cone(const std::array<MPoly, 7>& dvals, const Ring::Ptr& ring) {
  Ideal cone = square_cone_ideal().over(ring->dom());
  std::map<std::string, MPoly> images;
  for (int i = 0; i < 7; ++i)
    images.emplace("d" + std::to_string(i), dvals[static_cast<size_t>(i)]);
  std::vector<MPoly> gens;
  for (const MPoly& g : cone.gens) {
    MPoly h = g.substitute(images);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  return Ideal::of(ring, std::move(gens));
}

Ideal chart_a_ideal(const MPoly& f, const Domain& dom, bool swap_vars) {
  std::vector<std::string> vars =
      swap_vars ? std::vector<std::string>{"b", "a"} : std::vector<std::string>{"a", "b"};
  auto r2 = Ring::make(std::move(vars), dom, MonomialOrder::grevlex());
  unsigned ai = swap_vars ? 1 : 0, bi = swap_vars ? 0 : 1;
  return substitute_cone(chart_a_coeffs(f, r2, ai, bi), r2);
}

FFElem embed_coeff(const FiniteField::Ptr& F, const Domain& from, const Value& v) {
  if (from.is_Z()) return F->from_integer(std::get<Integer>(v));
  if (from.is_Q()) {
    const Rational& r = std::get<Rational>(v);
    return F->div(F->from_integer(r.num()), F->from_integer(r.den()));
  }
  if (from.is_Fq() && from.field()->k() == 1 &&
      Integer::cmp(from.field()->p(), F->p()) == 0)
    return F->from_integer(std::get<FFElem>(v).c[0]);
  throw std::invalid_argument(
      "coefficients must come from Z, Q, or the matching prime field");
}

std::vector<FFElem> field_elements(const FiniteField::Ptr& F) {
  unsigned long p = F->p().to_ulong();
  unsigned long q = F->q().to_ulong();
  std::vector<FFElem> out;
  out.reserve(q);
  for (unsigned long n = 0; n < q; ++n) {
    std::vector<Integer> cs(F->k());
    unsigned long v = n;
    for (unsigned i = 0; i < F->k(); ++i) {
      cs[i] = Integer(static_cast<long>(v % p));
      v /= p;
    }
    out.push_back(F->from_coeffs(std::move(cs)));
  }
  return out;
}

void merge_beyond(std::map<unsigned, uint64_t>& acc, const std::vector<BeyondBound>& more) {
  for (const BeyondBound& b : more) acc[b.min_degree] += b.count;
}

/// Generators sorted cheap-first plus a starting prefix size: the smallest
/// prefix that is already the unit ideal modulo a pretest prime, widened to
/// whichever of a few nearby sizes minimizes the mod-p reduction step count.
/// Over Q the fraction-free coefficient growth tracks chain length, not
/// generator count, so a handful of extra reducers is often a large win. The
/// choice is purely a cost heuristic: the rational run re-checks unit-ness.
struct PrefixPlan {
  std::vector<MPoly> sorted;
  size_t k;
};

PrefixPlan plan_prefix(const Ideal& I, bool reverse_order) {
  PrefixPlan plan;
  plan.sorted = I.gens;
  std::stable_sort(plan.sorted.begin(), plan.sorted.end(),
                   [](const MPoly& a, const MPoly& b) {
                     if (a.total_degree() != b.total_degree())
                       return a.total_degree() < b.total_degree();
                     return a.nterms() < b.nterms();
                   });
  if (reverse_order) std::reverse(plan.sorted.begin(), plan.sorted.end());
  plan.k = plan.sorted.size();

  auto F = FiniteField::make(Integer(1'000'003L));
  auto rp = Ring::make(I.ring->vars(), Domain::GF(F), I.ring->order());
  std::vector<MPoly> modp;
  modp.reserve(plan.sorted.size());
  for (const MPoly& g : plan.sorted) {
    MPoly h = g.coerced(rp);
    if (!h.is_zero()) modp.push_back(std::move(h));
  }
  GbConfig fast;
  fast.certify = false;
  size_t base = modp.size();
  for (size_t k = 1; k <= modp.size(); ++k) {
    std::vector<MPoly> pre(modp.begin(), modp.begin() + k);
    if (is_trivial(Ideal::of(rp, std::move(pre)), fast) == Triviality::Trivial) {
      base = k;
      break;
    }
  }
  if (base == modp.size()) return plan;  // pretest never went unit: use everything

  uint64_t best_steps = ~uint64_t{0};
  for (size_t extra : {size_t{0}, size_t{2}, size_t{5}, size_t{9}}) {
    size_t k = std::min(base + extra, modp.size());
    std::vector<MPoly> pre(modp.begin(), modp.begin() + k);
    GbResult g = buchberger(Ideal::of(rp, std::move(pre)), rp->order(), fast);
    if (g.status == GbStatus::Ok && g.stats.steps < best_steps) {
      best_steps = g.stats.steps;
      plan.k = k;
    }
  }
  return plan;
}

/// The seven equations matching the t-coefficients of d0 + d1 t + ... + d6 t^6
/// against (c0 + c1 t + c2 t^2 + c3 t^3)^2, in ring[c0..c3, d0..d6]
/// (variables 0..3 are the c's, 4..10 the d's).
std::vector<MPoly> square_matching_equations(const Ring::Ptr& r) {
  std::vector<MPoly> eqs;
  eqs.reserve(7);
  for (unsigned i = 0; i <= 6; ++i) {
    std::vector<Term> t;
    t.push_back({Mono::var(4 + i), r->dom().one()});
    for (unsigned j = (i >= 3 ? i - 3 : 0); 2 * j <= i; ++j) {
      unsigned k = i - j;
      if (k > 3) continue;
      Mono m = Mono::var(j) * Mono::var(k);
      t.push_back({m, r->dom().from_integer(Integer(j == k ? -1 : -2))});
    }
    eqs.emplace_back(r, std::move(t));
  }
  return eqs;
}

const std::vector<std::string>& cone_vars() {
  static const std::vector<std::string> vars = {"c0", "c1", "c2", "c3", "d0", "d1",
                                                "d2", "d3", "d4", "d5", "d6"};
  return vars;
}

/// The cone recomputed at characteristic p. Reducing the integral generators
/// modulo p cuts out the right variety at almost every prime, but finitely
/// many bad primes pick up spurious solutions (p = 5 is one: the reduced
/// generators vanish on vectors that are not scaled squares), so finite
/// fields always get a fresh elimination. Cached per characteristic.
const Ideal& cone_gens_mod_p(const Integer& p) {
  static std::map<Integer, Ideal> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;

  Domain dp = Domain::GF(FiniteField::make(p));
  auto r11 = Ring::make(cone_vars(), dp, MonomialOrder::grevlex());
  EliminationResult elim =
      elimination_ideal(Ideal::of(r11, square_matching_equations(r11)), 0b1111);
  if (elim.status != GbStatus::Ok)
    throw std::logic_error("square_cone_ideal: elimination exceeded its budget");

  auto rd = Ring::make({"d0", "d1", "d2", "d3", "d4", "d5", "d6"}, dp,
                       MonomialOrder::grevlex());
  std::vector<MPoly> gens;
  gens.reserve(elim.gens.size());
  for (const MPoly& g : elim.gens) {
    std::vector<Term> terms;
    terms.reserve(g.nterms());
    for (const Term& t : g.terms()) {
      Mono m;
      for (unsigned v = 0; v < 7; ++v) m.e[v] = t.m.e[4 + v];
      m.deg = t.m.deg;
      terms.push_back({m, t.c});
    }
    gens.push_back(MPoly(rd, std::move(terms)));
  }
  return cache.emplace(p, Ideal::of(rd, std::move(gens))).first->second;
}

}  // namespace

Ideal SquareConeIdeal::over(const Domain& dom) const {
  if (dom.is_Z()) return over_Z;
  if (dom.is_Q()) {
    auto ring = Ring::make(over_Z.ring->vars(), dom, over_Z.ring->order());
    std::vector<MPoly> gens;
    gens.reserve(over_Z.gens.size());
    for (const MPoly& g : over_Z.gens) gens.push_back(g.coerced(ring));
    return Ideal::of(ring, std::move(gens));
  }
  // Finite fields: fresh elimination at this characteristic (see
  // cone_gens_mod_p), then an embedding into the requested field, which may
  // be an extension (a basis over F_p stays one over F_{p^k}).
  const FiniteField::Ptr& F = dom.field();
  const Ideal& base = cone_gens_mod_p(F->p());
  auto ring = Ring::make(base.ring->vars(), dom, base.ring->order());
  std::vector<MPoly> gens;
  gens.reserve(base.gens.size());
  for (const MPoly& g : base.gens) {
    std::vector<Term> terms;
    terms.reserve(g.nterms());
    for (const Term& t : g.terms())
      terms.push_back({t.m, embed_coeff(F, base.ring->dom(), t.c)});
    gens.push_back(MPoly(ring, std::move(terms)));
  }
  return Ideal::of(ring, std::move(gens));
}

const SquareConeIdeal& square_cone_ideal() {
  static const SquareConeIdeal cone = [] {
    auto rq = Ring::make(cone_vars(), Domain::QQ(), MonomialOrder::grevlex());
    EliminationResult elim =
        elimination_ideal(Ideal::of(rq, square_matching_equations(rq)), 0b1111);
    if (elim.status != GbStatus::Ok)
      throw std::logic_error("square_cone_ideal: elimination exceeded its budget");

    auto rz = Ring::make({"d0", "d1", "d2", "d3", "d4", "d5", "d6"}, Domain::ZZ(),
                         MonomialOrder::grevlex());
    std::vector<MPoly> gens;
    gens.reserve(elim.gens.size());
    for (const MPoly& g : elim.gens) {
      Integer den(1);
      for (const Term& t : g.terms())
        den = Integer::lcm(den, std::get<Rational>(t.c).den());
      std::vector<Term> terms;
      terms.reserve(g.nterms());
      for (const Term& t : g.terms()) {
        Mono m;
        for (unsigned v = 0; v < 7; ++v) m.e[v] = t.m.e[4 + v];
        m.deg = t.m.deg;
        const Rational& c = std::get<Rational>(t.c);
        terms.push_back({m, c.num() * Integer::divexact(den, c.den())});
      }
      gens.push_back(MPoly(rz, std::move(terms)).primitive_part());
    }
    return SquareConeIdeal{Ideal::of(rz, std::move(gens))};
  }();
  return cone;
}

Ideal tritangent_ideal(const MPoly& f, LineChart chart, const Domain& dom) {
  check_sextic(f);
  switch (chart) {
    case LineChart::A:
      return chart_a_ideal(f, dom, /*swap_vars=*/false);
    case LineChart::B: {
      auto r1 = Ring::make({"a"}, dom, MonomialOrder::grevlex());
      return substitute_cone(chart_b_coeffs(f, r1), r1);
    }
    case LineChart::C:
      throw std::invalid_argument(
          "tritangent_ideal: the chart x = 0 is a single line; use line_x0_tritangent");
  }
  throw std::invalid_argument("tritangent_ideal: unknown chart");
}

bool line_x0_tritangent(const MPoly& f) {
  check_sextic(f);
  Domain d = f.dom().is_Z() ? Domain::QQ() : f.dom();
  UniPoly D(d);
  for (const Term& t : f.terms()) {
    if (t.m.e[0] != 0) continue;
    D = D + UniPoly::monomial(d, d.coerce(f.dom(), t.c), t.m.e[2]);
  }
  if (D.is_zero()) return true;  // the line lies inside the curve
  return unipoly_is_scaled_square(D).has_value();
}

UniPoly restrict_to_line(const MPoly& f, LineChart chart, const FiniteField::Ptr& F,
                         const FFElem& a, const FFElem& b) {
  check_sextic(f);
  Domain dF = Domain::GF(F);
  UniPoly D(dF);
  if (chart == LineChart::A) {
    // (1 : t : a + b*t)
    std::array<UniPoly, 7> lp = {UniPoly::one(dF), UniPoly(dF), UniPoly(dF), UniPoly(dF),
                                 UniPoly(dF),      UniPoly(dF), UniPoly(dF)};
    UniPoly lin(dF, {a, b});
    for (int i = 1; i <= 6; ++i)
      lp[static_cast<size_t>(i)] = lp[static_cast<size_t>(i - 1)] * lin;
    for (const Term& t : f.terms()) {
      FFElem cc = embed_coeff(F, f.dom(), t.c);
      D = D + (lp[t.m.e[2]] * UniPoly::monomial(dF, cc, t.m.e[1]));
    }
  } else if (chart == LineChart::B) {
    // (1 : a : t)
    for (const Term& t : f.terms()) {
      FFElem cc = F->mul(embed_coeff(F, f.dom(), t.c),
                         F->pow(a, Integer(static_cast<long>(t.m.e[1]))));
      D = D + UniPoly::monomial(dF, cc, t.m.e[2]);
    }
  } else {
    // (0 : 1 : t)
    for (const Term& t : f.terms()) {
      if (t.m.e[0] != 0) continue;
      D = D + UniPoly::monomial(dF, embed_coeff(F, f.dom(), t.c), t.m.e[2]);
    }
  }
  (void)b;
  return D;
}

std::optional<TritangentLine> materialize_line(const MPoly& f, LineChart chart,
                                               const FiniteField::Ptr& F,
                                               const FFElem& a, const FFElem& b,
                                               unsigned degree) {
  UniPoly D = restrict_to_line(f, chart, F, a, b);
  TritangentLine L;
  L.chart = chart;
  L.field = F;
  L.a = a;
  L.b = b;
  L.degree = degree;
  if (D.is_zero()) {
    // the line is a component of the curve: tangency everywhere, doubled
    // preimage
    L.c = F->zero();
    L.g = UniPoly::zero(Domain::GF(F));
    L.split = SplitType::Degenerate;
    return L;
  }
  auto sq = unipoly_is_scaled_square(D);
  if (!sq) return std::nullopt;
  L.c = std::get<FFElem>(sq->first);
  L.g = std::move(sq->second);
  if (Integer::cmp(F->p(), Integer(2)) == 0) {
    // char 2: w^2 = c g^2 is (w + sqrt(c) g)^2, a doubled component
    L.split = SplitType::Degenerate;
  } else if (F->quadratic_character(L.c) == 1) {
    L.g = L.g.scaled(Value(*F->sqrt(L.c)));
    L.c = F->one();
    L.split = SplitType::Split;
  } else {
    L.split = SplitType::Nonsplit;
  }
  return L;
}

SplitType split_type(const TritangentLine& L) {
  if (!L.field) throw std::invalid_argument("split_type: line has no field");
  if (Integer::cmp(L.field->p(), Integer(2)) == 0)
    throw std::invalid_argument("split_type: not defined in characteristic 2");
  if (L.field->is_zero(L.c) || L.g.is_zero()) return SplitType::Degenerate;
  return L.field->quadratic_character(L.c) == 1 ? SplitType::Split
                                                : SplitType::Nonsplit;
}

DetectResult detect_tritangent(const MPoly& f, const Integer& p, unsigned K,
                               const GbConfig& cfg) {
  check_sextic(f);
  if (!f.dom().is_Z())
    throw std::invalid_argument("detect_tritangent: polynomial must have integer coefficients");
  if (!is_prime(p)) throw std::invalid_argument("detect_tritangent: modulus must be prime");
  if (K < 1 || K > 6)
    throw std::invalid_argument("detect_tritangent: extension bound must be in 1..6");

  DetectResult res;
  FiniteField::Ptr Fp = FiniteField::make(p);
  Domain dp = Domain::GF(Fp);
  {
    auto rp = Ring::make(f.ring()->vars(), dp, f.ring()->order());
    if (f.coerced(rp).is_zero()) {
      res.degenerate = true;
      return res;
    }
  }

  std::map<unsigned, uint64_t> beyond;
  for (LineChart chart : {LineChart::A, LineChart::B}) {
    Ideal I = tritangent_ideal(f, chart, dp);
    SolveResult sol = solve_zero_dim(I, K, cfg);
    if (sol.kind == SolveResult::Kind::Inconclusive) {
      res.status = GbStatus::Budget;
      continue;
    }
    if (sol.kind == SolveResult::Kind::PositiveDim) {
      res.degenerate = true;
      continue;
    }
    merge_beyond(beyond, sol.beyond);
    for (const ZeroDimPoint& pt : sol.points) {
      FFElem a = pt.coords[0];
      FFElem b = chart == LineChart::A ? pt.coords[1] : pt.field->zero();
      auto L = materialize_line(f, chart, pt.field, a, b, pt.degree);
      if (!L)
        throw std::logic_error(
            "detect_tritangent: a chart-ideal solution does not restrict to a scaled square");
      res.lines.push_back(std::move(*L));
    }
  }
  if (auto L = materialize_line(f, LineChart::C, Fp, Fp->zero(), Fp->zero(), 1))
    res.lines.push_back(std::move(*L));

  for (const auto& [deg, count] : beyond) res.beyond.push_back({deg, count});
  if (res.degenerate) res.lines.clear();
  res.complete = !res.degenerate && res.status == GbStatus::Ok && res.beyond.empty();
  return res;
}

BruteForceResult brute_force_tritangent(const MPoly& f, const Integer& p, unsigned K) {
  check_sextic(f);
  if (!f.dom().is_Z())
    throw std::invalid_argument("brute_force_tritangent: polynomial must have integer coefficients");
  if (K < 1 || K > 6)
    throw std::invalid_argument("brute_force_tritangent: extension bound must be in 1..6");
  if (Integer::cmp(Integer::pow(p, 2 * K), Integer(10'000'000L)) > 0)
    throw std::invalid_argument(
        "brute_force_tritangent: p^(2K) exceeds the enumeration guard of 10^7");

  BruteForceResult res;
  uint64_t found_deg1 = 0;
  for (unsigned k = 1; k <= K; ++k) {
    FiniteField::Ptr F = FiniteField::make(p, k);
    std::vector<FFElem> elems = field_elements(F);
    std::vector<unsigned> edeg(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) edeg[i] = F->degree_over_prime(elems[i]);
    for (size_t ia = 0; ia < elems.size(); ++ia) {
      for (size_t ib = 0; ib < elems.size(); ++ib) {
        if (std::lcm(edeg[ia], edeg[ib]) != k) continue;
        if (auto L = materialize_line(f, LineChart::A, F, elems[ia], elems[ib], k)) {
          if (k == 1) ++found_deg1;
          res.lines.push_back(std::move(*L));
        }
      }
    }
    for (size_t ia = 0; ia < elems.size(); ++ia) {
      if (edeg[ia] != k) continue;
      if (auto L = materialize_line(f, LineChart::B, F, elems[ia], F->zero(), k)) {
        if (k == 1) ++found_deg1;
        res.lines.push_back(std::move(*L));
      }
    }
    if (k == 1) {
      if (auto L = materialize_line(f, LineChart::C, F, F->zero(), F->zero(), 1)) {
        ++found_deg1;
        res.lines.push_back(std::move(*L));
      }
      unsigned long pl = p.to_ulong();
      res.all_tritangent = found_deg1 == pl * pl + pl + 1;
    }
  }
  return res;
}

CandidatePrimes candidate_primes(const MPoly& f, const GbConfig& cfg) {
  check_sextic(f);
  if (!f.dom().is_Z())
    throw std::invalid_argument("candidate_primes: polynomial must have integer coefficients");
  if (line_x0_tritangent(f))
    throw std::invalid_argument(
        "candidate_primes: method inapplicable — the line x = 0 is tritangent over Q");

  Domain q = Domain::QQ();
  Ideal IA1 = chart_a_ideal(f, q, /*swap_vars=*/false);
  Ideal IA2 = chart_a_ideal(f, q, /*swap_vars=*/true);
  Ideal IB = tritangent_ideal(f, LineChart::B, q);

  GbConfig rec = cfg;
  rec.certify = false;
  rec.record_denominators = true;
  rec.strategy = PairStrategy::Normal;

  CandidatePrimes res;
  // Derives the unit ideal over Q from a prefix of the chart generators,
  // growing the prefix if it falls short of the full ideal, and appends every
  // integer the derivation divided by. A prime with a tritangent line in this
  // chart must divide one of them: otherwise the whole derivation would
  // replay verbatim mod p and certify the chart empty. Shrinking to a prefix
  // keeps the conclusion (the full variety only loses points) and tames the
  // fraction-free coefficient swell.
  auto run_chart = [&](const Ideal& I, std::vector<Integer>& log,
                       bool reverse_order) -> bool {
    PrefixPlan plan = plan_prefix(I, reverse_order);
    for (;;) {
      std::vector<MPoly> pre(plan.sorted.begin(),
                             plan.sorted.begin() + static_cast<long>(plan.k));
      GbResult g = buchberger(Ideal::of(I.ring, std::move(pre)), I.ring->order(), rec);
      if (g.status == GbStatus::Budget) {
        res.status = GbStatus::Budget;
        return false;
      }
      if (g.basis.size() == 1 && g.basis[0].is_constant()) {
        for (const Integer& v : g.denominators->values()) log.push_back(v);
        return true;
      }
      if (plan.k == plan.sorted.size())
        throw std::invalid_argument(
            "candidate_primes: method inapplicable — tritangent lines exist over the "
            "closure of Q");
      plan.k = std::min(plan.k * 2, plan.sorted.size());
    }
  };

  // The two runs differ everywhere: chart A by the swapped variable order
  // (a different grevlex entirely), chart B — one variable, nothing to swap —
  // by reversing the generator order. Incidental factors of one derivation
  // then rarely survive the pairwise gcd against the other.
  std::vector<Integer> log1, log2;
  if (!run_chart(IA1, log1, false) || !run_chart(IB, log1, false)) return res;
  if (!run_chart(IA2, log2, false) || !run_chart(IB, log2, true)) return res;

  // Candidates are the pairwise common factors across the two runs; a product
  // tree over one log lets values private to the other be skipped wholesale.
  std::set<Integer> cand;
  {
    std::vector<Integer> tree = log2;
    while (tree.size() > 1) {
      std::vector<Integer> up;
      up.reserve(tree.size() / 2 + 1);
      for (size_t i = 0; i + 1 < tree.size(); i += 2) up.push_back(tree[i] * tree[i + 1]);
      if (tree.size() % 2) up.push_back(tree.back());
      tree = std::move(up);
    }
    for (const Integer& u : log1) {
      if (tree.empty() || Integer::gcd(u, tree[0]).is_one()) continue;
      for (const Integer& v : log2) {
        Integer g = Integer::gcd(u, v);
        if (!g.is_one()) cand.insert(std::move(g));
      }
    }
  }

  // Chart C has no elimination step: any prime where f(0,1,t) degenerates to
  // a scaled square must divide every cone generator's value on its
  // coefficient vector.
  {
    std::vector<Value> dvec(7, Value(Integer(0)));
    for (const Term& t : f.terms())
      if (t.m.e[0] == 0)
        dvec[t.m.e[2]] = std::get<Integer>(dvec[t.m.e[2]]) + std::get<Integer>(t.c);
    Integer nc(0);
    for (const MPoly& g : square_cone_ideal().over_Z.gens)
      nc = Integer::gcd(nc, std::get<Integer>(g.eval(dvec)));
    nc = Integer::abs(nc);
    if (nc.is_zero())
      throw std::invalid_argument(
          "candidate_primes: method inapplicable — the line x = 0 is tritangent over Q");
    if (!nc.is_one()) cand.insert(nc);
  }

  Integer content = Integer::abs(std::get<Integer>(f.content()));
  if (!content.is_one()) cand.insert(content);

  // gcd-free refinement: split candidates against each other until pairwise
  // coprime. Two bad primes fused inside one gcd separate as soon as any
  // other pair of logged values isolates one of them.
  {
    std::vector<Integer> work(cand.begin(), cand.end());
    std::set<Integer> coprime;
    while (!work.empty()) {
      Integer n = std::move(work.back());
      work.pop_back();
      if (n.is_one()) continue;
      bool reduced = false;
      for (auto it = coprime.begin(); it != coprime.end(); ++it) {
        Integer g = Integer::gcd(n, *it);
        if (g.is_one()) continue;
        work.push_back(Integer::divexact(n, g));
        work.push_back(Integer::divexact(*it, g));
        work.push_back(std::move(g));
        coprime.erase(it);
        reduced = true;
        break;
      }
      if (!reduced) coprime.insert(std::move(n));
    }
    cand = std::move(coprime);
  }

  std::vector<uint32_t> sieve = primes_below(1'000'000);
  std::set<Integer> small, large, unresolved;
  for (const Integer& n : cand) {
    Integer m = n;
    for (uint32_t sp : sieve) {
      // once sp^2 > m the remaining cofactor is prime (or 1); the guard only
      // needs checking when m is word-sized
      if (m.fits_ulong()) {
        unsigned long mu = m.to_ulong();
        if (static_cast<unsigned long>(sp) > mu / sp) break;
      }
      Integer P(static_cast<long>(sp));
      while (m.divisible_by(P)) {
        small.insert(P);
        m = Integer::divexact(m, P);
      }
    }
    if (m.is_one()) continue;
    if (Integer::cmp(m, Integer(1'000'000L)) < 0) {
      small.insert(m);  // prime: survived every sieve prime up to its root
      continue;
    }
    // No factor below 10^6 remains; split the rest into (probable) primes —
    // rho for word-scale factors, ECM for ~20-25 digits — parking whatever
    // resists both in the unresolved bucket.
    std::vector<Integer> pending = {m};
    while (!pending.empty()) {
      Integer t = std::move(pending.back());
      pending.pop_back();
      if (is_prime(t)) {
        large.insert(std::move(t));
        continue;
      }
      auto d = pollard_rho(t, 2'000'000);
      if (!d) d = ecm_factor(t);
      if (d) {
        pending.push_back(Integer::divexact(t, *d));
        pending.push_back(std::move(*d));
      } else {
        unresolved.insert(std::move(t));
      }
    }
  }
  res.small_primes.assign(small.begin(), small.end());
  res.large_primes.assign(large.begin(), large.end());
  res.unresolved.assign(unresolved.begin(), unresolved.end());
  return res;
}

}  // namespace k3v
