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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "k3v/groebner.hpp"
#include "k3v/rng.hpp"
#include "k3v/strong_gb_z.hpp"

using namespace k3v;

namespace {

Ring::Ptr qring(std::vector<std::string> vars,
                MonomialOrder ord = MonomialOrder::grevlex()) {
  return Ring::make(std::move(vars), Domain::QQ(), ord);
}

Ring::Ptr fring(long p, std::vector<std::string> vars,
                MonomialOrder ord = MonomialOrder::grevlex(), unsigned k = 1) {
  return Ring::make(std::move(vars), Domain::GF(FiniteField::make(Integer(p), k)), ord);
}

Ring::Ptr zring(std::vector<std::string> vars,
                MonomialOrder ord = MonomialOrder::grevlex()) {
  return Ring::make(std::move(vars), Domain::ZZ(), ord);
}

Ideal ideal(const Ring::Ptr& r, const std::vector<std::string>& polys) {
  std::vector<MPoly> gens;
  gens.reserve(polys.size());
  for (const auto& s : polys) gens.push_back(parse_poly(s, r));
  return Ideal::of(r, std::move(gens));
}

std::vector<std::string> basis_strings(const std::vector<MPoly>& basis) {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.str());
  return out;
}

MPoly random_poly(const Ring::Ptr& r, Rng& rng, unsigned nterms, unsigned maxe = 2) {
  std::vector<Term> t;
  const Domain& d = r->dom();
  Integer p = d.is_Fq() ? d.field()->p() : Integer(101);
  for (unsigned i = 0; i < nterms; ++i) {
    Mono m;
    for (unsigned v = 0; v < r->nvars(); ++v) {
      m.e[v] = static_cast<uint16_t>(rng.below(maxe + 1));
      m.deg += m.e[v];
    }
    t.push_back({m, d.from_integer(rng.below(p))});
  }
  return MPoly(r, std::move(t));
}

/// Evaluation of a two-variable polynomial over a prime field at a point of
/// an extension, embedding the coefficients through their integer lifts.
FFElem eval_ext(const MPoly& f, const FiniteField::Ptr& F, const FFElem& a,
                const FFElem& b) {
  FFElem acc = F->zero();
  for (const Term& t : f.terms()) {
    FFElem v = F->from_integer(std::get<FFElem>(t.c).c[0]);
    if (t.m.e[0] != 0) v = F->mul(v, F->pow(a, Integer(static_cast<long>(t.m.e[0]))));
    if (t.m.e[1] != 0) v = F->mul(v, F->pow(b, Integer(static_cast<long>(t.m.e[1]))));
    acc = F->add(acc, v);
  }
  return acc;
}

std::vector<FFElem> all_elements(const FiniteField::Ptr& F) {
  std::vector<FFElem> out;
  unsigned long p = F->p().to_ulong();
  unsigned long q = F->q().to_ulong();
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

std::multiset<std::string> point_keys(const SolveResult& res) {
  std::multiset<std::string> keys;
  for (const auto& pt : res.points) {
    std::string k = std::to_string(pt.degree);
    for (const auto& c : pt.coords) k += "|" + pt.field->str(c);
    keys.insert(k);
  }
  return keys;
}

}  // namespace

TEST_CASE("normal form: divisor leading monomials absent from remainder") {
  auto r = qring({"x", "y"}, MonomialOrder::lex());
  CHECK(normal_form(parse_poly("x^2*y", r), {parse_poly("x", r)}).is_zero());
  CHECK(normal_form(parse_poly("x^2 + y^2", r), {parse_poly("x - y", r)}) ==
        parse_poly("2*y^2", r));

  auto ryx = qring({"y", "x"}, MonomialOrder::lex());
  CHECK(normal_form(parse_poly("y^4", ryx),
                    {parse_poly("y^2 - x", ryx), parse_poly("x^2 - 1", ryx)}) ==
        MPoly::one(ryx));

  auto rz = zring({"x", "y"});
  CHECK_THROWS_AS(normal_form(parse_poly("x", rz), {parse_poly("y", rz)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(normal_form(parse_poly("x", r), {MPoly::zero(r)}),
                  std::invalid_argument);
}

TEST_CASE("normal form: f minus remainder lies in the ideal") {
  auto r = fring(31, {"x", "y", "z"});
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MPoly> gens;
    for (int i = 0; i < 2; ++i) {
      MPoly g = random_poly(r, rng, 4);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    GbResult gb = buchberger(Ideal::of(r, gens), r->order());
    REQUIRE(gb.status == GbStatus::Ok);
    if (gb.basis.empty()) continue;
    auto out_ring = gb.basis[0].ring();
    MPoly f = random_poly(out_ring, rng, 5, 3);
    MPoly nf = normal_form(f, gb.basis);
    CHECK(normal_form(f - nf, gb.basis).is_zero());
  }
}

TEST_CASE("buchberger: pinned reduced bases") {
  auto r = qring({"x", "y"}, MonomialOrder::lex());

  GbResult unit = buchberger(ideal(r, {"x", "y", "x + 1"}), MonomialOrder::lex());
  REQUIRE(unit.basis.size() == 1);
  CHECK(unit.basis[0] == MPoly::one(unit.basis[0].ring()));

  GbResult axes = buchberger(ideal(r, {"x", "y"}), MonomialOrder::lex());
  CHECK(basis_strings(axes.basis) == std::vector<std::string>{"x", "y"});

  GbResult circ = buchberger(ideal(r, {"x^2 + y^2 - 1", "x*y - 1"}),
                             MonomialOrder::lex());
  CHECK(basis_strings(circ.basis) ==
        std::vector<std::string>{"x + y^3 - y", "y^4 - y^2 + 1"});
  CHECK(!circ.denominators.has_value());
}

TEST_CASE("buchberger: basis cuts out the same points as the generators") {
  // The two ideals must agree on every solution over the quadratic extension.
  const long p = 10007;
  auto rp = fring(p, {"x", "y"});
  Ideal gens = ideal(rp, {"x^2 + y^2 - 1", "x*y - 1"});
  Ideal claimed = ideal(rp, {"x + y^3 - y", "y^4 - y^2 + 1"});
  SolveResult a = solve_zero_dim(gens, 2);
  SolveResult b = solve_zero_dim(claimed, 2);
  REQUIRE(a.kind == SolveResult::Kind::Solved);
  REQUIRE(b.kind == SolveResult::Kind::Solved);
  CHECK(a.beyond.empty());
  CHECK(point_keys(a) == point_keys(b));
  CHECK(a.points.size() == 4);  // x determined by y; quartic splits over F_p^2
}

TEST_CASE("buchberger: non-prime coefficient fields") {
  auto r = fring(3, {"x", "y"}, MonomialOrder::lex(), 2);
  const auto& F = r->dom().field();
  MPoly u = MPoly::constant(r, F->gen());
  MPoly x = MPoly::variable(r, 0);
  MPoly y = MPoly::variable(r, 1);
  GbResult gb = buchberger(Ideal::of(r, {x + u, y - u, (x + u) * (y - u)}),
                           MonomialOrder::lex());
  REQUIRE(gb.status == GbStatus::Ok);
  REQUIRE(gb.basis.size() == 2);
  auto out = gb.basis[0].ring();
  CHECK(gb.basis[0] == MPoly::variable(out, 0) + MPoly::constant(out, F->gen()));
  CHECK(gb.basis[1] == MPoly::variable(out, 1) - MPoly::constant(out, F->gen()));
}

TEST_CASE("buchberger: canonical under generator permutation and strategy") {
  Rng rng(kDefaultSeed);
  auto r = fring(31, {"x", "y", "z"});
  int nontrivial = 0;
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<MPoly> gens;
    for (int i = 0; i < 3; ++i) {
      MPoly g = random_poly(r, rng, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.size() < 2) continue;
    GbResult base = buchberger(Ideal::of(r, gens), MonomialOrder::grevlex());
    if (base.basis.size() > 1) ++nontrivial;

    std::vector<MPoly> perm = gens;
    std::reverse(perm.begin(), perm.end());
    GbResult swapped = buchberger(Ideal::of(r, perm), MonomialOrder::grevlex());
    CHECK(basis_strings(base.basis) == basis_strings(swapped.basis));

    GbConfig sugar;
    sugar.strategy = PairStrategy::Sugar;
    GbResult sugared = buchberger(Ideal::of(r, gens), MonomialOrder::grevlex(), sugar);
    CHECK(basis_strings(base.basis) == basis_strings(sugared.basis));
  }
  CHECK(nontrivial > 0);  // the suite exercised real bases, not just units
}

TEST_CASE("elimination: forced relation and empty intersection") {
  auto r = qring({"x", "y", "z"});
  EliminationResult res = elimination_ideal(ideal(r, {"x - y^2", "x - z"}), 0b001);
  REQUIRE(res.gens.size() == 1);
  CHECK(res.gens[0] == parse_poly("y^2 - z", r));

  auto r2 = qring({"x", "y"});
  EliminationResult none = elimination_ideal(ideal(r2, {"x + y"}), 0b01);
  CHECK(none.gens.empty());

  CHECK_THROWS_AS(elimination_ideal(ideal(r2, {"x"}), 0b100), std::invalid_argument);
  CHECK_THROWS_AS(elimination_ideal(ideal(r2, {"x"}), 0), std::invalid_argument);
}

TEST_CASE("elimination: generators vanish on the original variety") {
  // Sample variety points of (a - h(b), u(b)) over F_31 through the solver,
  // then check every eliminated generator dies on them.
  Rng rng(kDefaultSeed);
  auto r = fring(31, {"a", "b"});
  const auto& F31 = r->dom().field();
  int points_checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    MPoly b = MPoly::variable(r, 1);
    MPoly h(r);
    for (int i = 0; i < 3; ++i)
      h = h + MPoly::monomial(r, Mono::var(1, static_cast<uint16_t>(rng.below(4))),
                              r->dom().from_integer(rng.below(Integer(31))));
    MPoly u = b.pow(3) +
              b.scaled(r->dom().from_integer(rng.below(Integer(31)))) +
              MPoly::constant(r, r->dom().from_integer(rng.below(Integer(31)) + Integer(1)));
    MPoly a = MPoly::variable(r, 0);
    Ideal I = Ideal::of(r, {a - h, u});

    EliminationResult elim = elimination_ideal(I, 0b01);  // drop a
    REQUIRE(elim.status == GbStatus::Ok);
    SolveResult sols = solve_zero_dim(I, 3);
    REQUIRE(sols.kind == SolveResult::Kind::Solved);
    CHECK(sols.beyond.empty());  // cubic eliminant, bound 3 covers everything
    for (const auto& pt : sols.points) {
      for (const MPoly& g : elim.gens) {
        CHECK(pt.field->is_zero(eval_ext(g, pt.field, pt.coords[0], pt.coords[1])));
        ++points_checked;
      }
    }
  }
  CHECK(points_checked >= 100);
  (void)F31;
}

TEST_CASE("triviality verdicts") {
  auto r = qring({"x"});
  CHECK(is_trivial(ideal(r, {"x", "x + 1"})) == Triviality::Trivial);
  CHECK(is_trivial(ideal(r, {"x^2"})) == Triviality::Proper);
  CHECK(is_trivial(Ideal::of(r, {})) == Triviality::Proper);
}

TEST_CASE("budget exhaustion is inconclusive, never a verdict") {
  auto r = fring(31, {"x", "y", "z"});
  Ideal I = ideal(r, {"x^2*y + z", "y^2*z + x", "z^2*x + y", "x + y + z"});
  GbConfig tight;
  tight.max_pairs = 1;
  GbResult gb = buchberger(I, MonomialOrder::grevlex(), tight);
  CHECK(gb.status == GbStatus::Budget);
  CHECK(is_trivial(I, tight) == Triviality::Inconclusive);

  auto r2 = fring(31, {"a", "b"});
  Ideal I2 = ideal(r2, {"a^2*b + b", "b^3 + a + 1", "a^3 + a*b + 1"});
  SolveResult sol = solve_zero_dim(I2, 2, tight);
  CHECK(sol.kind == SolveResult::Kind::Inconclusive);
}

TEST_CASE("solve_zero_dim: pinned examples") {
  auto r5 = fring(5, {"a", "b"}, MonomialOrder::lex());
  SolveResult one = solve_zero_dim(ideal(r5, {"a - 1", "b - 2"}), 1);
  REQUIRE(one.kind == SolveResult::Kind::Solved);
  REQUIRE(one.points.size() == 1);
  CHECK(one.points[0].degree == 1);
  CHECK(one.points[0].field->str(one.points[0].coords[0]) == "1");
  CHECK(one.points[0].field->str(one.points[0].coords[1]) == "2");
  CHECK(one.beyond.empty());
  CHECK(one.complete());

  SolveResult pair = solve_zero_dim(ideal(r5, {"a^2 - 2", "b"}), 2);
  REQUIRE(pair.kind == SolveResult::Kind::Solved);
  REQUIRE(pair.points.size() == 2);  // conjugate pair over F_25
  for (const auto& pt : pair.points) {
    CHECK(pt.degree == 2);
    CHECK(pt.field->q().to_ulong() == 25);
    CHECK(pt.field->is_zero(
        pt.field->sub(pt.field->mul(pt.coords[0], pt.coords[0]), pt.field->from_integer(Integer(2)))));
    CHECK(pt.field->is_zero(pt.coords[1]));
  }
  CHECK(pair.beyond.empty());
}

TEST_CASE("solve_zero_dim: positive-dimensional input is reported, not solved") {
  auto r = fring(5, {"a", "b"});
  CHECK(solve_zero_dim(ideal(r, {"a - b"}), 2).kind == SolveResult::Kind::PositiveDim);
  CHECK(solve_zero_dim(Ideal::of(r, {}), 2).kind == SolveResult::Kind::PositiveDim);
  SolveResult unit = solve_zero_dim(ideal(r, {"a", "a + 1"}), 2);
  CHECK(unit.kind == SolveResult::Kind::Solved);
  CHECK(unit.points.empty());
  CHECK(unit.complete());
}

TEST_CASE("solve_zero_dim: honest accounting beyond the extension bound") {
  auto r = fring(5, {"a", "b"}, MonomialOrder::lex());

  // all solutions sit above an irreducible cubic eliminant
  SolveResult ecase = solve_zero_dim(ideal(r, {"a - 1", "b^3 + b + 1"}), 2);
  REQUIRE(ecase.kind == SolveResult::Kind::Solved);
  CHECK(ecase.points.empty());
  REQUIRE(ecase.beyond.size() == 1);
  CHECK(ecase.beyond[0].min_degree == 3);
  CHECK(ecase.beyond[0].count == 3);
  CHECK(!ecase.complete());

  // the fiber direction carries the deep solutions instead
  SolveResult acase = solve_zero_dim(ideal(r, {"a^3 + a + 1", "b"}), 2);
  REQUIRE(acase.kind == SolveResult::Kind::Solved);
  CHECK(acase.points.empty());
  REQUIRE(acase.beyond.size() == 1);
  CHECK(acase.beyond[0].min_degree == 3);
  CHECK(acase.beyond[0].count == 3);

  // mixed: one rational point, a conjugate pair past the bound
  SolveResult mixed = solve_zero_dim(ideal(r, {"a^3 - a^2 - 2*a + 2", "b"}), 1);
  REQUIRE(mixed.kind == SolveResult::Kind::Solved);
  REQUIRE(mixed.points.size() == 1);
  CHECK(mixed.points[0].degree == 1);
  REQUIRE(mixed.beyond.size() == 1);
  CHECK(mixed.beyond[0].min_degree == 2);
  CHECK(mixed.beyond[0].count == 2);

  // raising the bound turns the same accounting into concrete points
  SolveResult all3 = solve_zero_dim(ideal(r, {"a - 1", "b^3 + b + 1"}), 3);
  REQUIRE(all3.kind == SolveResult::Kind::Solved);
  CHECK(all3.points.size() == 3);
  CHECK(all3.beyond.empty());
  for (const auto& pt : all3.points) CHECK(pt.degree == 3);
}

TEST_CASE("solve_zero_dim: agrees with exhaustive search over small fields") {
  Rng rng(kDefaultSeed);
  const long p = 5;
  auto r = fring(p, {"a", "b"});
  int solved = 0;
  for (int trial = 0; trial < 15; ++trial) {
    MPoly f = random_poly(r, rng, 4);
    MPoly b = MPoly::variable(r, 1);
    MPoly u = b.pow(2) + b.scaled(r->dom().from_integer(rng.below(Integer(p)))) +
              MPoly::constant(r, r->dom().from_integer(rng.below(Integer(p))));
    MPoly a = MPoly::variable(r, 0);
    MPoly g = a.pow(2) - f;  // bounded in a as well unless degenerate
    std::vector<MPoly> gens;
    if (!g.is_zero()) gens.push_back(g);
    gens.push_back(u);
    SolveResult res = solve_zero_dim(Ideal::of(r, gens), 2);
    if (res.kind != SolveResult::Kind::Solved) continue;
    ++solved;

    std::multiset<std::string> expect;
    for (unsigned m = 1; m <= 2; ++m) {
      FiniteField::Ptr Fm =
          m == 1 ? r->dom().field() : FiniteField::make(Integer(p), m);
      for (const FFElem& alpha : all_elements(Fm)) {
        for (const FFElem& beta : all_elements(Fm)) {
          bool on_variety = true;
          for (const MPoly& gen : gens)
            if (!Fm->is_zero(eval_ext(gen, Fm, alpha, beta))) {
              on_variety = false;
              break;
            }
          if (!on_variety) continue;
          unsigned deg = std::lcm(Fm->degree_over_prime(alpha),
                                  Fm->degree_over_prime(beta));
          if (deg == m) {
            std::string key = std::to_string(deg);
            key += "|" + Fm->str(alpha) + "|" + Fm->str(beta);
            expect.insert(key);
          }
        }
      }
    }
    CHECK(point_keys(res) == expect);
  }
  CHECK(solved >= 8);
}

TEST_CASE("denominator log: primes outside the log replay cleanly") {
  Rng rng(kDefaultSeed);
  auto rq = qring({"x", "y"});
  GbConfig cfg;
  cfg.record_denominators = true;
  int replayed = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<MPoly> gens;
    for (int i = 0; i < 2; ++i) {
      MPoly g = random_poly(rq, rng, 4);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    GbResult gq = buchberger(Ideal::of(rq, gens), MonomialOrder::grevlex(), cfg);
    REQUIRE(gq.status == GbStatus::Ok);
    REQUIRE(gq.denominators.has_value());

    for (long q : {10007L, 10009L, 10037L}) {
      Integer qi(q);
      bool touched = gq.denominators->counts.end() !=
                     std::find_if(gq.denominators->counts.begin(),
                                  gq.denominators->counts.end(),
                                  [&](const auto& kv) { return kv.first.divisible_by(qi); });
      if (touched) continue;
      auto rfq = fring(q, {"x", "y"});
      std::vector<MPoly> gens_q;
      for (const MPoly& g : gens) {
        MPoly gq_poly = g.coerced(rfq);
        if (!gq_poly.is_zero()) gens_q.push_back(gq_poly);
      }
      GbResult gfq = buchberger(Ideal::of(rfq, gens_q), MonomialOrder::grevlex());
      REQUIRE(gfq.status == GbStatus::Ok);
      std::vector<std::string> reduced;
      auto out_ring = gfq.basis.empty()
                          ? Ring::make(rfq->vars(), rfq->dom(), MonomialOrder::grevlex())
                          : gfq.basis[0].ring();
      for (const MPoly& g : gq.basis) reduced.push_back(g.coerced(out_ring).str());
      CHECK(basis_strings(gfq.basis) == reduced);
      ++replayed;
    }
  }
  CHECK(replayed >= 10);
}

TEST_CASE("strong basis over Z: pinned examples") {
  auto r = zring({"x"}, MonomialOrder::lex());

  StrongGbResult g1 = strong_gb_Z(ideal(r, {"2*x", "3*x"}), MonomialOrder::lex());
  REQUIRE(g1.status == GbStatus::Ok);
  CHECK(basis_strings(g1.basis) == std::vector<std::string>{"x"});

  StrongGbResult g2 = strong_gb_Z(ideal(r, {"2*x", "x^2"}), MonomialOrder::lex());
  CHECK(basis_strings(g2.basis) == std::vector<std::string>{"x^2", "2*x"});

  StrongGbResult g3 = strong_gb_Z(ideal(r, {"x - 1", "x - 4"}), MonomialOrder::lex());
  CHECK(basis_strings(g3.basis) == std::vector<std::string>{"x - 1", "3"});
}

TEST_CASE("strong basis over Z: reductions mod p match for every small p") {
  auto r = zring({"x"}, MonomialOrder::lex());
  std::vector<std::vector<std::string>> systems = {
      {"2*x", "3*x"}, {"2*x", "x^2"}, {"x - 1", "x - 4"}};
  std::vector<long> primes;
  for (long p = 2; p < 100; ++p) {
    bool prime = p >= 2;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) primes.push_back(p);
  }
  for (const auto& sys : systems) {
    Ideal I = ideal(r, sys);
    StrongGbResult sgb = strong_gb_Z(I, MonomialOrder::lex());
    REQUIRE(sgb.status == GbStatus::Ok);
    for (long p : primes) {
      auto rp = fring(p, {"x"}, MonomialOrder::lex());
      auto reduce_all = [&](const std::vector<MPoly>& polys) {
        std::vector<MPoly> out;
        for (const MPoly& g : polys) {
          MPoly gp = g.coerced(rp);
          if (!gp.is_zero()) out.push_back(gp);
        }
        return out;
      };
      std::vector<MPoly> direct = reduce_all(I.gens);
      std::vector<MPoly> from_strong = reduce_all(sgb.basis);
      GbResult a = direct.empty() ? GbResult{}
                                  : buchberger(Ideal::of(rp, direct), MonomialOrder::lex());
      GbResult b = from_strong.empty()
                       ? GbResult{}
                       : buchberger(Ideal::of(rp, from_strong), MonomialOrder::lex());
      CHECK(basis_strings(a.basis) == basis_strings(b.basis));
    }
  }
}

TEST_CASE("strong basis over Z: membership through symmetric normal forms") {
  auto r = zring({"x"}, MonomialOrder::lex());
  StrongGbResult g = strong_gb_Z(ideal(r, {"2*x", "x^2"}), MonomialOrder::lex());
  REQUIRE(g.status == GbStatus::Ok);
  CHECK(normal_form_Z(parse_poly("6*x^2 + 4*x", r), g.basis).is_zero());
  CHECK(normal_form_Z(parse_poly("x", r), g.basis) == parse_poly("x", r));
  CHECK(normal_form_Z(parse_poly("5*x", r), g.basis) == parse_poly("x", r));

  auto r2 = zring({"x", "y"});
  StrongGbResult mix = strong_gb_Z(ideal(r2, {"2*x - 2*y", "3*x + 3*y"}),
                                   MonomialOrder::grevlex());
  REQUIRE(mix.status == GbStatus::Ok);
  // (2x-2y, 3x+3y) = (x+5y, 12y): the difference of the generators is x+5y,
  // and 3(2x-2y) - 2(3x+3y) = -12y; both generators recombine from those two.
  CHECK(basis_strings(mix.basis) == std::vector<std::string>{"x + 5*y", "12*y"});
  CHECK(normal_form_Z(parse_poly("2*x - 2*y", r2), mix.basis).is_zero());
  CHECK(normal_form_Z(parse_poly("3*x + 3*y", r2), mix.basis).is_zero());
  CHECK(normal_form_Z(parse_poly("x + 5*y", r2), mix.basis).is_zero());
  CHECK(normal_form_Z(parse_poly("6*x", r2), mix.basis) ==
        parse_poly("6*y", r2));

  GbConfig tight;
  tight.max_pairs = 0;
  StrongGbResult capped = strong_gb_Z(ideal(r2, {"2*x - 2*y", "3*x + 3*y"}),
                                      MonomialOrder::grevlex(), tight);
  CHECK(capped.status == GbStatus::Budget);

  CHECK_THROWS_AS(strong_gb_Z(ideal(qring({"x"}), {"x"}), MonomialOrder::lex()),
                  std::invalid_argument);
}

TEST_CASE("strong basis over Z: random systems stay consistent mod p") {
  Rng rng(kDefaultSeed);
  auto r = zring({"x", "y"});
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<MPoly> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<Term> t;
      for (int j = 0; j < 3; ++j) {
        Mono m;
        for (unsigned v = 0; v < 2; ++v) {
          m.e[v] = static_cast<uint16_t>(rng.below(3));
          m.deg += m.e[v];
        }
        long c = static_cast<long>(rng.below(13)) - 6;
        t.push_back({m, Integer(c)});
      }
      MPoly g(r, std::move(t));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Ideal I = Ideal::of(r, gens);
    StrongGbResult sgb = strong_gb_Z(I, MonomialOrder::grevlex());
    if (sgb.status != GbStatus::Ok) continue;
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
      auto rp = fring(p, {"x", "y"});
      std::vector<MPoly> direct, from_strong;
      for (const MPoly& g : I.gens) {
        MPoly gp = g.coerced(rp);
        if (!gp.is_zero()) direct.push_back(gp);
      }
      for (const MPoly& g : sgb.basis) {
        MPoly gp = g.coerced(rp);
        if (!gp.is_zero()) from_strong.push_back(gp);
      }
      GbResult a = direct.empty() ? GbResult{}
                                  : buchberger(Ideal::of(rp, direct), MonomialOrder::grevlex());
      GbResult b = from_strong.empty()
                       ? GbResult{}
                       : buchberger(Ideal::of(rp, from_strong), MonomialOrder::grevlex());
      CHECK(basis_strings(a.basis) == basis_strings(b.basis));
    }
  }
}
