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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "k3v/prime.hpp"
#include "k3v/rng.hpp"
#include "k3v/tritangent.hpp"
#include "k3v/unipoly.hpp"

using namespace k3v;

namespace {

Ring::Ptr zxyz() {
  return Ring::make({"x", "y", "z"}, Domain::ZZ(), MonomialOrder::grevlex());
}

FiniteField::Ptr field(long p, unsigned k = 1) {
  return FiniteField::make(Integer(p), k);
}

FFElem fe(const FiniteField::Ptr& F, long v) { return F->from_integer(Integer(v)); }

FFElem fe2(const FiniteField::Ptr& F, long c0, long c1) {
  return F->from_coeffs({Integer(c0), Integer(c1)});
}

/// A sextic whose tritangent lines over several small prime fields are known
/// exactly; reused as a cross-check target throughout.
const char* kCurve =
    "-x^6 - x^5*z - x^4*y^2 - x^4*z^2 - x^3*y*z^2 - x^2*y^2*z^2 - x*y^5 "
    "- x*y^4*z - x*z^5 - y^6 - y^3*z^3 - y^2*z^4 - y*z^5 - z^6";

/// Random degree-6 form: nterms draws from the 28 sextic monomials with
/// coefficients in [-M, M] \ {0} (collisions merge, so fewer terms may
/// survive).
MPoly random_sextic(const Ring::Ptr& r, Rng& rng, unsigned nterms, long M) {
  std::vector<Mono> all;
  for (unsigned i = 0; i <= 6; ++i)
    for (unsigned j = 0; i + j <= 6; ++j) {
      Mono m;
      m.e[0] = static_cast<uint16_t>(i);
      m.e[1] = static_cast<uint16_t>(j);
      m.e[2] = static_cast<uint16_t>(6 - i - j);
      m.deg = 6;
      all.push_back(m);
    }
  MPoly f(r);
  for (unsigned t = 0; t < nterms; ++t) {
    Mono m = all[rng.below(all.size())];
    long c = static_cast<long>(rng.below(static_cast<uint64_t>(2 * M + 1))) - M;
    if (c == 0) c = 1;
    f = f + MPoly::monomial(r, m, Integer(c));
  }
  return f;
}

bool all_gens_vanish(const Ideal& I, const std::vector<Value>& point) {
  const Domain& d = I.ring->dom();
  for (const MPoly& g : I.gens)
    if (!d.is_zero(g.eval(point))) return false;
  return true;
}

std::vector<Value> ff_values(const FiniteField::Ptr& F, const std::vector<long>& cs) {
  std::vector<Value> out;
  out.reserve(cs.size());
  for (long c : cs) out.emplace_back(fe(F, c));
  return out;
}

/// Identity of a line: chart plus parameters (with the field degree, so
/// conjugates stay distinct keys). `full` folds in the cover data too.
std::string line_key(const TritangentLine& L, bool full) {
  std::string k = std::to_string(static_cast<int>(L.chart)) + "|" +
                  std::to_string(L.degree) + "|" + L.field->str(L.a) + "|" +
                  L.field->str(L.b);
  if (full)
    k += "|" + L.field->str(L.c) + "|" + L.g.str() + "|" +
         std::to_string(static_cast<int>(L.split));
  return k;
}

std::set<std::string> line_keys(const std::vector<TritangentLine>& ls, bool full) {
  std::set<std::string> out;
  for (const auto& L : ls) out.insert(line_key(L, full));
  return out;
}

const TritangentLine* find_line(const std::vector<TritangentLine>& ls,
                                LineChart chart, const FFElem& a, const FFElem& b) {
  for (const auto& L : ls)
    if (L.chart == chart && L.a == a && L.b == b) return &L;
  return nullptr;
}

/// Every degree-2 line must appear together with its Frobenius conjugate.
void check_frobenius_closed(const std::vector<TritangentLine>& ls) {
  for (const auto& L : ls) {
    if (L.degree != 2) continue;
    FFElem fa = L.field->frobenius(L.a);
    FFElem fb = L.field->frobenius(L.b);
    const TritangentLine* mate = find_line(ls, L.chart, fa, fb);
    CAPTURE(L.field->str(L.a));
    CHECK(mate != nullptr);
  }
}

}  // namespace

TEST_CASE("square cone generators are integral, primitive, and vanish exactly on scaled squares") {
  const SquareConeIdeal& cone = square_cone_ideal();
  REQUIRE_FALSE(cone.over_Z.gens.empty());
  CHECK(cone.over_Z.ring->nvars() == 7);
  CHECK(cone.over_Z.ring->dom().is_Z());
  for (const MPoly& g : cone.over_Z.gens) {
    CHECK(g.dom().is_one(g.content()));
    CHECK(std::get<Integer>(g.lc()).sign() == 1);
  }

  // (1 + t^3)^2 has coefficient vector (1,0,0,2,0,0,1)
  std::vector<Value> sq{Integer(1), Integer(0), Integer(0), Integer(2),
                        Integer(0), Integer(0), Integer(1)};
  CHECK(all_gens_vanish(cone.over_Z, sq));

  // 1 + t^6 is squarefree, hence no scaled square
  std::vector<Value> nsq{Integer(1), Integer(0), Integer(0), Integer(0),
                         Integer(0), Integer(0), Integer(1)};
  CHECK_FALSE(all_gens_vanish(cone.over_Z, nsq));

  Ideal coneQ = cone.over(Domain::QQ());
  CHECK(coneQ.ring->dom().is_Q());
  CHECK(coneQ.gens.size() == cone.over_Z.gens.size());
  // (1/2 + t^3)^2 = 1/4 + t^3 + t^6
  std::vector<Value> sqq{Rational(Integer(1), Integer(4)), Rational(0), Rational(0),
                         Rational(1), Rational(0), Rational(0), Rational(1)};
  CHECK(all_gens_vanish(coneQ, sqq));
  // 2/3 * (t^3 - t)^2
  std::vector<Value> sqs{Rational(0), Rational(0), Rational(Integer(2), Integer(3)),
                         Rational(0), Rational(Integer(-4), Integer(3)), Rational(0),
                         Rational(Integer(2), Integer(3))};
  CHECK(all_gens_vanish(coneQ, sqs));
  // same up to the leading coefficient: t^2 * (t^4 - 4/3 t^2 + 2/3), not a square
  std::vector<Value> nsqq{Rational(0), Rational(0), Rational(Integer(2), Integer(3)),
                          Rational(0), Rational(Integer(-4), Integer(3)), Rational(0),
                          Rational(1)};
  CHECK_FALSE(all_gens_vanish(coneQ, nsqq));

  CHECK(cone.over(Domain::ZZ()).gens.size() == cone.over_Z.gens.size());
}

TEST_CASE("square cone vanishes on the squaring map over a large prime field") {
  FiniteField::Ptr F = field(1009);
  Domain dF = Domain::GF(F);
  Ideal cone = square_cone_ideal().over(dF);
  REQUIRE_FALSE(cone.gens.empty());

  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Value> gc;
    for (int i = 0; i < 4; ++i)
      gc.emplace_back(fe(F, static_cast<long>(rng.below(1009))));
    UniPoly g(dF, gc);
    if (g.is_zero()) g = UniPoly::one(dF);
    Value c = fe(F, 1 + static_cast<long>(rng.below(1008)));
    UniPoly D = (g * g).scaled(c);
    std::vector<Value> d;
    for (size_t i = 0; i < 7; ++i) d.push_back(D.coeff(i));
    CHECK(all_gens_vanish(cone, d));
  }
}

TEST_CASE("square cone membership agrees with univariate factorization") {
  Rng rng(kDefaultSeed);
  for (long p : {3L, 5L, 31L, 1009L}) {
    FiniteField::Ptr F = field(p);
    Domain dF = Domain::GF(F);
    Ideal cone = square_cone_ideal().over(dF);
    int squares_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<Value> d;
      if (trial % 8 == 0) {
        // inject genuine scaled squares so both sides of the iff get exercised
        std::vector<Value> gc;
        for (int i = 0; i < 4; ++i)
          gc.emplace_back(fe(F, static_cast<long>(rng.below(static_cast<uint64_t>(p)))));
        UniPoly g(dF, gc);
        if (g.is_zero()) g = UniPoly::one(dF);
        Value c = fe(F, 1 + static_cast<long>(rng.below(static_cast<uint64_t>(p - 1))));
        UniPoly D = (g * g).scaled(c);
        for (size_t i = 0; i < 7; ++i) d.push_back(D.coeff(i));
      } else {
        for (int i = 0; i < 7; ++i)
          d.emplace_back(fe(F, static_cast<long>(rng.below(static_cast<uint64_t>(p)))));
      }
      UniPoly D(dF, d);
      if (D.is_zero()) continue;
      bool is_square = unipoly_is_scaled_square(D).has_value();
      squares_seen += is_square ? 1 : 0;
      CAPTURE(p);
      CAPTURE(D.str());
      CHECK(all_gens_vanish(cone, d) == is_square);
    }
    CHECK(squares_seen >= 50);
  }

  // A point satisfying every reduction mod 5 of the integral model while the
  // restriction t^6 + 2t^5 + 4t + 3 is not a scaled square: the integral
  // generators only certify one direction, the per-characteristic basis must
  // reject it.
  FiniteField::Ptr F5 = field(5);
  std::vector<Value> phantom_Z{Integer(3), Integer(4), Integer(0), Integer(0),
                               Integer(0), Integer(2), Integer(1)};
  for (const MPoly& g : square_cone_ideal().over_Z.gens) {
    Integer v = std::get<Integer>(g.eval(phantom_Z));
    CHECK(v.divisible_by(Integer(5)));
  }
  std::vector<Value> phantom = ff_values(F5, {3, 4, 0, 0, 0, 2, 1});
  CHECK_FALSE(all_gens_vanish(square_cone_ideal().over(Domain::GF(F5)), phantom));
  CHECK_FALSE(unipoly_is_scaled_square(UniPoly(Domain::GF(F5), phantom)).has_value());
}

TEST_CASE("chart ideals cut out tritangent parameters") {
  auto r = zxyz();
  MPoly f = parse_poly(kCurve, r);
  MPoly fermat = parse_poly("x^6 + y^6 + z^6", r);

  CHECK_FALSE(line_x0_tritangent(fermat));

  FiniteField::Ptr F5 = field(5);
  Ideal IA = tritangent_ideal(f, LineChart::A, Domain::GF(F5));
  REQUIRE(IA.ring->nvars() == 2);
  // z = 4x + y is tritangent mod 5, z = 0 is not
  CHECK(all_gens_vanish(IA, ff_values(F5, {4, 1})));
  CHECK_FALSE(all_gens_vanish(IA, ff_values(F5, {0, 0})));

  Ideal IB = tritangent_ideal(f, LineChart::B, Domain::GF(F5));
  CHECK(IB.ring->nvars() == 1);

  // A perfect-square form is tangent along every line: the chart ideal
  // vanishes identically and detection reports the degeneracy instead of a
  // list.
  MPoly cub = parse_poly("x^3 + y^3 + z^3", r);
  MPoly sq = cub * cub;
  CHECK(is_trivial(tritangent_ideal(sq, LineChart::A, Domain::QQ())) == Triviality::Proper);
  DetectResult d = detect_tritangent(sq, Integer(7), 1);
  CHECK(d.degenerate);
  CHECK_FALSE(d.complete);
  CHECK(d.lines.empty());
}

TEST_CASE("restrict_to_line agrees with direct evaluation") {
  auto r = zxyz();
  Rng rng(kDefaultSeed);

  for (long p : {7L}) {
    for (unsigned k : {1u, 2u}) {
      FiniteField::Ptr F = field(p, k);
      Domain dF = Domain::GF(F);
      auto rF = Ring::make({"x", "y", "z"}, dF, MonomialOrder::grevlex());
      unsigned long q = F->q().to_ulong();

      // all q field elements, coefficient vectors in base p
      std::vector<FFElem> elems;
      for (unsigned long n = 0; n < q; ++n) {
        std::vector<Integer> cs;
        unsigned long m = n;
        for (unsigned i = 0; i < k; ++i) {
          cs.emplace_back(static_cast<long>(m % p));
          m /= p;
        }
        elems.push_back(F->from_coeffs(std::move(cs)));
      }

      for (int trial = 0; trial < 4; ++trial) {
        MPoly f = random_sextic(r, rng, 10, 8);
        MPoly fF = f.coerced(rF);
        FFElem a = elems[rng.below(q)];
        FFElem b = elems[rng.below(q)];

        UniPoly ra = restrict_to_line(f, LineChart::A, F, a, b);
        UniPoly rb = restrict_to_line(f, LineChart::B, F, a, b);
        UniPoly rc = restrict_to_line(f, LineChart::C, F, a, b);
        CHECK(ra.deg() <= 6);

        for (const FFElem& t : elems) {
          // chart A: (1 : t : a + b t), chart B: (1 : a : t), chart C: (0 : 1 : t)
          Value va = fF.eval({F->one(), t, F->add(a, F->mul(b, t))});
          Value vb = fF.eval({F->one(), a, t});
          Value vc = fF.eval({F->zero(), F->one(), t});
          CHECK(dF.eq(va, ra.eval(t)));
          CHECK(dF.eq(vb, rb.eval(t)));
          CHECK(dF.eq(vc, rc.eval(t)));
        }
      }
    }
  }
}

TEST_CASE("materialize_line normalizes scaled squares and classifies the cover") {
  auto r = zxyz();
  MPoly cub = parse_poly("x^3 + y^3", r);
  MPoly tail = parse_poly("z", r) * parse_poly("z^5 + x^4*y", r);
  FiniteField::Ptr F5 = field(5);
  Domain d5 = Domain::GF(F5);

  // 4 (x^3+y^3)^2 + z(...) restricts to 4 (1+t^3)^2 on z = 0; the square
  // scalar is absorbed via the smaller root sqrt(4) = 2
  MPoly f4 = (cub * cub).scaled(Integer(4)) + tail;
  auto L4 = materialize_line(f4, LineChart::A, F5, F5->zero(), F5->zero(), 1);
  REQUIRE(L4.has_value());
  CHECK(L4->chart == LineChart::A);
  CHECK(L4->degree == 1);
  CHECK(F5->is_one(L4->c));
  CHECK(L4->g == UniPoly::from_integers(d5, {2, 0, 0, 2}));
  CHECK(L4->split == SplitType::Split);
  CHECK(split_type(*L4) == SplitType::Split);

  // scalar 2 is a nonsquare mod 5: monic g, nonsplit cover
  MPoly f2 = (cub * cub).scaled(Integer(2)) + tail;
  auto L2 = materialize_line(f2, LineChart::A, F5, F5->zero(), F5->zero(), 1);
  REQUIRE(L2.has_value());
  CHECK(L2->c == fe(F5, 2));
  CHECK(L2->g == UniPoly::from_integers(d5, {1, 0, 0, 1}));
  CHECK(L2->split == SplitType::Nonsplit);
  CHECK(split_type(*L2) == SplitType::Nonsplit);

  // the line lies inside the curve: restriction vanishes identically
  MPoly fz = parse_poly("z", r) * parse_poly("x^5 + z^5", r);
  auto Lz = materialize_line(fz, LineChart::A, F5, F5->zero(), F5->zero(), 1);
  REQUIRE(Lz.has_value());
  CHECK(F5->is_zero(Lz->c));
  CHECK(Lz->g.is_zero());
  CHECK(Lz->split == SplitType::Degenerate);
  CHECK(split_type(*Lz) == SplitType::Degenerate);

  // squarefree restriction: not tritangent at all
  MPoly fermat = parse_poly("x^6 + y^6 + z^6", r);
  CHECK_FALSE(materialize_line(fermat, LineChart::A, F5, fe(F5, 1), F5->zero(), 1).has_value());

  // characteristic 2: w^2 = c g^2 always has a doubled preimage, and the
  // split/nonsplit question is rejected outright
  FiniteField::Ptr F2 = field(2);
  MPoly f1 = cub * cub + tail;
  auto Lc2 = materialize_line(f1, LineChart::A, F2, F2->zero(), F2->zero(), 1);
  REQUIRE(Lc2.has_value());
  CHECK(F2->is_one(Lc2->c));
  CHECK(Lc2->g == UniPoly::from_integers(Domain::GF(F2), {1, 0, 0, 1}));
  CHECK(Lc2->split == SplitType::Degenerate);
  CHECK_THROWS_AS(split_type(*Lc2), std::invalid_argument);

  TritangentLine unset;
  CHECK_THROWS_AS(split_type(unset), std::invalid_argument);
}

TEST_CASE("detect_tritangent pins down the known lines of the reference sextic") {
  auto r = zxyz();
  MPoly f = parse_poly(kCurve, r);

  SUBCASE("mod 5: the single line z = 4x + y, split") {
    DetectResult d = detect_tritangent(f, Integer(5), 3);
    CHECK(d.status == GbStatus::Ok);
    CHECK(d.complete);
    CHECK_FALSE(d.degenerate);
    CHECK(d.beyond.empty());
    REQUIRE(d.lines.size() == 1);
    const TritangentLine& L = d.lines[0];
    FiniteField::Ptr F5 = L.field;
    CHECK(L.chart == LineChart::A);
    CHECK(L.degree == 1);
    CHECK(L.a == fe(F5, 4));
    CHECK(L.b == fe(F5, 1));
    CHECK(F5->is_one(L.c));
    CHECK(L.g == UniPoly::from_integers(Domain::GF(F5), {2, 3, 1}));
    CHECK(L.split == SplitType::Split);
  }

  SUBCASE("mod 31: the single line z = 24x + 23y, split") {
    DetectResult d = detect_tritangent(f, Integer(31), 3);
    CHECK(d.complete);
    REQUIRE(d.lines.size() == 1);
    const TritangentLine& L = d.lines[0];
    FiniteField::Ptr F31 = L.field;
    CHECK(L.chart == LineChart::A);
    CHECK(L.degree == 1);
    CHECK(L.a == fe(F31, 24));
    CHECK(L.b == fe(F31, 23));
    CHECK(F31->is_one(L.c));
    CHECK(L.g == UniPoly::from_integers(Domain::GF(F31), {12, 2, 18, 2}));
    CHECK(L.split == SplitType::Split);
    // cross-check against plain enumeration
    BruteForceResult bf = brute_force_tritangent(f, Integer(31), 1);
    CHECK(line_keys(bf.lines, true) == line_keys(d.lines, true));
  }

  SUBCASE("primes with no tritangent line come back empty and complete") {
    for (long p : {2L, 3L, 7L, 11L, 13L}) {
      CAPTURE(p);
      DetectResult d = detect_tritangent(f, Integer(p), 1);
      CHECK(d.lines.empty());
      CHECK(d.complete);
      CHECK_FALSE(d.degenerate);
      CHECK(d.beyond.empty());
    }
  }
}

TEST_CASE("a sum of sixth powers degenerates mod 3 into a conic pencil") {
  auto r = zxyz();
  MPoly fermat = parse_poly("x^6 + y^6 + z^6", r);

  // mod 3 the form is (x^2+y^2+z^2)^3, so tangent lines of the conic are
  // tritangent: a positive-dimensional family over the closure
  DetectResult d = detect_tritangent(fermat, Integer(3), 1);
  CHECK(d.degenerate);
  CHECK_FALSE(d.complete);
  CHECK(d.lines.empty());

  // over F_3 itself the dual conic a^2 + b^2 + 1 = 0 has exactly four points
  BruteForceResult bf = brute_force_tritangent(fermat, Integer(3), 1);
  CHECK_FALSE(bf.all_tritangent);
  REQUIRE(bf.lines.size() == 4);
  FiniteField::Ptr F3 = bf.lines[0].field;
  Domain d3 = Domain::GF(F3);
  struct Expect {
    long a, b, g0;
  };
  // restriction is 2 (t^3 + s)^2 with s determined by the tangency point
  for (const Expect& e : {Expect{1, 1, 2}, Expect{1, 2, 1}, Expect{2, 1, 1}, Expect{2, 2, 2}}) {
    const TritangentLine* L = find_line(bf.lines, LineChart::A, fe(F3, e.a), fe(F3, e.b));
    CAPTURE(e.a);
    CAPTURE(e.b);
    REQUIRE(L != nullptr);
    CHECK(L->degree == 1);
    CHECK(L->c == fe(F3, 2));
    CHECK(L->split == SplitType::Nonsplit);
    CHECK(L->g == UniPoly::from_integers(d3, {e.g0, 0, 0, 1}));
  }
}

TEST_CASE("planted tritangent lines are recovered across all charts") {
  auto r = zxyz();

  SUBCASE("chart A plant plus a conjugate pair in chart B") {
    MPoly cub = parse_poly("x^3 + y^3", r);
    MPoly f = (cub * cub).scaled(Integer(2)) +
              parse_poly("z - 4*x - y", r) * parse_poly("z^5 + x^4*y", r);
    DetectResult d = detect_tritangent(f, Integer(5), 2);
    CHECK(d.complete);
    CHECK_FALSE(d.degenerate);
    REQUIRE(d.lines.size() == 3);

    // the planted line z = 4x + y carries the nonsquare scalar 2
    FiniteField::Ptr F5 = field(5);
    const TritangentLine* LP = find_line(d.lines, LineChart::A, fe(F5, 4), fe(F5, 1));
    REQUIRE(LP != nullptr);
    CHECK(LP->degree == 1);
    CHECK(LP->c == fe(F5, 2));
    CHECK(LP->g == UniPoly::from_integers(Domain::GF(F5), {1, 0, 0, 1}));
    CHECK(LP->split == SplitType::Nonsplit);

    // two more lines y = ax appear over F_25, swapped by Frobenius
    FiniteField::Ptr F25 = field(5, 2);
    Domain d25 = Domain::GF(F25);
    const TritangentLine* L1 =
        find_line(d.lines, LineChart::B, fe2(F25, 3, 4), F25->zero());
    const TritangentLine* L2 =
        find_line(d.lines, LineChart::B, fe2(F25, 3, 1), F25->zero());
    REQUIRE(L1 != nullptr);
    REQUIRE(L2 != nullptr);
    CHECK(L1->degree == 2);
    CHECK(L2->degree == 2);
    CHECK(F25->is_one(L1->c));
    CHECK(F25->is_one(L2->c));
    CHECK(L1->split == SplitType::Split);
    CHECK(L2->split == SplitType::Split);
    CHECK(L1->g == UniPoly(d25, {Value(fe(F25, 4)), Value(fe2(F25, 1, 3)),
                                 Value(fe2(F25, 4, 3)), Value(F25->one())}));
    CHECK(L2->g == UniPoly(d25, {Value(fe(F25, 4)), Value(fe2(F25, 1, 2)),
                                 Value(fe2(F25, 4, 2)), Value(F25->one())}));
    CHECK(F25->frobenius(L1->a) == L2->a);
    check_frobenius_closed(d.lines);
  }

  SUBCASE("chart B plant") {
    MPoly cub = parse_poly("x^3 + z^3", r);
    MPoly f = (cub * cub).scaled(Integer(3)) +
              parse_poly("y - 2*x", r) * parse_poly("x^2*y^3 + z^5", r);
    DetectResult d = detect_tritangent(f, Integer(7), 2);
    CHECK_FALSE(d.degenerate);
    REQUIRE(d.lines.size() == 1);
    const TritangentLine& L = d.lines[0];
    FiniteField::Ptr F7 = L.field;
    CHECK(L.chart == LineChart::B);
    CHECK(L.degree == 1);
    CHECK(L.a == fe(F7, 2));
    CHECK(L.c == fe(F7, 3));
    CHECK(L.g == UniPoly::from_integers(Domain::GF(F7), {1, 0, 0, 1}));
    CHECK(L.split == SplitType::Nonsplit);
  }

  SUBCASE("the line x = 0") {
    MPoly cub = parse_poly("y^3 + z^3", r);
    MPoly f = cub * cub + parse_poly("x", r) * parse_poly("x^4*y - z^5 + x*y^4", r);
    CHECK(line_x0_tritangent(f));
    DetectResult d = detect_tritangent(f, Integer(5), 2);
    CHECK_FALSE(d.degenerate);
    REQUIRE(d.lines.size() == 1);
    const TritangentLine& L = d.lines[0];
    CHECK(L.chart == LineChart::C);
    CHECK(L.degree == 1);
    CHECK(L.field->is_one(L.c));
    CHECK(L.g == UniPoly::from_integers(Domain::GF(L.field), {1, 0, 0, 1}));
    CHECK(L.split == SplitType::Split);
  }
}

TEST_CASE("detection and brute force enumerate the same lines") {
  auto r = zxyz();
  Rng rng(0x74726974616e67ULL);

  auto cross_check = [&](const MPoly& f, long p, unsigned K) {
    CAPTURE(p);
    CAPTURE(K);
    CAPTURE(f.str());
    DetectResult d = detect_tritangent(f, Integer(p), K);
    REQUIRE(d.status == GbStatus::Ok);
    BruteForceResult bf = brute_force_tritangent(f, Integer(p), K);
    if (d.degenerate) {
      // no list to compare; the enumerated lines must still satisfy the
      // chart equations
      FiniteField::Ptr Fp = field(p);
      std::optional<Ideal> IA, IB;
      for (const auto& L : bf.lines) {
        if (L.degree != 1 || L.chart == LineChart::C) continue;
        if (L.chart == LineChart::A) {
          if (!IA) IA = tritangent_ideal(f, LineChart::A, Domain::GF(Fp));
          CHECK(all_gens_vanish(*IA, {Value(L.a), Value(L.b)}));
        } else {
          if (!IB) IB = tritangent_ideal(f, LineChart::B, Domain::GF(Fp));
          CHECK(all_gens_vanish(*IB, {Value(L.a)}));
        }
      }
      return;
    }
    // keys include (c, g, split): both enumerations materialize identically
    CHECK(line_keys(d.lines, true) == line_keys(bf.lines, true));
  };

  for (long p : {3L, 5L, 7L})
    for (int i = 0; i < 8; ++i) cross_check(random_sextic(r, rng, 12, 7), p, 1);
  for (long p : {3L, 5L})
    for (int i = 0; i < 3; ++i) cross_check(random_sextic(r, rng, 9, 5), p, 2);
}

TEST_CASE("solutions beyond the extension bound are counted exactly") {
  auto r = zxyz();
  Rng rng(kDefaultSeed);
  std::vector<MPoly> fs;
  for (int i = 0; i < 6; ++i) fs.push_back(random_sextic(r, rng, 14, 9));

  // lines.size() expectations for the K = 1 complete cases
  std::map<int, size_t> complete_counts{{0, 1}, {2, 3}, {3, 1}, {4, 2}};

  for (int i = 0; i < 6; ++i) {
    CAPTURE(i);
    DetectResult d1 = detect_tritangent(fs[i], Integer(5), 1);
    REQUIRE(d1.status == GbStatus::Ok);
    CHECK_FALSE(d1.degenerate);

    if (complete_counts.count(i)) {
      CHECK(d1.complete);
      CHECK(d1.beyond.empty());
      CHECK(d1.lines.size() == complete_counts[i]);
      continue;
    }

    // two conjugate solutions live one extension step up
    CHECK_FALSE(d1.complete);
    REQUIRE(d1.beyond.size() == 1);
    CHECK(d1.beyond[0].min_degree == 2);
    CHECK(d1.beyond[0].count == 2);
    CHECK(d1.lines.size() == 1);

    DetectResult d3 = detect_tritangent(fs[i], Integer(5), 3);
    CHECK(d3.complete);
    CHECK(d3.beyond.empty());
    REQUIRE(d3.lines.size() == 3);
    size_t deg2 = 0;
    for (const auto& L : d3.lines) deg2 += L.degree == 2 ? 1 : 0;
    CHECK(deg2 == 2);
    check_frobenius_closed(d3.lines);
    // raising the bound only adds lines
    auto k1 = line_keys(d1.lines, true);
    auto k3 = line_keys(d3.lines, true);
    CHECK(std::includes(k3.begin(), k3.end(), k1.begin(), k1.end()));
  }
}

TEST_CASE("candidate prime discovery reports budget exhaustion and inapplicability") {
  auto r = zxyz();
  MPoly f = parse_poly(kCurve, r);

  GbConfig tiny;
  tiny.max_pairs = 10;
  CandidatePrimes cp = candidate_primes(f, tiny);
  CHECK(cp.status == GbStatus::Budget);
  CHECK(cp.small_primes.empty());
  CHECK(cp.large_primes.empty());
  CHECK(cp.unresolved.empty());

  // tritangent lines over the closure of Q rule the method out entirely
  MPoly fermat = parse_poly("x^6 + y^6 + z^6", r);
  CHECK_THROWS_WITH_AS(
      candidate_primes(fermat),
      "candidate_primes: method inapplicable — tritangent lines exist over the closure of Q",
      std::invalid_argument);

  MPoly cub = parse_poly("y^3 + z^3", r);
  MPoly planted = cub * cub + parse_poly("x", r) * parse_poly("x^4*y - z^5 + x*y^4", r);
  CHECK_THROWS_WITH_AS(
      candidate_primes(planted),
      "candidate_primes: method inapplicable — the line x = 0 is tritangent over Q",
      std::invalid_argument);
}

TEST_CASE("input validation") {
  auto r = zxyz();
  MPoly f = parse_poly(kCurve, r);
  MPoly quintic = parse_poly("x^5 + y^5 + z^5", r);
  MPoly mixed = parse_poly("x^6 + y^5", r);

  CHECK_THROWS_AS(detect_tritangent(quintic, Integer(5)), std::invalid_argument);
  CHECK_THROWS_AS(detect_tritangent(mixed, Integer(5)), std::invalid_argument);
  CHECK_THROWS_AS(detect_tritangent(f, Integer(4)), std::invalid_argument);
  CHECK_THROWS_AS(detect_tritangent(f, Integer(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(detect_tritangent(f, Integer(5), 7), std::invalid_argument);

  auto rq = Ring::make({"x", "y", "z"}, Domain::QQ(), MonomialOrder::grevlex());
  MPoly fq = parse_poly(kCurve, rq);
  CHECK_THROWS_AS(detect_tritangent(fq, Integer(5)), std::invalid_argument);
  CHECK_THROWS_AS(candidate_primes(fq), std::invalid_argument);

  CHECK_THROWS_WITH_AS(brute_force_tritangent(f, Integer(59), 2),
                       "brute_force_tritangent: p^(2K) exceeds the enumeration guard of 10^7",
                       std::invalid_argument);

  CHECK_THROWS_AS(tritangent_ideal(f, LineChart::C, Domain::GF(field(5))),
                  std::invalid_argument);

  // coefficients must map into the target field
  auto r7 = Ring::make({"x", "y", "z"}, Domain::GF(field(7)), MonomialOrder::grevlex());
  MPoly f7 = parse_poly("x^6 + y^6 + z^6", r7);
  FiniteField::Ptr F5 = field(5);
  CHECK_THROWS_AS(restrict_to_line(f7, LineChart::A, F5, F5->zero(), F5->zero()),
                  std::invalid_argument);
}
