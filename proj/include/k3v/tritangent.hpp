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

#pragma once

#include <optional>
#include <vector>

#include "k3v/finite_field.hpp"
#include "k3v/groebner.hpp"
#include "k3v/mpoly.hpp"
#include "k3v/unipoly.hpp"

namespace k3v {

/// A line of P^2 is tritangent to the sextic curve f = 0 when f restricted to
/// the line is a scalar times the square of a cubic. Lines are stratified into
/// three disjoint families that together cover the dual plane over any field:
///
///   A:  z = a*x + b*y   parametrized (1 : t : a + b*t)
///   B:  y = a*x         parametrized (1 : a : t)
///   C:  x = 0           parametrized (0 : 1 : t), a single line
enum class LineChart { A, B, C };

/// How the preimage of a tritangent line in the double cover w^2 = f breaks
/// up: two components individually defined over the line's field (split), two
/// components swapped by the quadratic extension (nonsplit), or a doubled
/// component (degenerate: the restriction vanishes, or char 2, where the
/// cover is inseparable and every preimage is non-reduced).
enum class SplitType { Split, Nonsplit, Degenerate };

struct TritangentLine {
  LineChart chart = LineChart::C;
  /// Minimal field of definition F_{p^degree} of the line's parameters.
  FiniteField::Ptr field;
  /// Chart A uses both slopes, chart B only a, chart C neither.
  FFElem a, b;
  unsigned degree = 1;
  /// f restricted to the line equals c * g(t)^2. When c is a square the pair
  /// is normalized to c = 1 by absorbing a fixed square root into g;
  /// otherwise g is monic and c is the restriction's leading coefficient.
  FFElem c;
  UniPoly g = UniPoly(Domain::ZZ());
  SplitType split = SplitType::Degenerate;
};

/// The ideal in d0..d6 whose zero locus over a field F is exactly the set of
/// coefficient vectors of scaled squares: d is a zero iff
/// d0 + d1*t + ... + d6*t^6 = c * g(t)^2 for a scalar c and cubic g over the
/// algebraic closure of F. Obtained by eliminating c0..c3 from the seven
/// equations matching coefficients in sum(d_i t^i) = (c0 + ... + c3 t^3)^2.
/// over_Z is the integral model (the rational elimination with denominators
/// cleared; generators primitive with positive leading coefficients): its
/// zero locus over Q is the cone, and its generators vanish identically on
/// squares in every characteristic. The converse can fail modulo finitely
/// many bad primes, which is why `over` never reduces the integral model.
struct SquareConeIdeal {
  Ideal over_Z;
  /// The cone over `dom` (same variable names d0..d6). Over Q this is the
  /// coefficientwise image of over_Z; over a finite field the elimination is
  /// recomputed at that characteristic (cached per prime) so the iff above
  /// holds at bad primes too, and extensions reuse the prime-field basis.
  Ideal over(const Domain& dom) const;
};

/// Built once on first use and cached for the process lifetime.
const SquareConeIdeal& square_cone_ideal();

/// The ideal cutting out the tritangent lines of chart A (variables a, b) or
/// chart B (variable a) over `dom`, obtained by substituting the coefficient
/// polynomials of f restricted to the chart's parametrized line into the
/// square cone. f may live over Z, Q, or the same prime field as `dom`.
/// Chart C has no parameters; use line_x0_tritangent. Throws
/// std::invalid_argument for chart C, non-sextic f, or a coefficient domain
/// with no map into `dom`.
Ideal tritangent_ideal(const MPoly& f, LineChart chart, const Domain& dom);

/// Chart C decided directly: is f(0,1,t) a scaled square (or identically
/// zero, which counts as the degenerate case of tangency everywhere)?
/// Integer input is tested over Q.
bool line_x0_tritangent(const MPoly& f);

/// f restricted to the parametrized line of `chart` with parameters a, b from
/// F, as a polynomial in t over F. f must be over Z or the prime field of F.
UniPoly restrict_to_line(const MPoly& f, LineChart chart,
                         const FiniteField::Ptr& F, const FFElem& a,
                         const FFElem& b);

/// Restrict f to the given line and, when the restriction is a scaled square,
/// package the line with its (c, g) data and split classification. Returns
/// nullopt when the line is not tritangent. `degree` should be the minimal
/// field degree of (a, b); it is stored, not recomputed.
std::optional<TritangentLine> materialize_line(const MPoly& f, LineChart chart,
                                               const FiniteField::Ptr& F,
                                               const FFElem& a, const FFElem& b,
                                               unsigned degree);

/// Split/nonsplit classification of an already materialized line over F_q,
/// q odd: split iff c is a square in F_q (the two components w = ±sqrt(c)*g
/// are then individually defined over F_q). Throws std::invalid_argument for
/// p = 2, where the classification is meaningless (see SplitType).
SplitType split_type(const TritangentLine& L);

struct DetectResult {
  std::vector<TritangentLine> lines;
  /// Solutions of the chart ideals whose field degree exceeds the search
  /// bound, counted exactly per minimal degree (empty means the enumeration
  /// is exhaustive over the algebraic closure).
  std::vector<BeyondBound> beyond;
  /// True when `lines` is the complete list over the algebraic closure.
  bool complete = false;
  /// A chart ideal was positive-dimensional (f is a scaled square as a form,
  /// or vanishes mod p): infinitely many tritangent lines, none enumerated.
  bool degenerate = false;
  GbStatus status = GbStatus::Ok;
};

/// All tritangent lines to f = 0 over the algebraic closure of F_p with
/// parameters of field degree <= K, plus an exact account of any deeper
/// solutions. f over Z, homogeneous of degree 6; p prime; 1 <= K <= 6.
DetectResult detect_tritangent(const MPoly& f, const Integer& p, unsigned K = 3,
                               const GbConfig& cfg = {});

struct BruteForceResult {
  std::vector<TritangentLine> lines;
  /// Every line defined over F_p itself was tritangent — the exhaustive
  /// analogue of a positive-dimensional chart ideal.
  bool all_tritangent = false;
};

/// Independent enumeration: walk every line of P^2 over F_{p^k} for k <= K,
/// restrict f, and keep the scaled squares, reporting each line once at its
/// minimal field of definition. No elimination machinery involved. Guard:
/// p^{2K} <= 10^7. f over Z, homogeneous of degree 6.
BruteForceResult brute_force_tritangent(const MPoly& f, const Integer& p,
                                        unsigned K = 1);

struct CandidatePrimes {
  /// Primes below 10^6 dividing a candidate integer, ascending.
  std::vector<Integer> small_primes;
  /// Probable-prime cofactors >= 10^6 (40 Miller-Rabin rounds).
  std::vector<Integer> large_primes;
  /// Composite cofactors that resisted factoring; their prime divisors are
  /// also candidates.
  std::vector<Integer> unresolved;
  GbStatus status = GbStatus::Ok;
};

/// Every prime p such that f = 0 has a tritangent line over the closure of
/// F_p divides one of the returned entries. Requires no tritangent lines over
/// the closure of Q (throws std::invalid_argument "method inapplicable"
/// otherwise). The chart ideals are solved over Q twice with decorrelated
/// runs (swapped variable order for chart A, reversed generator order for
/// chart B), recording every integer divided by; candidates are the pairwise
/// common factors of the two logs, plus the
/// common value of the cone generators on f(0,1,t) (covering chart C, which
/// has no elimination step), plus the content of f. Budget exhaustion is
/// reported through `status`, not a verdict.
CandidatePrimes candidate_primes(const MPoly& f, const GbConfig& cfg = {});

}  // namespace k3v
