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

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "k3v/mpoly.hpp"

namespace k3v {

/// S-pair selection strategy. Basis computations are famously sensitive to
/// this choice; it is a recorded knob, and the prime-discovery path runs once
/// with each setting.
enum class PairStrategy { Normal, Sugar };

struct GbConfig {
  PairStrategy strategy = PairStrategy::Normal;
  /// Pair-reduction budget; exhausting it yields status Budget ("inconclusive"),
  /// never a verdict.
  uint64_t max_pairs = 1'000'000;
  /// Over Q: keep a log of every denominator introduced by division steps.
  bool record_denominators = false;
  /// Re-check that all S-polynomials of the final basis reduce to zero.
  bool certify = true;
};

enum class GbStatus { Ok, Budget };

/// Multiset of integers (> 1 in absolute value) that were inverted or stripped
/// as content during a Q-basis computation. Any prime at which the mod-p
/// reduction of the computation could diverge from the Q run divides one of
/// these values or an input coefficient.
struct DenominatorLog {
  std::map<Integer, uint64_t> counts;

  void record(const Integer& v);
  std::vector<Integer> values() const;
  bool contains(const Integer& v) const { return counts.count(Integer::abs(v)) != 0; }
  uint64_t total() const;
};

struct GbStats {
  uint64_t pairs = 0;  // S-pairs reduced
  uint64_t steps = 0;  // single-term eliminations
};

struct GbResult {
  GbStatus status = GbStatus::Ok;
  /// Reduced basis: monic leading coefficients, no term divisible by another
  /// element's leading monomial, sorted descending by leading monomial. Unique
  /// for (ideal, order). Partial (unreduced) when status is Budget.
  std::vector<MPoly> basis;
  std::optional<DenominatorLog> denominators;
  GbStats stats;
};

/// Complete multivariate division: the remainder has no term divisible by any
/// divisor's leading monomial, and f - remainder lies in the ideal generated
/// by the divisors. Field coefficients only (Z is rejected; see strong_gb_Z).
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& divisors);

/// Buchberger with the Gebauer-Moller pair update, full tail reduction, and a
/// canonical reduced basis. Field coefficients only. The result order becomes
/// the ring order of the basis elements.
GbResult buchberger(const Ideal& I, const MonomialOrder& order, const GbConfig& cfg = {});

struct EliminationResult {
  GbStatus status = GbStatus::Ok;
  /// Basis elements free of eliminated variables; generates the intersection
  /// with the subring. Same ambient ring, eliminated variables simply absent.
  std::vector<MPoly> gens;
  std::optional<DenominatorLog> denominators;
};

/// Computes a basis under block(elim_mask, grevlex, grevlex) and keeps the
/// elements free of eliminated variables.
EliminationResult elimination_ideal(const Ideal& I, uint16_t elim_mask,
                                    const GbConfig& cfg = {});

enum class Triviality { Trivial, Proper, Inconclusive };

/// Whether the reduced basis is {1}. Budget exhaustion reports Inconclusive.
Triviality is_trivial(const Ideal& I, const GbConfig& cfg = {});

/// One solution of a zero-dimensional system, with its exact field of
/// definition F_{p^degree}; coordinates follow the ring's variable order.
struct ZeroDimPoint {
  FiniteField::Ptr field;
  std::vector<FFElem> coords;
  unsigned degree = 1;
};

/// Solutions that provably lie beyond the extension bound: at least `count`
/// points whose field degree is at least `min_degree` (> the bound).
struct BeyondBound {
  unsigned min_degree = 0;
  uint64_t count = 0;
};

struct SolveResult {
  enum class Kind { Solved, PositiveDim, Inconclusive } kind = Kind::Solved;
  /// All solutions of field degree <= K, each tagged with its exact degree;
  /// closed under the p-power Frobenius (conjugate points all listed).
  std::vector<ZeroDimPoint> points;
  std::vector<BeyondBound> beyond;
  bool complete() const { return kind == Kind::Solved && beyond.empty(); }
};

/// Solves a zero-dimensional ideal over a prime field F_p in 1 or 2 variables
/// via a lex basis, univariate factorization of the eliminant in the last
/// variable, and back-substitution over F_{p^k}, k <= K <= 3. Zero-
/// dimensionality is detected, not assumed: positive-dimensional input is
/// reported as such.
SolveResult solve_zero_dim(const Ideal& I, unsigned K, const GbConfig& cfg = {});

}  // namespace k3v
