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
#include <string>
#include <utility>
#include <vector>

#include "k3v/domain.hpp"
#include "k3v/rng.hpp"

namespace k3v {

/// Dense univariate polynomial over a runtime coefficient domain. The
/// coefficient vector never has a trailing zero; the zero polynomial is the
/// empty vector (degree -1).
class UniPoly {
 public:
  explicit UniPoly(Domain d) : dom_(std::move(d)) {}
  UniPoly(Domain d, std::vector<Value> coeffs) : dom_(std::move(d)), c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly zero(const Domain& d) { return UniPoly(d); }
  static UniPoly one(const Domain& d) { return constant(d, d.one()); }
  static UniPoly constant(const Domain& d, Value v);
  /// c * t^e
  static UniPoly monomial(const Domain& d, Value c, unsigned e);
  /// From integer coefficients (ascending), coerced into d.
  static UniPoly from_integers(const Domain& d, const std::vector<long>& coeffs);

  const Domain& dom() const { return dom_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return deg() == 0 && dom_.is_one(c_[0]); }
  /// Coefficient of t^i (zero beyond the degree).
  Value coeff(size_t i) const { return i < c_.size() ? c_[i] : dom_.zero(); }
  const std::vector<Value>& coeffs() const { return c_; }
  const Value& lc() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly scaled(const Value& v) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  Value eval(const Value& x) const;
  /// this^e (e >= 0) reduced mod m at every step; field domains.
  UniPoly powmod(const Integer& e, const UniPoly& m) const;

  /// Quotient and remainder; divisor over a field domain (or exactly dividing
  /// leading coefficients over Z at every step).
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
  static UniPoly rem(const UniPoly& a, const UniPoly& b) { return divrem(a, b).second; }

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && dom_.is_zero(c_.back())) c_.pop_back();
  }
  void check_same(const UniPoly& o) const;

  Domain dom_;
  std::vector<Value> c_;
};

/// Monic gcd; gcd(a, 0) = monic(a). Field domains only; mixed domains rejected.
UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b);

/// Squarefree decomposition over Q or F_{p^k} (perfect fields): returns monic
/// pairwise-coprime squarefree parts with multiplicities, f = lc * prod g_i^{e_i}.
/// Sorted by multiplicity.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f);

struct UniFactorization {
  Value lead;  // leading coefficient of the input
  std::vector<std::pair<UniPoly, unsigned>> factors;  // monic irreducible, multiplicity
};

/// Full factorization over F_{p^k}: squarefree decomposition, distinct-degree
/// splitting, Cantor-Zassenhaus equal-degree splitting. Deterministic output
/// order (degree, then coefficient tuple). Throws std::invalid_argument for
/// the zero polynomial, std::runtime_error past the retry cap.
UniFactorization unipoly_factor(const UniPoly& f, Rng& rng, int retry_cap = 64);

/// f = c * g^2 test over Q or F_{p^k} (any characteristic): succeeds iff every
/// irreducible factor of f has even multiplicity; g monic, c = lc(f).
std::optional<std::pair<Value, UniPoly>> unipoly_is_scaled_square(const UniPoly& f);

/// Maps a polynomial over F_p (or Z, Q) coefficientwise into a target domain.
UniPoly unipoly_coerce(const Domain& target, const UniPoly& f);

}  // namespace k3v
