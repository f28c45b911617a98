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

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3v/domain.hpp"

namespace k3v {

/// Upper bound on ring variables; the largest ring in use is
/// Z[c0..c3, d0..d6] with 11 variables.
inline constexpr unsigned kMaxVars = 12;

/// Exponent vector with cached total degree. Plain data; the ambient variable
/// count lives in the Ring.
struct Mono {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t deg = 0;

  static Mono one() { return Mono{}; }
  static Mono var(unsigned i, uint16_t exp = 1) {
    Mono m;
    m.e[i] = exp;
    m.deg = exp;
    return m;
  }

  friend bool operator==(const Mono& a, const Mono& b) { return a.deg == b.deg && a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono m;
    for (unsigned i = 0; i < kMaxVars; ++i)
      m.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
    m.deg = a.deg + b.deg;
    return m;
  }

  bool divides(const Mono& b) const {
    for (unsigned i = 0; i < kMaxVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  /// b / *this, assuming divisibility.
  Mono quotient_of(const Mono& b) const {
    Mono m;
    for (unsigned i = 0; i < kMaxVars; ++i)
      m.e[i] = static_cast<uint16_t>(b.e[i] - e[i]);
    m.deg = b.deg - deg;
    return m;
  }
  friend Mono lcm(const Mono& a, const Mono& b) {
    Mono m;
    for (unsigned i = 0; i < kMaxVars; ++i) {
      m.e[i] = std::max(a.e[i], b.e[i]);
      m.deg += m.e[i];
    }
    return m;
  }
  friend bool coprime(const Mono& a, const Mono& b) {
    for (unsigned i = 0; i < kMaxVars; ++i)
      if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
  }
};

/// Total multiplicative monomial order: lex, grevlex, or a block (product)
/// order that compares a masked set of variables first — any monomial touching
/// a masked variable outranks every monomial free of them, which is what makes
/// elimination work.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
  /// Variables with set bits in `elim_mask` form the leading block.
  static MonomialOrder block(uint16_t elim_mask, Kind first = Kind::Grevlex,
                             Kind second = Kind::Grevlex);

  Kind kind() const { return kind_; }
  uint16_t elim_mask() const { return mask_; }

  /// Three-way comparison; positive means a is the larger monomial.
  int cmp(const Mono& a, const Mono& b) const;

  std::string str() const;
  /// Parses "lex" / "grevlex" (the two on-disk orders).
  static MonomialOrder parse(const std::string& text);

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.mask_ == b.mask_ && a.first_ == b.first_ &&
           a.second_ == b.second_;
  }
  friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_;
  uint16_t mask_ = 0;           // block only
  Kind first_ = Kind::Grevlex;  // block only
  Kind second_ = Kind::Grevlex;

  static int cmp_masked(Kind k, const Mono& a, const Mono& b, uint16_t mask);
};

/// Polynomial ring descriptor: ordered variable names, coefficient domain,
/// active monomial order. Shared immutably by the polynomials living in it.
class Ring {
 public:
  using Ptr = std::shared_ptr<const Ring>;

  static Ptr make(std::vector<std::string> vars, Domain dom,
                  MonomialOrder order = MonomialOrder::grevlex());

  unsigned nvars() const { return static_cast<unsigned>(vars_.size()); }
  const std::string& var(unsigned i) const { return vars_[i]; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::optional<unsigned> index_of(const std::string& name) const;
  const Domain& dom() const { return dom_; }
  const MonomialOrder& order() const { return order_; }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ && a.dom_ == b.dom_ && a.order_ == b.order_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  Ring(std::vector<std::string> vars, Domain dom, MonomialOrder order)
      : vars_(std::move(vars)), dom_(std::move(dom)), order_(order) {}

  std::vector<std::string> vars_;
  Domain dom_;
  MonomialOrder order_;
};

struct Term {
  Mono m;
  Value c;
};

/// Sparse multivariate polynomial: terms with nonzero coefficients, sorted
/// descending under the ring's active order.
class MPoly {
 public:
  explicit MPoly(Ring::Ptr ring) : ring_(std::move(ring)) {}
  /// Normalizes: sorts, merges equal monomials, drops zeros.
  MPoly(Ring::Ptr ring, std::vector<Term> terms);

  static MPoly zero(const Ring::Ptr& r) { return MPoly(r); }
  static MPoly one(const Ring::Ptr& r) { return constant(r, r->dom().one()); }
  static MPoly constant(const Ring::Ptr& r, Value c);
  static MPoly variable(const Ring::Ptr& r, unsigned i);
  static MPoly monomial(const Ring::Ptr& r, Mono m, Value c);

  const Ring::Ptr& ring() const { return ring_; }
  const Domain& dom() const { return ring_->dom(); }
  const std::vector<Term>& terms() const { return t_; }
  size_t nterms() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.deg == 0); }

  const Term& lt() const;
  const Mono& lm() const { return lt().m; }
  const Value& lc() const { return lt().c; }

  /// Max total degree of a term; -1 for the zero polynomial.
  int total_degree() const { return t_.empty() ? -1 : max_deg_; }
  bool is_homogeneous() const;
  int degree_in(unsigned var) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly scaled(const Value& v) const;
  MPoly monic() const;
  MPoly pow(unsigned e) const;
  MPoly mul_term(const Mono& m, const Value& c) const;

  /// Formal partial derivative in variable i.
  MPoly partial(unsigned i) const;
  std::vector<MPoly> partials() const;

  /// Full evaluation; xs has one value per ring variable.
  Value eval(const std::vector<Value>& xs) const;

  /// Ring homomorphism determined by variable images. Every variable that
  /// actually occurs in *this must be assigned; images must share one ring,
  /// which becomes the result ring. Coefficients are coerced.
  MPoly substitute(const std::map<std::string, MPoly>& images) const;

  /// Same polynomial under a different active order (explicit resort).
  MPoly with_order(const MonomialOrder& order) const;
  /// Coefficientwise move into a ring with the same variable names.
  MPoly coerced(const Ring::Ptr& target) const;

  /// Over Z: gcd of coefficients (positive). Over Q: positive rational c such
  /// that f/c is integral and primitive.
  Value content() const;
  /// f / content, with sign fixed so the leading coefficient is positive.
  MPoly primitive_part() const;

  std::string str() const;

 private:
  void normalize();

  Ring::Ptr ring_;
  std::vector<Term> t_;
  uint32_t max_deg_ = 0;
};

/// Parses the polynomial text grammar: identifiers, + - * ^, integer literals
/// with an optional /denominator, insignificant whitespace, no parentheses.
/// Throws std::invalid_argument with the byte offset on syntax errors, unknown
/// variables, and non-representable coefficients.
MPoly parse_poly(const std::string& text, const Ring::Ptr& ring);

/// Finitely generated ideal: nonzero generators in one ring.
struct Ideal {
  Ring::Ptr ring;
  std::vector<MPoly> gens;

  static Ideal of(Ring::Ptr ring, std::vector<MPoly> gens);
};

}  // namespace k3v
