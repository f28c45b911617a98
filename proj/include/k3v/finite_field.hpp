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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3v/integer.hpp"

namespace k3v {

/// Element of F_{p^k}: coefficient vector of length k in the polynomial basis
/// 1, u, ..., u^{k-1}, entries reduced into [0, p). Semantics live in the
/// owning FiniteField; elements are plain data.
struct FFElem {
  std::vector<Integer> c;

  friend bool operator==(const FFElem& a, const FFElem& b) { return a.c == b.c; }
  friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a.c == b.c); }
  /// Order by coefficient tuple (c_{k-1}, ..., c_0); used for canonical picks.
  friend bool operator<(const FFElem& a, const FFElem& b);
};

/// F_{p^k} for prime p and 1 <= k <= 6. k = 1 is the prime field; for k > 1
/// the defining polynomial is the lexicographically smallest monic irreducible
/// of degree k over F_p (by the coefficient tuple (a_{k-1}, ..., a_0)), so a
/// field is determined by (p, k) alone and reports are reproducible.
class FiniteField {
 public:
  using Ptr = std::shared_ptr<const FiniteField>;

  /// Builds F_{p^k}. Checks primality of p (probabilistic for big p) and
  /// searches the canonical defining polynomial for k > 1.
  static Ptr make(const Integer& p, unsigned k = 1);

  const Integer& p() const { return p_; }
  unsigned k() const { return k_; }
  const Integer& q() const { return q_; }  // p^k
  /// Monic defining polynomial, coefficients of 1, u, ..., u^k (length k+1).
  const std::vector<Integer>& defining_poly() const { return def_; }

  FFElem zero() const;
  FFElem one() const;
  /// Image of n under Z -> F_{p^k} (constant embedding).
  FFElem from_integer(const Integer& n) const;
  /// The basis generator u (k > 1), or 1 for the prime field.
  FFElem gen() const;
  /// Element from explicit coefficients (reduced mod p; padded/truncated checked).
  FFElem from_coeffs(std::vector<Integer> coeffs) const;

  bool is_zero(const FFElem& a) const;
  bool is_one(const FFElem& a) const;

  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem inv(const FFElem& a) const;
  FFElem div(const FFElem& a, const FFElem& b) const { return mul(a, inv(b)); }
  /// a^e for e >= 0.
  FFElem pow(const FFElem& a, const Integer& e) const;
  FFElem frobenius(const FFElem& a) const { return pow(a, p_); }

  /// 0 / +1 / -1 for zero / nonzero square / nonsquare. Requires p odd.
  int quadratic_character(const FFElem& a) const;
  /// Canonical square root when one exists (Tonelli-Shanks); the returned
  /// root is the smaller of the pair in FFElem order.
  std::optional<FFElem> sqrt(const FFElem& a) const;

  /// Degree of a over F_p: the size of its Frobenius orbit (divides k).
  unsigned degree_over_prime(const FFElem& a) const;

  std::string str(const FFElem& a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.def_ == b.def_;
  }

 private:
  FiniteField() = default;

  Integer p_;
  unsigned k_ = 1;
  Integer q_;
  std::vector<Integer> def_;  // monic, length k+1

  Integer mod_p(const Integer& v) const { return Integer::mod(v, p_); }
};

}  // namespace k3v
