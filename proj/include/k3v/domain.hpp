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

#include <stdexcept>
#include <string>
#include <variant>

#include "k3v/finite_field.hpp"
#include "k3v/integer.hpp"

namespace k3v {

/// Coefficient value: plain data, interpreted by a Domain.
using Value = std::variant<Integer, Rational, FFElem>;

/// Coefficient domain tag: ZZ, QQ, or a finite field F_{p^k}. Polynomial types
/// carry a Domain at runtime, so the same code paths serve all three.
class Domain {
 public:
  enum class Tag { Z, Q, Fq };

  static Domain ZZ() { return Domain(Tag::Z, nullptr); }
  static Domain QQ() { return Domain(Tag::Q, nullptr); }
  static Domain GF(FiniteField::Ptr f) {
    if (!f) throw std::invalid_argument("Domain::GF: null field");
    return Domain(Tag::Fq, std::move(f));
  }

  Tag tag() const { return tag_; }
  bool is_Z() const { return tag_ == Tag::Z; }
  bool is_Q() const { return tag_ == Tag::Q; }
  bool is_Fq() const { return tag_ == Tag::Fq; }
  bool is_field() const { return tag_ != Tag::Z; }
  const FiniteField::Ptr& field() const {
    if (!is_Fq()) throw std::domain_error("Domain: not a finite field");
    return fq_;
  }
  Integer characteristic() const { return is_Fq() ? fq_->p() : Integer(0); }

  friend bool operator==(const Domain& a, const Domain& b) {
    if (a.tag_ != b.tag_) return false;
    if (a.tag_ != Tag::Fq) return true;
    return *a.fq_ == *b.fq_;
  }
  friend bool operator!=(const Domain& a, const Domain& b) { return !(a == b); }

  Value zero() const {
    switch (tag_) {
      case Tag::Z: return Integer(0);
      case Tag::Q: return Rational(0);
      default: return fq_->zero();
    }
  }
  Value one() const {
    switch (tag_) {
      case Tag::Z: return Integer(1);
      case Tag::Q: return Rational(1);
      default: return fq_->one();
    }
  }
  Value from_integer(const Integer& n) const {
    switch (tag_) {
      case Tag::Z: return n;
      case Tag::Q: return Rational(n);
      default: return fq_->from_integer(n);
    }
  }
  /// Coerce a rational literal; throws if not representable (1/2 in ZZ, or a
  /// denominator divisible by p in F_{p^k}).
  Value from_rational(const Rational& r) const {
    switch (tag_) {
      case Tag::Q: return r;
      case Tag::Z:
        if (!r.is_integer())
          throw std::invalid_argument("coefficient not representable over Z: " + r.str());
        return r.num();
      default: {
        FFElem den = fq_->from_integer(r.den());
        if (fq_->is_zero(den))
          throw std::invalid_argument("coefficient not representable over F_q: " + r.str());
        return fq_->mul(fq_->from_integer(r.num()), fq_->inv(den));
      }
    }
  }

  bool is_zero(const Value& v) const {
    switch (tag_) {
      case Tag::Z: return std::get<Integer>(v).is_zero();
      case Tag::Q: return std::get<Rational>(v).is_zero();
      default: return fq_->is_zero(std::get<FFElem>(v));
    }
  }
  bool is_one(const Value& v) const {
    switch (tag_) {
      case Tag::Z: return std::get<Integer>(v).is_one();
      case Tag::Q: return std::get<Rational>(v).is_one();
      default: return fq_->is_one(std::get<FFElem>(v));
    }
  }
  bool eq(const Value& a, const Value& b) const {
    switch (tag_) {
      case Tag::Z: return std::get<Integer>(a) == std::get<Integer>(b);
      case Tag::Q: return std::get<Rational>(a) == std::get<Rational>(b);
      default: return std::get<FFElem>(a) == std::get<FFElem>(b);
    }
  }

  Value add(const Value& a, const Value& b) const {
    switch (tag_) {
      case Tag::Z: return std::get<Integer>(a) + std::get<Integer>(b);
      case Tag::Q: return std::get<Rational>(a) + std::get<Rational>(b);
      default: return fq_->add(std::get<FFElem>(a), std::get<FFElem>(b));
    }
  }
  Value sub(const Value& a, const Value& b) const {
    switch (tag_) {
      case Tag::Z: return std::get<Integer>(a) - std::get<Integer>(b);
      case Tag::Q: return std::get<Rational>(a) - std::get<Rational>(b);
      default: return fq_->sub(std::get<FFElem>(a), std::get<FFElem>(b));
    }
  }
  Value mul(const Value& a, const Value& b) const {
    switch (tag_) {
      case Tag::Z: return std::get<Integer>(a) * std::get<Integer>(b);
      case Tag::Q: return std::get<Rational>(a) * std::get<Rational>(b);
      default: return fq_->mul(std::get<FFElem>(a), std::get<FFElem>(b));
    }
  }
  Value neg(const Value& a) const {
    switch (tag_) {
      case Tag::Z: return -std::get<Integer>(a);
      case Tag::Q: return -std::get<Rational>(a);
      default: return fq_->neg(std::get<FFElem>(a));
    }
  }
  /// Multiplicative inverse; fields only.
  Value inv(const Value& a) const {
    switch (tag_) {
      case Tag::Q: return std::get<Rational>(a).inv();
      case Tag::Fq: return fq_->inv(std::get<FFElem>(a));
      default: throw std::domain_error("Domain: inverse over Z");
    }
  }
  /// Division: exact over Z (throws if not divisible), field division otherwise.
  Value div(const Value& a, const Value& b) const {
    switch (tag_) {
      case Tag::Q: return std::get<Rational>(a) / std::get<Rational>(b);
      case Tag::Fq: return fq_->div(std::get<FFElem>(a), std::get<FFElem>(b));
      default: {
        const Integer& x = std::get<Integer>(a);
        const Integer& y = std::get<Integer>(b);
        if (y.is_zero() || !x.divisible_by(y))
          throw std::domain_error("Domain: inexact division over Z");
        return Integer::divexact(x, y);
      }
    }
  }

  std::string str(const Value& v) const {
    switch (tag_) {
      case Tag::Z: return std::get<Integer>(v).str();
      case Tag::Q: return std::get<Rational>(v).str();
      default: return fq_->str(std::get<FFElem>(v));
    }
  }

  /// Total order on values used only for canonical output ordering (numeric
  /// over Z/Q, coefficient-tuple lex over F_q).
  int canonical_cmp(const Value& a, const Value& b) const {
    switch (tag_) {
      case Tag::Z: return Integer::cmp(std::get<Integer>(a), std::get<Integer>(b));
      case Tag::Q: return Rational::cmp(std::get<Rational>(a), std::get<Rational>(b));
      default: {
        const FFElem& x = std::get<FFElem>(a);
        const FFElem& y = std::get<FFElem>(b);
        if (x < y) return -1;
        if (y < x) return 1;
        return 0;
      }
    }
  }

  /// Converts a value from another domain into this one where a canonical map
  /// exists: Z -> Q, Z -> F_q (reduction), Q -> F_q (denominator invertible),
  /// Q -> Z (integral values), same-domain identity.
  Value coerce(const Domain& from, const Value& v) const {
    if (from == *this) return v;
    if (from.is_Z()) {
      const Integer& n = std::get<Integer>(v);
      return from_integer(n);
    }
    if (from.is_Q()) {
      const Rational& r = std::get<Rational>(v);
      return from_rational(r);
    }
    throw std::invalid_argument("Domain: no canonical coercion from finite field");
  }

 private:
  Domain(Tag t, FiniteField::Ptr f) : tag_(t), fq_(std::move(f)) {}

  Tag tag_;
  FiniteField::Ptr fq_;
};

}  // namespace k3v
