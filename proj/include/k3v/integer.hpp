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

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace k3v {

/// Arbitrary-precision signed integer. Thin RAII wrapper around GMP's mpz_t;
/// value semantics throughout.
class Integer {
 public:
  Integer() noexcept { mpz_init(z_); }
  Integer(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  explicit Integer(const std::string& decimal);

  Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
  Integer(Integer&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Integer() { mpz_clear(z_); }

  friend Integer operator+(const Integer& a, const Integer& b) {
    Integer r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    Integer r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    Integer r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  Integer operator-() const {
    Integer r;
    mpz_neg(r.z_, z_);
    return r;
  }
  Integer& operator+=(const Integer& b) {
    mpz_add(z_, z_, b.z_);
    return *this;
  }
  Integer& operator-=(const Integer& b) {
    mpz_sub(z_, z_, b.z_);
    return *this;
  }
  Integer& operator*=(const Integer& b) {
    mpz_mul(z_, z_, b.z_);
    return *this;
  }

  /// Exact division; caller guarantees divisibility.
  static Integer divexact(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
  }
  /// Truncated quotient and remainder (C semantics).
  static std::pair<Integer, Integer> tdiv_qr(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
    return {std::move(q), std::move(r)};
  }
  /// Non-negative remainder for positive modulus.
  static Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.z_, a.z_, m.z_);
    return r;
  }
  /// Remainder of least absolute value (ties broken toward positive).
  static Integer smod(const Integer& a, const Integer& m);

  static Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  /// g = ua + vb with g >= 0.
  static Integer gcdext(const Integer& a, const Integer& b, Integer& u, Integer& v) {
    Integer g;
    mpz_gcdext(g.z_, u.z_, v.z_, a.z_, b.z_);
    return g;
  }
  static Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
  }
  static Integer abs(const Integer& a) {
    Integer r;
    mpz_abs(r.z_, a.z_);
    return r;
  }
  static Integer pow(const Integer& a, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.z_, a.z_, e);
    return r;
  }
  /// (base^exp) mod m, exp >= 0, m > 0.
  static Integer powmod(const Integer& base, const Integer& exp, const Integer& m) {
    Integer r;
    mpz_powm(r.z_, base.z_, exp.z_, m.z_);
    return r;
  }
  /// Inverse of a modulo m; throws std::domain_error if not invertible.
  static Integer invmod(const Integer& a, const Integer& m);
  /// Floor of the square root of a non-negative value.
  static Integer isqrt(const Integer& a) {
    Integer r;
    mpz_sqrt(r.z_, a.z_);
    return r;
  }

  bool divisible_by(const Integer& d) const { return mpz_divisible_p(z_, d.z_) != 0; }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
  bool is_odd() const { return mpz_odd_p(z_) != 0; }
  int sign() const { return mpz_sgn(z_); }
  /// Number of bits in |a|; 0 for a = 0.
  size_t bits() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }
  bool bit(size_t i) const { return mpz_tstbit(z_, static_cast<mp_bitcnt_t>(i)) != 0; }
  size_t decimal_digits() const { return is_zero() ? 1 : mpz_sizeinbase(z_, 10); }
  /// Index of lowest set bit of |a|; a must be nonzero.
  unsigned long trailing_zero_bits() const { return mpz_scan1(z_, 0); }

  bool fits_ulong() const { return mpz_fits_ulong_p(z_) != 0; }
  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  unsigned long to_ulong() const { return mpz_get_ui(z_); }
  long to_long() const { return mpz_get_si(z_); }
  /// Nearest double (round to nearest); may overflow to inf.
  double to_double() const { return mpz_get_d(z_); }

  static int cmp(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_); }
  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Integer& a, const Integer& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Integer& a, const Integer& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Integer& a, const Integer& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Integer& a, const Integer& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const Integer& a, long b) { return mpz_cmp_si(a.z_, b) == 0; }
  friend bool operator!=(const Integer& a, long b) { return mpz_cmp_si(a.z_, b) != 0; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Integer& a);

  /// Raw handle for the few call sites that talk to GMP directly.
  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw_mut() { return z_; }

 private:
  mpz_t z_;
};

/// Rational number, always canonical: lowest terms, denominator > 0.
class Rational {
 public:
  Rational() noexcept { mpq_init(q_); }
  Rational(long v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  explicit Rational(const Integer& n) {
    mpq_init(q_);
    mpz_set(mpq_numref(q_), n.raw());
  }
  Rational(const Integer& num, const Integer& den);

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational& operator+=(const Rational& b) {
    mpq_add(q_, q_, b.q_);
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    mpq_sub(q_, q_, b.q_);
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    mpq_mul(q_, q_, b.q_);
    return *this;
  }

  Rational inv() const;

  Integer num() const {
    Integer n;
    mpz_set(n.raw_mut(), mpq_numref(q_));
    return n;
  }
  Integer den() const {
    Integer d;
    mpz_set(d.raw_mut(), mpq_denref(q_));
    return d;
  }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  static int cmp(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_); }
  /// Exact comparison against a double (never rounds): finite doubles are
  /// dyadic rationals, so mpq_set_d is exact.
  int cmp_double(double d) const {
    mpq_t t;
    mpq_init(t);
    mpq_set_d(t, d);
    int r = mpq_cmp(q_, t);
    mpq_clear(t);
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

  /// Nearest double (round to nearest).
  double to_double() const { return mpq_get_d(q_); }

  /// "n" when integral, otherwise "n/d".
  std::string str() const;
  /// Parses "n" or "n/d"; throws std::invalid_argument on malformed input.
  static Rational parse(const std::string& s);
  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

 private:
  mpq_t q_;
};

}  // namespace k3v
