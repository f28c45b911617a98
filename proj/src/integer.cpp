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

#include "k3v/integer.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace k3v {

Integer::Integer(const std::string& decimal) {
  if (decimal.empty()) throw std::invalid_argument("Integer: empty string");
  if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
    mpz_clear(z_);
    throw std::invalid_argument("Integer: malformed decimal literal '" + decimal + "'");
  }
}

Integer Integer::smod(const Integer& a, const Integer& m) {
  Integer r = mod(a, Integer::abs(m));
  Integer twice = r + r;
  if (twice > Integer::abs(m)) r -= Integer::abs(m);
  return r;
}

Integer Integer::invmod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.raw_mut(), a.raw(), m.raw()) == 0)
    throw std::domain_error("Integer::invmod: not invertible modulo " + m.str());
  return r;
}

std::string Integer::str() const {
  std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
  mpz_get_str(buf.data(), 10, z_);
  return std::string(buf.data());
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

std::string Rational::str() const {
  std::string s = num().str();
  if (!is_integer()) s += "/" + den().str();
  return s;
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

}  // namespace k3v
