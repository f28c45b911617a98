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

#include "k3v/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "k3v/prime.hpp"

namespace k3v {

namespace {

// Little-endian dense polynomials over F_p, used only for the defining-poly
// search and extension-field inversion.
using PolFp = std::vector<Integer>;

void pol_trim(PolFp& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int pol_deg(const PolFp& a) { return static_cast<int>(a.size()) - 1; }

PolFp pol_mul_mod(const PolFp& a, const PolFp& b, const PolFp& f, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  PolFp r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = Integer::mod(c, p);
  // reduce by monic f
  int df = pol_deg(f);
  for (int i = pol_deg(r); i >= df; --i) {
    if (r[i].is_zero()) continue;
    Integer c = r[i];
    for (int j = 0; j < df; ++j) r[i - df + j] = Integer::mod(r[i - df + j] - c * f[j], p);
    r[i] = 0;
  }
  pol_trim(r);
  return r;
}

PolFp pol_powmod(PolFp base, const Integer& e, const PolFp& f, const Integer& p) {
  PolFp r{Integer(1)};
  size_t nbits = e.bits();
  for (size_t i = nbits; i-- > 0;) {
    r = pol_mul_mod(r, r, f, p);
    if (mpz_tstbit(e.raw(), i)) r = pol_mul_mod(r, base, f, p);
  }
  return r;
}

PolFp pol_mod(PolFp a, const PolFp& f, const Integer& p) {
  int df = pol_deg(f);
  Integer lcinv = Integer::invmod(f[df], p);
  for (int i = pol_deg(a); i >= df; --i) {
    if (a[i].is_zero()) continue;
    Integer c = Integer::mod(a[i] * lcinv, p);
    for (int j = 0; j <= df; ++j) a[i - df + j] = Integer::mod(a[i - df + j] - c * f[j], p);
  }
  pol_trim(a);
  return a;
}

PolFp pol_gcd(PolFp a, PolFp b, const Integer& p) {
  pol_trim(a);
  pol_trim(b);
  while (!b.empty()) {
    PolFp r = pol_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Extended Euclid: returns g = gcd(a, f) and u with u*a = g (mod f).
std::pair<PolFp, PolFp> pol_gcdext_mod(PolFp a, const PolFp& f, const Integer& p) {
  PolFp r0 = f, r1 = std::move(a);
  PolFp u0{}, u1{Integer(1)};
  pol_trim(r1);
  while (!r1.empty()) {
    // divide r0 by r1
    PolFp q(std::max<size_t>(r0.size(), 1), Integer(0));
    PolFp rem = r0;
    int d1 = pol_deg(r1);
    Integer lcinv = Integer::invmod(r1[d1], p);
    for (int i = pol_deg(rem); i >= d1; --i) {
      if (rem[i].is_zero()) continue;
      Integer c = Integer::mod(rem[i] * lcinv, p);
      q[i - d1] = c;
      for (int j = 0; j <= d1; ++j) rem[i - d1 + j] = Integer::mod(rem[i - d1 + j] - c * r1[j], p);
    }
    pol_trim(rem);
    pol_trim(q);
    // u2 = u0 - q*u1 (mod f)
    PolFp qu1;
    if (!q.empty() && !u1.empty()) {
      qu1.assign(q.size() + u1.size() - 1, Integer(0));
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < u1.size(); ++j) qu1[i + j] += q[i] * u1[j];
      for (auto& c : qu1) c = Integer::mod(c, p);
    }
    PolFp u2(std::max(u0.size(), qu1.size()), Integer(0));
    for (size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
    for (size_t i = 0; i < qu1.size(); ++i) u2[i] = Integer::mod(u2[i] - qu1[i], p);
    pol_trim(u2);
    u2 = u2.empty() ? u2 : pol_mod(std::move(u2), f, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {r0, u0};
}

// Deterministic Rabin irreducibility test for monic f of degree k over F_p.
bool pol_irreducible(const PolFp& f, const Integer& p) {
  int k = pol_deg(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  PolFp t{Integer(0), Integer(1)};
  // x_j = t^(p^j) mod f via iterated Frobenius
  auto frob_power = [&](int j) {
    PolFp x = pol_mod(t, f, p);
    for (int i = 0; i < j; ++i) x = pol_powmod(x, p, f, p);
    return x;
  };
  PolFp xk = frob_power(k);
  PolFp tm = pol_mod(t, f, p);
  if (xk != tm) return false;
  for (int ell : {2, 3, 5}) {
    if (k % ell != 0) continue;
    PolFp xs = frob_power(k / ell);
    // gcd(x - t, f) must be 1
    PolFp diff = xs;
    if (diff.size() < 2) diff.resize(2, Integer(0));
    diff[1] = Integer::mod(diff[1] - Integer(1), p);
    pol_trim(diff);
    PolFp g = pol_gcd(f, diff, p);
    if (pol_deg(g) != 0) return false;
  }
  return true;
}

}  // namespace

bool operator<(const FFElem& a, const FFElem& b) {
  if (a.c.size() != b.c.size())
    throw std::invalid_argument("FFElem: comparing elements of different fields");
  for (size_t i = a.c.size(); i-- > 0;) {
    int c = Integer::cmp(a.c[i], b.c[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

FiniteField::Ptr FiniteField::make(const Integer& p, unsigned k) {
  if (k < 1 || k > 6) throw std::invalid_argument("FiniteField: degree k must be in 1..6");
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: modulus " + p.str() + " is not prime");

  auto F = std::shared_ptr<FiniteField>(new FiniteField());
  F->p_ = p;
  F->k_ = k;
  F->q_ = Integer::pow(p, k);
  if (k == 1) {
    F->def_ = {Integer(0), Integer(1)};  // t, by convention; unused
    return F;
  }

  // Lexicographically smallest monic irreducible of degree k: enumerate the
  // coefficient tuple (a_{k-1}, ..., a_0) in ascending lex order, i.e. count
  // in base p with a_0 the fastest digit.
  std::vector<Integer> a(k, Integer(0));
  while (true) {
    PolFp cand(a.begin(), a.end());
    cand.push_back(Integer(1));
    if (pol_irreducible(cand, p)) {
      F->def_ = std::move(cand);
      return F;
    }
    size_t pos = 0;
    while (pos < k) {
      a[pos] += Integer(1);
      if (a[pos] < p) break;
      a[pos] = 0;
      ++pos;
    }
    if (pos == k)
      throw std::runtime_error("FiniteField: no irreducible polynomial found");  // unreachable
  }
}

FFElem FiniteField::zero() const { return FFElem{std::vector<Integer>(k_, Integer(0))}; }

FFElem FiniteField::one() const {
  FFElem e = zero();
  e.c[0] = mod_p(Integer(1));  // reduces to 0 only if p = 1, which is excluded
  return e;
}

FFElem FiniteField::from_integer(const Integer& n) const {
  FFElem e = zero();
  e.c[0] = mod_p(n);
  return e;
}

FFElem FiniteField::gen() const {
  if (k_ == 1) return one();
  FFElem e = zero();
  e.c[1] = 1;
  return e;
}

FFElem FiniteField::from_coeffs(std::vector<Integer> coeffs) const {
  if (coeffs.size() > k_) throw std::invalid_argument("FiniteField: coefficient vector too long");
  coeffs.resize(k_, Integer(0));
  for (auto& c : coeffs) c = mod_p(c);
  return FFElem{std::move(coeffs)};
}

bool FiniteField::is_zero(const FFElem& a) const {
  for (const auto& c : a.c)
    if (!c.is_zero()) return false;
  return true;
}

bool FiniteField::is_one(const FFElem& a) const { return a == one(); }

FFElem FiniteField::add(const FFElem& a, const FFElem& b) const {
  FFElem r = a;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = mod_p(r.c[i] + b.c[i]);
  return r;
}

FFElem FiniteField::sub(const FFElem& a, const FFElem& b) const {
  FFElem r = a;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = mod_p(r.c[i] - b.c[i]);
  return r;
}

FFElem FiniteField::neg(const FFElem& a) const {
  FFElem r = a;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = mod_p(-r.c[i]);
  return r;
}

FFElem FiniteField::mul(const FFElem& a, const FFElem& b) const {
  if (k_ == 1) return FFElem{{mod_p(a.c[0] * b.c[0])}};
  std::vector<Integer> prod(2 * k_ - 1, Integer(0));
  for (unsigned i = 0; i < k_; ++i) {
    if (a.c[i].is_zero()) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] += a.c[i] * b.c[j];
  }
  for (auto& c : prod) c = mod_p(c);
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    if (prod[i].is_zero()) continue;
    Integer c = prod[i];
    for (unsigned j = 0; j < k_; ++j) prod[i - k_ + j] = mod_p(prod[i - k_ + j] - c * def_[j]);
    prod[i] = 0;
  }
  prod.resize(k_);
  return FFElem{std::move(prod)};
}

FFElem FiniteField::inv(const FFElem& a) const {
  if (is_zero(a)) throw std::domain_error("FiniteField: inverse of zero");
  if (k_ == 1) return FFElem{{Integer::invmod(a.c[0], p_)}};
  PolFp ap(a.c.begin(), a.c.end());
  pol_trim(ap);
  auto [g, u] = pol_gcdext_mod(std::move(ap), def_, p_);
  // g is a nonzero constant since def_ is irreducible
  Integer ginv = Integer::invmod(g[0], p_);
  std::vector<Integer> r(k_, Integer(0));
  for (size_t i = 0; i < u.size(); ++i) r[i] = mod_p(u[i] * ginv);
  return FFElem{std::move(r)};
}

FFElem FiniteField::pow(const FFElem& a, const Integer& e) const {
  if (e.sign() < 0) return pow(inv(a), -e);
  FFElem r = one();
  FFElem base = a;
  size_t nbits = e.bits();
  for (size_t i = nbits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.raw(), i)) r = mul(r, base);
  }
  return r;
}

int FiniteField::quadratic_character(const FFElem& a) const {
  if (!p_.is_odd()) throw std::invalid_argument("quadratic_character: p = 2 rejected");
  if (is_zero(a)) return 0;
  Integer e = Integer::divexact(q_ - Integer(1), Integer(2));
  FFElem v = pow(a, e);
  if (is_one(v)) return 1;
  if (v == neg(one())) return -1;
  throw std::runtime_error("quadratic_character: a^((q-1)/2) not in {1,-1}");
}

std::optional<FFElem> FiniteField::sqrt(const FFElem& a) const {
  if (is_zero(a)) return zero();
  if (!p_.is_odd()) {
    // Squaring is bijective in characteristic 2: sqrt(a) = a^(q/2).
    return pow(a, Integer::divexact(q_, Integer(2)));
  }
  if (quadratic_character(a) == -1) return std::nullopt;

  Integer qm1 = q_ - Integer(1);
  unsigned long s = qm1.trailing_zero_bits();
  Integer m = qm1;
  mpz_fdiv_q_2exp(m.raw_mut(), m.raw(), s);

  FFElem r;
  if (s == 1) {
    // q = 3 (mod 4)
    r = pow(a, Integer::divexact(q_ + Integer(1), Integer(4)));
  } else {
    // deterministic nonresidue scan: constants first, then u, u+1, ...
    FFElem z = zero();
    bool found = false;
    for (Integer c = 2; c < p_; c += Integer(1)) {
      z = from_integer(c);
      if (quadratic_character(z) == -1) {
        found = true;
        break;
      }
    }
    if (!found) {
      FFElem base = gen();
      while (true) {
        if (quadratic_character(base) == -1) {
          z = base;
          found = true;
          break;
        }
        base = add(base, one());
      }
    }
    unsigned long M = s;
    FFElem cc = pow(z, m);
    FFElem tt = pow(a, m);
    r = pow(a, Integer::divexact(m + Integer(1), Integer(2)));
    while (!is_one(tt)) {
      FFElem t2 = tt;
      unsigned long i = 0;
      while (!is_one(t2)) {
        t2 = mul(t2, t2);
        ++i;
      }
      FFElem b = cc;
      for (unsigned long j = 0; j + i + 1 < M; ++j) b = mul(b, b);
      M = i;
      cc = mul(b, b);
      tt = mul(tt, cc);
      r = mul(r, b);
    }
  }
  FFElem nr = neg(r);
  return (nr < r) ? nr : r;
}

unsigned FiniteField::degree_over_prime(const FFElem& a) const {
  FFElem x = frobenius(a);
  unsigned d = 1;
  while (!(x == a)) {
    x = frobenius(x);
    ++d;
  }
  return d;
}

std::string FiniteField::str(const FFElem& a) const {
  if (k_ == 1) return a.c[0].str();
  if (is_zero(a)) return "0";
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < k_; ++i) {
    if (a.c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << a.c[i];
    } else {
      if (!a.c[i].is_one()) os << a.c[i] << "*";
      os << "u";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace k3v
