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

#include "k3v/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3v {

UniPoly UniPoly::constant(const Domain& d, Value v) {
  std::vector<Value> c;
  if (!d.is_zero(v)) c.push_back(std::move(v));
  return UniPoly(d, std::move(c));
}

UniPoly UniPoly::monomial(const Domain& d, Value c, unsigned e) {
  if (d.is_zero(c)) return UniPoly(d);
  std::vector<Value> v(e + 1, d.zero());
  v[e] = std::move(c);
  return UniPoly(d, std::move(v));
}

UniPoly UniPoly::from_integers(const Domain& d, const std::vector<long>& coeffs) {
  std::vector<Value> v;
  v.reserve(coeffs.size());
  for (long x : coeffs) v.push_back(d.from_integer(Integer(x)));
  return UniPoly(d, std::move(v));
}

const Value& UniPoly::lc() const {
  if (is_zero()) throw std::domain_error("UniPoly: leading coefficient of zero");
  return c_.back();
}

void UniPoly::check_same(const UniPoly& o) const {
  if (dom_ != o.dom_) throw std::invalid_argument("UniPoly: mixed coefficient domains");
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  a.check_same(b);
  std::vector<Value> c(std::max(a.c_.size(), b.c_.size()), a.dom_.zero());
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] = a.dom_.add(c[i], b.c_[i]);
  return UniPoly(a.dom_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  a.check_same(b);
  std::vector<Value> c(std::max(a.c_.size(), b.c_.size()), a.dom_.zero());
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] = a.dom_.sub(c[i], b.c_[i]);
  return UniPoly(a.dom_, std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.dom_);
  std::vector<Value> c(a.c_.size() + b.c_.size() - 1, a.dom_.zero());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.dom_.is_zero(a.c_[i])) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = a.dom_.add(c[i + j], a.dom_.mul(a.c_[i], b.c_[j]));
  }
  return UniPoly(a.dom_, std::move(c));
}

UniPoly UniPoly::operator-() const {
  std::vector<Value> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(dom_.neg(v));
  return UniPoly(dom_, std::move(c));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.dom_ != b.dom_ || a.c_.size() != b.c_.size()) return false;
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (!a.dom_.eq(a.c_[i], b.c_[i])) return false;
  return true;
}

UniPoly UniPoly::scaled(const Value& v) const {
  if (dom_.is_zero(v)) return UniPoly(dom_);
  std::vector<Value> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(dom_.mul(x, v));
  return UniPoly(dom_, std::move(c));
}

UniPoly UniPoly::derivative() const {
  if (deg() <= 0) return UniPoly(dom_);
  std::vector<Value> c;
  c.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    c.push_back(dom_.mul(c_[i], dom_.from_integer(Integer(static_cast<long>(i)))));
  return UniPoly(dom_, std::move(c));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  if (dom_.is_one(lc())) return *this;
  return scaled(dom_.inv(lc()));
}

Value UniPoly::eval(const Value& x) const {
  Value acc = dom_.zero();
  for (size_t i = c_.size(); i-- > 0;) acc = dom_.add(dom_.mul(acc, x), c_[i]);
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
  a.check_same(b);
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  const Domain& d = a.dom_;
  if (a.deg() < b.deg()) return {UniPoly(d), a};
  std::vector<Value> rem = a.c_;
  std::vector<Value> quo(a.deg() - b.deg() + 1, d.zero());
  Value lcinv = d.is_field() ? d.inv(b.lc()) : d.zero();
  for (int i = a.deg(); i >= b.deg(); --i) {
    if (d.is_zero(rem[i])) continue;
    Value q = d.is_field() ? d.mul(rem[i], lcinv) : d.div(rem[i], b.lc());
    quo[i - b.deg()] = q;
    for (int j = 0; j <= b.deg(); ++j)
      rem[i - b.deg() + j] = d.sub(rem[i - b.deg() + j], d.mul(q, b.c_[j]));
  }
  return {UniPoly(d, std::move(quo)), UniPoly(d, std::move(rem))};
}

UniPoly UniPoly::powmod(const Integer& e, const UniPoly& m) const {
  if (e.sign() < 0) throw std::invalid_argument("UniPoly::powmod: negative exponent");
  UniPoly r = UniPoly::one(dom_);
  UniPoly base = UniPoly::rem(*this, m);
  size_t nbits = e.bits();
  for (size_t i = nbits; i-- > 0;) {
    r = UniPoly::rem(r * r, m);
    if (mpz_tstbit(e.raw(), i)) r = UniPoly::rem(r * base, m);
  }
  return r;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (dom_.is_zero(c_[i])) continue;
    std::string cs = dom_.str(c_[i]);
    bool negative = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negative) {
        os << "-";
        cs = cs.substr(1);
      }
    } else {
      os << (negative ? " - " : " + ");
      if (negative) cs = cs.substr(1);
    }
    first = false;
    bool needs_parens = cs.find(' ') != std::string::npos;
    if (i == 0) {
      os << (needs_parens ? "(" + cs + ")" : cs);
    } else {
      if (cs != "1") os << (needs_parens ? "(" + cs + ")" : cs) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.dom() != b.dom()) throw std::invalid_argument("unipoly_gcd: mixed domains");
  if (!a.dom().is_field()) throw std::invalid_argument("unipoly_gcd: field domains only");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = UniPoly::rem(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return x.is_zero() ? x : x.monic();
}

namespace {

UniPoly exact_quot(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = UniPoly::divrem(a, b);
  if (!r.is_zero()) throw std::runtime_error("unipoly: division expected to be exact");
  return q;
}

// f monic, coefficients over F_{p^k}, every exponent divisible by p:
// returns the unique monic p-th root.
UniPoly pth_root(const UniPoly& f) {
  const Domain& d = f.dom();
  const auto& F = d.field();
  const Integer& p = F->p();
  unsigned long pl = p.to_ulong();
  // coefficient map a -> a^(p^(k-1)) inverts Frobenius
  Integer e = Integer::pow(p, F->k() - 1);
  std::vector<Value> out(static_cast<size_t>(f.deg() / static_cast<int>(pl)) + 1, d.zero());
  for (int i = 0; i <= f.deg(); ++i) {
    Value c = f.coeff(i);
    if (d.is_zero(c)) continue;
    if (i % static_cast<int>(pl) != 0)
      throw std::runtime_error("unipoly: not a p-th power");
    out[i / pl] = F->pow(std::get<FFElem>(c), e);
  }
  return UniPoly(d, std::move(out));
}

std::vector<std::pair<UniPoly, unsigned>> sff_finite(const UniPoly& f0) {
  const Domain& d = f0.dom();
  const Integer& p = d.field()->p();
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly f = f0.monic();
  UniPoly df = f.derivative();
  UniPoly c = unipoly_gcd(f, df);
  UniPoly w = exact_quot(f, c);
  unsigned i = 1;
  while (w.deg() > 0) {
    UniPoly y = unipoly_gcd(w, c);
    UniPoly z = exact_quot(w, y);
    if (z.deg() > 0) out.emplace_back(z, i);
    c = exact_quot(c, y);
    w = std::move(y);
    ++i;
  }
  if (c.deg() > 0) {
    unsigned long pl = p.to_ulong();
    for (auto& [g, m] : sff_finite(pth_root(c))) out.emplace_back(g, m * pl);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<std::pair<UniPoly, unsigned>> sff_char0(const UniPoly& f0) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly f = f0.monic();
  UniPoly df = f.derivative();
  UniPoly g = unipoly_gcd(f, df);
  if (g.deg() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  UniPoly w = exact_quot(f, g);
  UniPoly y = exact_quot(df, g);
  UniPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.deg() > 0) {
    UniPoly h = unipoly_gcd(w, z);
    if (h.deg() > 0) out.emplace_back(h, i);
    w = exact_quot(w, h);
    y = exact_quot(z, h);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

int unipoly_cmp(const UniPoly& a, const UniPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  for (int i = a.deg(); i >= 0; --i) {
    int c = a.dom().canonical_cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

UniPoly random_poly_below(const Domain& d, int n, Rng& rng) {
  const auto& F = d.field();
  std::vector<Value> c;
  c.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> coeffs;
    coeffs.reserve(F->k());
    for (unsigned j = 0; j < F->k(); ++j) coeffs.push_back(rng.below(F->p()));
    c.push_back(F->from_coeffs(std::move(coeffs)));
  }
  return UniPoly(d, std::move(c));
}

// f monic squarefree, all irreducible factors of degree d; splits completely.
void equal_degree_split(const UniPoly& f, int d, Rng& rng, int retry_cap,
                        std::vector<UniPoly>& out) {
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  const Domain& dom = f.dom();
  const auto& F = dom.field();
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    UniPoly a = random_poly_below(dom, f.deg(), rng);
    if (a.is_zero()) continue;
    UniPoly g = unipoly_gcd(a, f);
    if (g.deg() == 0) {
      if (F->p().is_odd()) {
        // a^((q^d - 1)/2) is +-1 mod every factor; the two signs split f
        Integer e = Integer::divexact(Integer::pow(F->q(), d) - Integer(1), Integer(2));
        UniPoly b = a.powmod(e, f) - UniPoly::one(dom);
        g = unipoly_gcd(b, f);
      } else {
        // characteristic 2: additive trace map T(a) = sum a^(2^j), j < d*k
        UniPoly t = a, cur = a;
        unsigned long steps = static_cast<unsigned long>(d) * F->k();
        for (unsigned long j = 1; j < steps; ++j) {
          cur = UniPoly::rem(cur * cur, f);
          t = t + cur;
        }
        g = unipoly_gcd(t, f);
      }
    }
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree_split(g, d, rng, retry_cap, out);
      equal_degree_split(exact_quot(f, g), d, rng, retry_cap, out);
      return;
    }
  }
  throw std::runtime_error("unipoly_factor: equal-degree splitting retry cap exceeded");
}

// distinct-degree factorization of monic squarefree f: (product, degree) pairs
std::vector<std::pair<UniPoly, int>> ddf(const UniPoly& f) {
  const Domain& dom = f.dom();
  const Integer& q = dom.field()->q();
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly star = f;
  UniPoly h = UniPoly::rem(UniPoly::monomial(dom, dom.one(), 1), star);  // t^(q^i) mod star
  int i = 1;
  while (star.deg() >= 2 * i) {
    h = h.powmod(q, star);
    UniPoly diff = h - UniPoly::monomial(dom, dom.one(), 1);
    UniPoly g = unipoly_gcd(diff, star);
    if (g.deg() > 0) {
      out.emplace_back(g, i);
      star = exact_quot(star, g);
      h = UniPoly::rem(h, star);
    }
    ++i;
  }
  if (star.deg() > 0) out.emplace_back(star, star.deg());
  return out;
}

}  // namespace

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  if (!f.dom().is_field())
    throw std::invalid_argument("squarefree_decomposition: field domains only");
  if (f.deg() == 0) return {};
  return f.dom().is_Q() ? sff_char0(f) : sff_finite(f);
}

UniFactorization unipoly_factor(const UniPoly& f, Rng& rng, int retry_cap) {
  if (f.is_zero()) throw std::invalid_argument("unipoly_factor: zero polynomial");
  if (!f.dom().is_Fq()) throw std::invalid_argument("unipoly_factor: finite fields only");
  UniFactorization res;
  res.lead = f.lc();
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    for (const auto& [h, d] : ddf(g)) {
      std::vector<UniPoly> irr;
      equal_degree_split(h, d, rng, retry_cap, irr);
      for (auto& u : irr) res.factors.emplace_back(std::move(u), mult);
    }
  }
  std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
    int c = unipoly_cmp(a.first, b.first);
    if (c != 0) return c < 0;
    return a.second < b.second;
  });
  return res;
}

std::optional<std::pair<Value, UniPoly>> unipoly_is_scaled_square(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("unipoly_is_scaled_square: zero polynomial");
  const Domain& d = f.dom();
  UniPoly root = UniPoly::one(d);
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    if (mult % 2 != 0) return std::nullopt;
    for (unsigned i = 0; i < mult / 2; ++i) root = root * g;
  }
  return std::make_pair(f.lc(), root);
}

UniPoly unipoly_coerce(const Domain& target, const UniPoly& f) {
  const Domain& from = f.dom();
  if (from == target) return f;
  std::vector<Value> c;
  c.reserve(f.coeffs().size());
  if (from.is_Fq()) {
    // lift a prime-field element through its integer representative
    if (from.field()->k() != 1 || !target.is_Fq() || !(target.field()->p() == from.field()->p()))
      throw std::invalid_argument("unipoly_coerce: unsupported coefficient map");
    for (const auto& v : f.coeffs())
      c.push_back(target.field()->from_integer(std::get<FFElem>(v).c[0]));
  } else {
    for (const auto& v : f.coeffs()) c.push_back(target.coerce(from, v));
  }
  return UniPoly(target, std::move(c));
}

}  // namespace k3v
