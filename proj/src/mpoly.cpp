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

#include "k3v/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace k3v {

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder MonomialOrder::block(uint16_t elim_mask, Kind first, Kind second) {
  if (elim_mask == 0) throw std::invalid_argument("MonomialOrder::block: empty block");
  if (first == Kind::Block || second == Kind::Block)
    throw std::invalid_argument("MonomialOrder::block: nested blocks unsupported");
  MonomialOrder o(Kind::Block);
  o.mask_ = elim_mask;
  o.first_ = first;
  o.second_ = second;
  return o;
}

int MonomialOrder::cmp_masked(Kind k, const Mono& a, const Mono& b, uint16_t mask) {
  if (k == Kind::Lex) {
    for (unsigned i = 0; i < kMaxVars; ++i) {
      if (!(mask & (1u << i))) continue;
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
  }
  // grevlex: total degree first, ties broken by the rightmost differing
  // exponent, smaller exponent winning.
  uint32_t da = 0, db = 0;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    if (!(mask & (1u << i))) continue;
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (unsigned i = kMaxVars; i-- > 0;) {
    if (!(mask & (1u << i))) continue;
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::cmp(const Mono& a, const Mono& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (unsigned i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    case Kind::Grevlex: {
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      for (unsigned i = kMaxVars; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    }
    default: {
      int c = cmp_masked(first_, a, b, mask_);
      if (c != 0) return c;
      return cmp_masked(second_, a, b, static_cast<uint16_t>(~mask_));
    }
  }
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    default: {
      std::ostringstream os;
      os << "block(";
      bool first = true;
      for (unsigned i = 0; i < kMaxVars; ++i) {
        if (!(mask_ & (1u << i))) continue;
        if (!first) os << ",";
        os << i;
        first = false;
      }
      os << ";" << (first_ == Kind::Lex ? "lex" : "grevlex") << ","
         << (second_ == Kind::Lex ? "lex" : "grevlex") << ")";
      return os.str();
    }
  }
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "lex") return lex();
  if (text == "grevlex") return grevlex();
  throw std::invalid_argument("MonomialOrder::parse: unknown order '" + text + "'");
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ptr Ring::make(std::vector<std::string> vars, Domain dom, MonomialOrder order) {
  if (vars.empty() || vars.size() > kMaxVars)
    throw std::invalid_argument("Ring: variable count must be in 1.." +
                                std::to_string(kMaxVars));
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw std::invalid_argument("Ring: duplicate variable '" + vars[i] + "'");
  return Ptr(new Ring(std::move(vars), std::move(dom), order));
}

std::optional<unsigned> Ring::index_of(const std::string& name) const {
  for (unsigned i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(Ring::Ptr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), t_(std::move(terms)) {
  normalize();
}

void MPoly::normalize() {
  const MonomialOrder& ord = ring_->order();
  std::sort(t_.begin(), t_.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(t_.size());
  const Domain& d = ring_->dom();
  for (auto& term : t_) {
    if (!out.empty() && out.back().m == term.m) {
      out.back().c = d.add(out.back().c, term.c);
      if (d.is_zero(out.back().c)) out.pop_back();
    } else if (!d.is_zero(term.c)) {
      out.push_back(std::move(term));
    }
  }
  t_ = std::move(out);
  max_deg_ = 0;
  for (const auto& term : t_) max_deg_ = std::max(max_deg_, term.m.deg);
}

MPoly MPoly::constant(const Ring::Ptr& r, Value c) {
  MPoly f(r);
  if (!r->dom().is_zero(c)) f.t_.push_back({Mono::one(), std::move(c)});
  return f;
}

MPoly MPoly::variable(const Ring::Ptr& r, unsigned i) {
  if (i >= r->nvars()) throw std::invalid_argument("MPoly::variable: index out of range");
  MPoly f(r);
  f.t_.push_back({Mono::var(i), r->dom().one()});
  f.max_deg_ = 1;
  return f;
}

MPoly MPoly::monomial(const Ring::Ptr& r, Mono m, Value c) {
  MPoly f(r);
  if (!r->dom().is_zero(c)) {
    f.max_deg_ = m.deg;
    f.t_.push_back({m, std::move(c)});
  }
  return f;
}

const Term& MPoly::lt() const {
  if (t_.empty()) throw std::domain_error("MPoly: leading term of zero");
  return t_.front();
}

bool MPoly::is_homogeneous() const {
  for (const auto& term : t_)
    if (term.m.deg != max_deg_) return false;
  return true;
}

int MPoly::degree_in(unsigned var) const {
  int d = t_.empty() ? -1 : 0;
  for (const auto& term : t_) d = std::max(d, static_cast<int>(term.m.e[var]));
  return d;
}

namespace {

void check_rings(const MPoly& a, const MPoly& b) {
  if (!(*a.ring() == *b.ring()))
    throw std::invalid_argument("MPoly: operands live in different rings");
}

}  // namespace

MPoly operator+(const MPoly& a, const MPoly& b) {
  check_rings(a, b);
  const Domain& d = a.dom();
  const MonomialOrder& ord = a.ring()->order();
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  size_t i = 0, j = 0;
  while (i < a.terms().size() && j < b.terms().size()) {
    int c = ord.cmp(a.terms()[i].m, b.terms()[j].m);
    if (c > 0) {
      out.push_back(a.terms()[i++]);
    } else if (c < 0) {
      out.push_back(b.terms()[j++]);
    } else {
      Value s = d.add(a.terms()[i].c, b.terms()[j].c);
      if (!d.is_zero(s)) out.push_back({a.terms()[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms().size(); ++i) out.push_back(a.terms()[i]);
  for (; j < b.terms().size(); ++j) out.push_back(b.terms()[j]);
  MPoly r(a.ring());
  r.t_ = std::move(out);
  for (const auto& term : r.t_) r.max_deg_ = std::max(r.max_deg_, term.m.deg);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly MPoly::operator-() const {
  MPoly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& term : t_) r.t_.push_back({term.m, dom().neg(term.c)});
  r.max_deg_ = max_deg_;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_rings(a, b);
  const Domain& d = a.dom();
  std::vector<Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) out.push_back({ta.m * tb.m, d.mul(ta.c, tb.c)});
  return MPoly(a.ring(), std::move(out));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (!(*a.ring() == *b.ring()) || a.t_.size() != b.t_.size()) return false;
  const Domain& d = a.dom();
  for (size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].m != b.t_[i].m || !d.eq(a.t_[i].c, b.t_[i].c)) return false;
  return true;
}

MPoly MPoly::scaled(const Value& v) const {
  if (dom().is_zero(v)) return MPoly(ring_);
  MPoly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& term : t_) r.t_.push_back({term.m, dom().mul(term.c, v)});
  r.max_deg_ = max_deg_;
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero() || dom().is_one(lc())) return *this;
  return scaled(dom().inv(lc()));
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = MPoly::one(ring_);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

MPoly MPoly::mul_term(const Mono& m, const Value& c) const {
  if (dom().is_zero(c)) return MPoly(ring_);
  MPoly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& term : t_) r.t_.push_back({term.m * m, dom().mul(term.c, c)});
  r.max_deg_ = max_deg_ + m.deg;
  return r;
}

MPoly MPoly::partial(unsigned i) const {
  if (i >= ring_->nvars()) throw std::invalid_argument("MPoly::partial: index out of range");
  std::vector<Term> out;
  for (const auto& term : t_) {
    if (term.m.e[i] == 0) continue;
    Mono m = term.m;
    Value c = dom().mul(term.c, dom().from_integer(Integer(static_cast<long>(m.e[i]))));
    m.e[i] -= 1;
    m.deg -= 1;
    out.push_back({m, std::move(c)});
  }
  return MPoly(ring_, std::move(out));
}

std::vector<MPoly> MPoly::partials() const {
  std::vector<MPoly> out;
  out.reserve(ring_->nvars());
  for (unsigned i = 0; i < ring_->nvars(); ++i) out.push_back(partial(i));
  return out;
}

Value MPoly::eval(const std::vector<Value>& xs) const {
  if (xs.size() != ring_->nvars())
    throw std::invalid_argument("MPoly::eval: wrong number of values");
  const Domain& d = dom();
  // per-variable power tables up to the max exponent present
  std::array<std::vector<Value>, kMaxVars> pows;
  for (unsigned i = 0; i < ring_->nvars(); ++i) {
    int maxe = degree_in(i);
    pows[i].push_back(d.one());
    for (int e = 1; e <= maxe; ++e) pows[i].push_back(d.mul(pows[i].back(), xs[i]));
  }
  Value acc = d.zero();
  for (const auto& term : t_) {
    Value v = term.c;
    for (unsigned i = 0; i < ring_->nvars(); ++i)
      if (term.m.e[i] != 0) v = d.mul(v, pows[i][term.m.e[i]]);
    acc = d.add(acc, v);
  }
  return acc;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& images) const {
  if (images.empty()) throw std::invalid_argument("MPoly::substitute: no images");
  const Ring::Ptr& target = images.begin()->second.ring();
  for (const auto& [name, g] : images)
    if (!(*g.ring() == *target))
      throw std::invalid_argument("MPoly::substitute: images live in different rings");

  // map each source variable index to its image, requiring full coverage of
  // the variables actually present
  std::array<const MPoly*, kMaxVars> img{};
  for (unsigned i = 0; i < ring_->nvars(); ++i) {
    auto it = images.find(ring_->var(i));
    if (it != images.end()) {
      img[i] = &it->second;
    } else if (degree_in(i) > 0) {
      throw std::invalid_argument("MPoly::substitute: variable '" + ring_->var(i) +
                                  "' has no image");
    }
  }

  const Domain& td = target->dom();
  // power tables over the target ring
  std::array<std::vector<MPoly>, kMaxVars> pows;
  for (unsigned i = 0; i < ring_->nvars(); ++i) {
    if (!img[i]) continue;
    int maxe = degree_in(i);
    pows[i].push_back(MPoly::one(target));
    for (int e = 1; e <= maxe; ++e) pows[i].push_back(pows[i].back() * *img[i]);
  }

  MPoly acc(target);
  for (const auto& term : t_) {
    MPoly v = MPoly::constant(target, td.coerce(dom(), term.c));
    for (unsigned i = 0; i < ring_->nvars(); ++i)
      if (term.m.e[i] != 0) v = v * pows[i][term.m.e[i]];
    acc = acc + v;
  }
  return acc;
}

MPoly MPoly::with_order(const MonomialOrder& order) const {
  if (order == ring_->order()) return *this;
  Ring::Ptr r = Ring::make(ring_->vars(), dom(), order);
  return MPoly(r, t_);
}

MPoly MPoly::coerced(const Ring::Ptr& target) const {
  if (target->vars() != ring_->vars())
    throw std::invalid_argument("MPoly::coerced: variable names differ");
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& term : t_)
    out.push_back({term.m, target->dom().coerce(dom(), term.c)});
  return MPoly(target, std::move(out));
}

Value MPoly::content() const {
  const Domain& d = dom();
  if (d.is_Z()) {
    Integer g(0);
    for (const auto& term : t_) g = Integer::gcd(g, std::get<Integer>(term.c));
    return g;
  }
  if (d.is_Q()) {
    // gcd of numerators over lcm of denominators
    Integer num(0), den(1);
    for (const auto& term : t_) {
      const Rational& r = std::get<Rational>(term.c);
      num = Integer::gcd(num, r.num());
      den = Integer::lcm(den, r.den());
    }
    if (num.is_zero()) return Rational(0);
    return Rational(Integer::abs(num), den);
  }
  throw std::domain_error("MPoly::content: Z or Q coefficients only");
}

MPoly MPoly::primitive_part() const {
  if (is_zero()) return *this;
  Value c = content();
  const Domain& d = dom();
  std::vector<Term> out;
  out.reserve(t_.size());
  bool flip = d.is_Z() ? std::get<Integer>(lc()).sign() < 0
                       : std::get<Rational>(lc()).sign() < 0;
  for (const auto& term : t_) {
    Value v = d.is_Z() ? Value(Integer::divexact(std::get<Integer>(term.c),
                                                 std::get<Integer>(c)))
                       : Value(std::get<Rational>(term.c) / std::get<Rational>(c));
    if (flip) v = d.neg(v);
    out.push_back({term.m, std::move(v)});
  }
  return MPoly(ring_, std::move(out));
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  const Domain& d = dom();
  std::ostringstream os;
  bool first = true;
  for (const auto& term : t_) {
    // pull a printable sign out of Z/Q coefficients so output re-parses
    std::string cs = d.str(term.c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = cs == "1";
    if (term.m.deg == 0) {
      os << cs;
      continue;
    }
    bool printed = false;
    if (!unit) {
      os << cs;
      printed = true;
    }
    for (unsigned i = 0; i < ring_->nvars(); ++i) {
      if (term.m.e[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->var(i);
      if (term.m.e[i] > 1) os << "^" << term.m.e[i];
      printed = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(size_t at, const std::string& what) {
    throw std::invalid_argument("parse error at offset " + std::to_string(at) + ": " + what);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
  Integer number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return Integer(s.substr(start, pos - start));
  }
};

struct PolyParser {
  Lexer lx;
  const Ring::Ptr& ring;

  MPoly parse() {
    MPoly r = expr();
    if (!lx.eof()) lx.fail(lx.pos, "unexpected trailing input");
    return r;
  }

  MPoly expr() {
    bool neg = false;
    if (lx.peek() == '-') {
      ++lx.pos;
      neg = true;
    } else if (lx.peek() == '+') {
      ++lx.pos;
    }
    MPoly acc = term();
    if (neg) acc = -acc;
    while (true) {
      char c = lx.peek();
      if (c == '+' || c == '-') {
        ++lx.pos;
        MPoly t = term();
        acc = (c == '+') ? acc + t : acc - t;
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    while (lx.peek() == '*') {
      ++lx.pos;
      acc = acc * factor();
    }
    return acc;
  }

  MPoly factor() {
    MPoly base = atom();
    if (lx.peek() == '^') {
      ++lx.pos;
      size_t at = lx.pos;
      if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail(at, "expected exponent");
      Integer e = lx.number();
      if (e > Integer(10000)) lx.fail(at, "exponent too large");
      return base.pow(static_cast<unsigned>(e.to_ulong()));
    }
    return base;
  }

  MPoly atom() {
    char c = lx.peek();
    size_t at = lx.pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = lx.number();
      Integer den(1);
      if (lx.peek() == '/') {
        ++lx.pos;
        size_t dat = lx.pos;
        if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
          lx.fail(dat, "expected denominator");
        den = lx.number();
        if (den.is_zero()) lx.fail(dat, "zero denominator");
      }
      try {
        return MPoly::constant(ring, ring->dom().from_rational(Rational(num, den)));
      } catch (const std::invalid_argument& e) {
        lx.fail(at, e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lx.ident();
      auto idx = ring->index_of(name);
      if (!idx) lx.fail(at, "unknown variable '" + name + "'");
      return MPoly::variable(ring, *idx);
    }
    lx.fail(at, "expected term");
  }
};

}  // namespace

MPoly parse_poly(const std::string& text, const Ring::Ptr& ring) {
  PolyParser p{Lexer{text, 0}, ring};
  return p.parse();
}

Ideal Ideal::of(Ring::Ptr ring, std::vector<MPoly> gens) {
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("Ideal: zero generator");
    if (!(*g.ring() == *ring)) throw std::invalid_argument("Ideal: generator in wrong ring");
  }
  return Ideal{std::move(ring), std::move(gens)};
}

}  // namespace k3v
