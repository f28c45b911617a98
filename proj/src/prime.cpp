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

#include "k3v/prime.hpp"

#include <algorithm>
#include <stdexcept>

#include "k3v/rng.hpp"

namespace k3v {

std::vector<uint32_t> primes_below(uint32_t bound) {
  std::vector<uint32_t> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(bound, false);
  for (uint32_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (uint64_t j = static_cast<uint64_t>(i) * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

bool miller_rabin_round(const Integer& n, const Integer& base) {
  // n - 1 = d * 2^s with d odd
  Integer nm1 = n - Integer(1);
  unsigned long s = nm1.trailing_zero_bits();
  Integer d = nm1;
  mpz_fdiv_q_2exp(d.raw_mut(), d.raw(), s);

  Integer x = Integer::powmod(base, d, n);
  if (x.is_one() || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = Integer::mod(x * x, n);
    if (x == nm1) return true;
    if (x.is_one()) return false;  // nontrivial square root of 1
  }
  return false;
}

bool is_prime(const Integer& n) {
  if (n < Integer(2)) throw std::invalid_argument("is_prime: n < 2");

  static const std::vector<uint32_t> kSmall = primes_below(1000);
  for (uint32_t p : kSmall) {
    Integer ip(static_cast<long>(p));
    if (n == ip) return true;
    if (n.divisible_by(ip)) return false;
  }
  // Here n > any prime < 1000 and coprime to all of them; in particular n is
  // odd. A composite with no prime factor below 1000 is at least 1009^2.
  if (n < Integer(1009L * 1009L)) return true;

  if (!miller_rabin_round(n, Integer(2))) return false;

  Rng rng(kDefaultSeed);
  Integer span = n - Integer(4);  // bases drawn uniformly from [2, n-2]
  for (int round = 0; round < 40; ++round) {
    Integer base = rng.below(span) + Integer(2);
    if (!miller_rabin_round(n, base)) return false;
  }
  return true;
}

std::optional<Integer> pollard_rho(const Integer& n, uint64_t max_iters, uint64_t seed) {
  if (n < Integer(4)) throw std::invalid_argument("pollard_rho: n < 4");
  if (n.divisible_by(Integer(2))) return Integer(2);

  Rng rng(seed);
  uint64_t used = 0;
  constexpr uint64_t kBatch = 128;  // gcds amortized over this many steps
  while (used < max_iters) {
    Integer c = rng.below(n - Integer(3)) + Integer(1);
    Integer y = rng.below(n);
    auto step = [&](Integer& v) { v = Integer::mod(v * v + c, n); };

    Integer x, ys, q(1), g(1);
    for (uint64_t r = 1; g.is_one() && used < max_iters; r *= 2) {
      x = y;
      for (uint64_t i = 0; i < r && used < max_iters; ++i, ++used) step(y);
      for (uint64_t k = 0; k < r && g.is_one() && used < max_iters; k += kBatch) {
        ys = y;
        uint64_t lim = std::min(kBatch, r - k);
        for (uint64_t i = 0; i < lim && used < max_iters; ++i, ++used) {
          step(y);
          q = Integer::mod(q * (x - y), n);
        }
        g = Integer::gcd(q, n);
      }
    }
    if (g == n) {
      // the batch jumped past the factor; replay one step at a time
      do {
        step(ys);
        g = Integer::gcd(x - ys, n);
      } while (g.is_one());
    }
    if (!g.is_one() && g != n) return Integer::abs(g);
    // cycle collapsed without a split: retry with a fresh constant
  }
  return std::nullopt;
}

namespace {

/// x-only Montgomery point (X : Z) modulo the number being factored.
struct MPoint {
  Integer X, Z;
};

struct MCurve {
  Integer n;
  Integer a24;  // (A + 2)/4

  Integer mul(const Integer& a, const Integer& b) const { return Integer::mod(a * b, n); }

  MPoint dbl(const MPoint& p) const {
    Integer s = Integer::mod(p.X + p.Z, n), d = Integer::mod(p.X - p.Z, n);
    Integer s2 = mul(s, s), d2 = mul(d, d);
    Integer t = Integer::mod(s2 - d2, n);
    return {mul(s2, d2), mul(t, Integer::mod(d2 + mul(a24, t), n))};
  }

  /// p + q given their difference p - q.
  MPoint add(const MPoint& p, const MPoint& q, const MPoint& diff) const {
    Integer u = mul(Integer::mod(p.X - p.Z, n), Integer::mod(q.X + q.Z, n));
    Integer v = mul(Integer::mod(p.X + p.Z, n), Integer::mod(q.X - q.Z, n));
    Integer s = Integer::mod(u + v, n), d = Integer::mod(u - v, n);
    return {mul(diff.Z, mul(s, s)), mul(diff.X, mul(d, d))};
  }

  MPoint ladder(const Integer& k, const MPoint& p) const {
    MPoint r0 = p, r1 = dbl(p);
    for (size_t i = k.bits() - 1; i-- > 0;) {
      if (k.bit(i)) {
        r0 = add(r1, r0, p);
        r1 = dbl(r1);
      } else {
        r1 = add(r0, r1, p);
        r0 = dbl(r0);
      }
    }
    return r0;
  }
};

/// The maximal power of p not exceeding b1.
Integer prime_power_below(uint32_t p, uint64_t b1) {
  uint64_t pe = p;
  while (pe <= b1 / p) pe *= p;
  return Integer(static_cast<long>(pe));
}

}  // namespace

std::optional<Integer> ecm_factor(const Integer& n, unsigned curves, uint64_t b1,
                                  uint64_t b2, uint64_t seed) {
  if (n < Integer(4)) throw std::invalid_argument("ecm_factor: n < 4");
  for (long q : {2L, 3L})
    if (n.divisible_by(Integer(q))) return Integer(q);
  if (n < Integer(8)) return std::nullopt;  // 5 and 7: prime, nothing to find

  // One sieve serves both stages: entries <= b1 drive stage 1.
  const std::vector<uint32_t> all_primes = primes_below(static_cast<uint32_t>(b2) + 1);
  size_t n1 = 0;
  while (n1 < all_primes.size() && all_primes[n1] <= b1) ++n1;
  Rng rng(seed);

  for (unsigned curve = 0; curve < curves; ++curve) {
    // Suyama: sigma -> a curve with known 12-torsion and a starting point
    Integer sigma = rng.below(n - Integer(6)) + Integer(6);
    Integer u = Integer::mod(sigma * sigma - Integer(5), n);
    Integer v = Integer::mod(Integer(4) * sigma, n);
    Integer x0 = Integer::mod(u * u * u, n);
    Integer z0 = Integer::mod(v * v * v, n);
    Integer den = Integer::mod(Integer(16) * x0 * v, n);
    Integer s, t;
    Integer g = Integer::gcdext(den, n, s, t);
    if (!g.is_one()) {
      if (g != n) return g;
      continue;  // degenerate parameters; next curve
    }
    Integer vu = Integer::mod(v - u, n);
    Integer a24 = Integer::mod(vu * vu * vu * (Integer(3) * u + v), n);
    a24 = Integer::mod(a24 * s, n);
    MCurve E{n, a24};

    // Stage 1, prime by prime with a gcd check per batch. When two factors
    // die inside the same batch the gcd jumps straight to n; replaying the
    // batch from a snapshot one prime at a time isolates the earlier death.
    // (With one big ladder a balanced semiprime would almost always be lost
    // this way: both orders tend to be b1-smooth.)
    constexpr size_t kStage1Batch = 128;
    MPoint Q{x0, z0};
    std::optional<Integer> found;
    bool curve_dead = false;
    for (size_t i = 0; i < n1 && !found && !curve_dead;) {
      const size_t end = std::min(i + kStage1Batch, n1);
      const MPoint snap = Q;
      for (size_t j = i; j < end; ++j)
        Q = E.ladder(prime_power_below(all_primes[j], b1), Q);
      Integer gb = Integer::gcd(Q.Z, n);
      if (gb.is_one()) {
        i = end;
        continue;
      }
      if (gb != n) {
        found = gb;
        break;
      }
      Q = snap;
      for (size_t j = i; j < end; ++j) {
        Q = E.ladder(prime_power_below(all_primes[j], b1), Q);
        Integer gp = Integer::gcd(Q.Z, n);
        if (gp.is_one()) continue;
        if (gp != n) found = gp;
        break;
      }
      curve_dead = !found;  // simultaneous death at a single prime: give up
    }
    if (found) return found;
    if (curve_dead) continue;

    // Stage 2, standard continuation: for each prime q in (b1, b2], write
    // q = m*D +- r and accumulate the cross product that vanishes exactly
    // when q kills the point modulo a factor.
    constexpr uint64_t D = 2310;  // primes q = m*D +- r, r odd, r <= D/2
    std::vector<MPoint> table(D / 4 + 2);
    {
      MPoint Q2 = E.dbl(Q);
      MPoint rm2 = Q;               // 1*Q
      MPoint cur = E.add(Q2, Q, Q);  // 3*Q
      table[0] = Q;
      for (uint64_t r = 3; r <= D / 2; r += 2) {
        table[r / 2] = cur;
        MPoint next = E.add(cur, Q2, rm2);  // (r+2)Q = rQ + 2Q, diff (r-2)Q
        rm2 = cur;
        cur = next;
      }
    }
    auto rQ = [&](uint64_t r) -> const MPoint& { return table[r / 2]; };

    size_t pi = n1;
    if (pi == all_primes.size()) continue;
    uint64_t m = (all_primes[pi] + D / 2) / D;
    if (m == 0) m = 1;
    MPoint QD = E.ladder(Integer(static_cast<long>(D)), Q);
    MPoint Gm = E.ladder(Integer(static_cast<long>(m * D)), Q);
    MPoint Gm1 = E.ladder(Integer(static_cast<long>((m + 1) * D)), Q);

    // One prime per step: q = m*D -+ r, and X_G * Z_r - X_r * Z_G vanishes
    // modulo a factor exactly when G = -+ r*Q there, i.e. when q divides the
    // point's order modulo that factor.
    Integer acc(1);
    auto step = [&](uint64_t q) {
      while (q > m * D + D / 2) {
        MPoint next = E.add(Gm1, QD, Gm);
        Gm = Gm1;
        Gm1 = next;
        ++m;
      }
      uint64_t r = q > m * D ? q - m * D : m * D - q;
      const MPoint& R = rQ(r);
      acc = E.mul(acc, Integer::mod(E.mul(Gm.X, R.Z) - E.mul(R.X, Gm.Z), n));
    };

    // Same batch-then-replay scheme as stage 1: the accumulator only ever
    // gains factors, so a proper gcd at a batch boundary is final, and a
    // jump to n means two factors entered within one batch.
    constexpr size_t kStage2Batch = 256;
    while (pi < all_primes.size() && !found) {
      const size_t end = std::min(pi + kStage2Batch, all_primes.size());
      const Integer acc_snap = acc;
      const MPoint gm_snap = Gm, gm1_snap = Gm1;
      const uint64_t m_snap = m;
      const size_t pi_snap = pi;
      for (; pi < end; ++pi) step(all_primes[pi]);
      Integer gb = Integer::gcd(acc, n);
      if (gb.is_one()) continue;
      if (gb != n) {
        found = gb;
        break;
      }
      acc = acc_snap;
      Gm = gm_snap;
      Gm1 = gm1_snap;
      m = m_snap;
      for (pi = pi_snap; pi < end; ++pi) {
        step(all_primes[pi]);
        Integer gp = Integer::gcd(acc, n);
        if (gp.is_one()) continue;
        if (gp != n) found = gp;
        break;
      }
      break;  // found a factor, or both died at one prime: next curve
    }
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace k3v
