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

#include <cstdint>
#include <optional>
#include <vector>

#include "k3v/integer.hpp"
#include "k3v/rng.hpp"

namespace k3v {

/// All primes < bound, ascending (sieve of Eratosthenes).
std::vector<uint32_t> primes_below(uint32_t bound);

/// Probabilistic primality test: trial division by primes < 1000, a base-2
/// strong probable-prime test, then 40 Miller-Rabin rounds with seeded random
/// bases. "true" means probable prime with error < 4^-40; composites are
/// certain. Throws std::invalid_argument for n < 2.
bool is_prime(const Integer& n);

/// Strong probable-prime test to a single base (n odd, n > 2, 1 < base < n-1).
bool miller_rabin_round(const Integer& n, const Integer& base);

/// Pollard's rho with Brent's cycle detection and batched gcds: a nontrivial
/// factor of the composite n, or nullopt once the iteration budget is spent.
/// Finding a prime factor around p costs on the order of sqrt(p) iterations,
/// so the default budget reliably splits factors up to ~14 digits; use
/// ecm_factor beyond that. The sequence of random starting points is
/// deterministic in `seed`. Throws std::invalid_argument for n < 4; the
/// caller is expected to have ruled out primes (the budget is simply wasted
/// on them).
std::optional<Integer> pollard_rho(const Integer& n,
                                   uint64_t max_iters = 16'000'000,
                                   uint64_t seed = kDefaultSeed);

/// Lenstra's elliptic-curve method on Montgomery curves with a Suyama
/// parametrization, stage 1 to b1 and a standard stage-2 continuation to b2:
/// a nontrivial factor of n, or nullopt once `curves` curves are exhausted.
/// The curve sequence is deterministic in `seed`. The defaults are tuned for
/// factors of roughly 20-25 digits (rho is the cheaper choice below that);
/// batched gcd checks with prime-at-a-time replay keep balanced semiprimes
/// splittable even when both factors die on the same curve.
/// Factors of 2 and 3 are returned directly; otherwise n must be composite.
/// Throws std::invalid_argument for n < 4.
std::optional<Integer> ecm_factor(const Integer& n, unsigned curves = 200,
                                  uint64_t b1 = 250'000,
                                  uint64_t b2 = 20'000'000,
                                  uint64_t seed = kDefaultSeed);

}  // namespace k3v
