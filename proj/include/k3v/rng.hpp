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
#include <random>

#include "k3v/integer.hpp"

namespace k3v {

/// Deterministic PRNG. mt19937_64 output is pinned bit-for-bit by the C++
/// standard; the range reductions below avoid std::uniform_int_distribution,
/// whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed), seed_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, n), n > 0. Rejection sampling, no modulo bias.
  uint64_t below(uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform Integer in [0, n), n > 0.
  Integer below(const Integer& n) {
    size_t nbits = n.bits();
    size_t words = (nbits + 63) / 64;
    while (true) {
      Integer v = 0;
      for (size_t i = 0; i < words; ++i) {
        Integer w(static_cast<long>(0));
        mpz_set_ui(w.raw_mut(), eng_());
        mpz_mul_2exp(v.raw_mut(), v.raw(), 64);
        v += w;
      }
      // Trim to nbits so the acceptance probability stays >= 1/2.
      mpz_fdiv_r_2exp(v.raw_mut(), v.raw(), nbits);
      if (v < n) return v;
    }
  }

 private:
  std::mt19937_64 eng_;
  uint64_t seed_;
};

/// Default seed used wherever a caller does not supply one; recorded in
/// reports so runs can be reproduced.
inline constexpr uint64_t kDefaultSeed = 0x6b33766572696679ULL;  // "k3verify"

}  // namespace k3v
