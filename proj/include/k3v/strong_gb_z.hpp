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

#include "k3v/groebner.hpp"
#include "k3v/mpoly.hpp"

namespace k3v {

struct StrongGbResult {
  GbStatus status = GbStatus::Ok;
  /// Strong basis over Z: positive leading coefficients, tails in symmetric-
  /// remainder normal form, sorted descending by leading monomial. Every
  /// leading term of the ideal is divisible — coefficient included — by some
  /// element's leading term, which is what makes the basis reduce correctly
  /// modulo every prime. Partial when status is Budget.
  std::vector<MPoly> basis;
  GbStats stats;
};

/// Buchberger over Z with S- and gcd-polynomials and symmetric-remainder
/// reduction. The closing certificate checks both polynomial families reduce
/// to zero against the final basis (std::logic_error otherwise).
StrongGbResult strong_gb_Z(const Ideal& I, const MonomialOrder& order,
                           const GbConfig& cfg = {});

/// Symmetric-remainder normal form against a strong basis over Z; a zero
/// result is an ideal-membership proof.
MPoly normal_form_Z(const MPoly& f, const std::vector<MPoly>& basis);

}  // namespace k3v
