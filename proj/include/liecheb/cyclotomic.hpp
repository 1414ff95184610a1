/*
   Copyright 2026 The liecheb authors

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

#ifndef LIECHEB_CYCLOTOMIC_HPP
#define LIECHEB_CYCLOTOMIC_HPP

#include <vector>

#include "liecheb/factorization.hpp"
#include "liecheb/poly.hpp"

namespace liecheb {

/// n-th cyclotomic polynomial, computed recursively as
/// (x^n - 1) / prod of Phi_d over proper divisors d of n.
/// Cached internally; the cache is invisible to callers.
IntPoly phi(int n);

/// Minimal polynomial of 2cos(2pi/n): psi_1 = x-2, psi_2 = x+2,
/// otherwise reciprocal_descend(phi(n)).
IntPoly psi(int n);

/// Factorization of Phi_j(x^2): {Phi_2j} if j even, {Phi_j, Phi_2j} if odd.
Factorization phi_of_square(int j);

/// x^n + 1 = prod of Phi_{2md} over d | N, with n = 2^a N (N odd), m = 2^a.
Factorization factor_xn_plus_1(int n);

/// scalar * prod factor^multiplicity, expanded exactly. Throws
/// NonIntegralResult if the scalar denominator does not divide out.
IntPoly expand(const Factorization& f);

std::vector<int> divisors(int n);
int euler_phi(int n);

}  // namespace liecheb

#endif
