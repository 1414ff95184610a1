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

#ifndef LIECHEB_CHEBYSHEV_HPP
#define LIECHEB_CHEBYSHEV_HPP

#include "liecheb/factorization.hpp"
#include "liecheb/poly.hpp"

namespace liecheb {

enum class ChebKind { First, Second };

/// T_n / U_n by the shared recurrence p_{k+1} = 2x p_k - p_{k-1}.
IntPoly cheb(ChebKind kind, int n);

/// Same polynomials from the binomial/factorial coefficient formulas,
/// computed with exact integer arithmetic. n >= 1.
IntPoly cheb_closed_form(ChebKind kind, int n);

/// U_n = prod of psi_j(2x) over j | 2n+2, j != 1, 2. Factors are psi
/// indices; the "(2x)" substitution happens at expansion time.
Factorization factor_U(int n);

/// T_n = (1/2) prod of psi_{rj}(2x) over j | N, where n = 2^a N with N
/// odd and r = 2^(a+2).
Factorization factor_T(int n);

/// scalar * prod factor(2x)^multiplicity -- the expansion rule for the
/// two Chebyshev factorizations above.
IntPoly expand_chebyshev_factorization(const Factorization& f);

}  // namespace liecheb

#endif
