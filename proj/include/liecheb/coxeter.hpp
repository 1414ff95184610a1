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

#ifndef LIECHEB_COXETER_HPP
#define LIECHEB_COXETER_HPP

#include <optional>
#include <vector>

#include "liecheb/cartan.hpp"
#include "liecheb/factorization.hpp"

namespace liecheb {

/// Simple reflections sigma_i(e_j) = e_j - c_ij e_i built from Cartan
/// integers, so all arithmetic stays exact. Each sigma_i is an involution.
std::vector<IntMatrix> simple_reflections(const CartanBundle& bundle);

/// Product sigma_{order[0]} sigma_{order[1]} ... with 1-based node indices;
/// order must be a permutation of 1..n.
IntMatrix coxeter_element(const CartanBundle& bundle, const std::vector<int>& order);

/// Coxeter element in the default ordering sigma_1 sigma_2 ... sigma_n.
IntMatrix coxeter_element(const CartanBundle& bundle);

/// Smallest k >= 1 with m^k = I, or nullopt if none up to the cap.
std::optional<long long> coxeter_order(const IntMatrix& m, long long cap);

/// char_poly of the default Coxeter element. Finite and generalized
/// diagrams; ordering-independent on trees.
IntPoly coxeter_polynomial(DiagramType t);

/// Cyclotomic factorization of the Coxeter polynomial. Simple types use
/// the per-family index formulas; spherical/affine generalized diagrams
/// fall back to exact trial division; hyperbolic ones are rejected since
/// the polynomial is no longer a product of cyclotomics.
Factorization coxeter_factorization(DiagramType t);

/// Q(x) = x^n a(x + 1/x) = reciprocal_ascend(a_poly). Even and reciprocal,
/// with even_part_descend(Q) equal to the Coxeter polynomial.
IntPoly associated_Q(DiagramType t);

/// Phi-index factorization of Q per family: A_n over j | 2n+2 (j != 1,2);
/// B_n over Phi_{rd}, d | N odd, r = 2^(a+2); D_n as Phi_4 times the
/// shifted B-set for n-1; E/F/G literal index sets.
Factorization Q_factorization(DiagramType t);

/// psi-index factorization of a_poly, mirroring Q_factorization
/// index-for-index.
Factorization a_factorization(DiagramType t);

struct CoxeterReport {
    DiagramType diagram;
    IntMatrix coxeter_element;
    IntPoly coxeter_poly;
    std::optional<long long> coxeter_order;  // empty: not found within cap
    IntPoly q_assoc;
    Factorization f_factors;
    Factorization Q_factors;
};

CoxeterReport coxeter_report(DiagramType t);

}  // namespace liecheb

#endif
