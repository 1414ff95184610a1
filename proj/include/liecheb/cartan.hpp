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

#ifndef LIECHEB_CARTAN_HPP
#define LIECHEB_CARTAN_HPP

#include "liecheb/liedata.hpp"
#include "liecheb/matrix.hpp"
#include "liecheb/poly.hpp"

namespace liecheb {

struct CartanBundle {
    DiagramType diagram;
    IntMatrix cartan;
    IntMatrix adjacency;  // 2I - cartan
};

/// Cartan matrix of a finite or generalized diagram. Node ordering:
/// chains run 1..n, the two D-branch nodes come last, E-type diagrams
/// attach node 1 to node 3 and node 2 to node 4.
CartanBundle build(DiagramType t);

/// Extended Cartan matrix of an affine classical type; the affine node
/// is appended as the last row/column. Its determinant is 0.
CartanBundle build_affine(DiagramType t);

/// q(x) = det(2xI + A) from the Chebyshev combination of the family:
/// A: U_n; B/C: 2T_n; D: 4x T_{n-1}; G/GenG: 2T_n - U_{n-2};
/// E/GenE: 8x^2 T_{n-2} - U_{n-2}; affine A/B/C/D per their closed
/// forms. F_4 has no such combination and is computed from the matrix.
IntPoly q_poly(DiagramType t);

/// a(x) = q(x/2), the adjacency characteristic polynomial.
IntPoly a_poly(DiagramType t);

/// p(x) = a(x - 2) = q(x/2 - 1), the Cartan characteristic polynomial.
IntPoly p_poly(DiagramType t);

/// Closed-form coefficient formulas for p, families A/B/C/D only.
IntPoly closed_form_p(DiagramType t);

/// (-1)^n p(0). Matches the determinant table for simple types, 9-n for
/// GenE, 3-n for GenG, and 0 for affine types.
BigInt det_cartan_computed(DiagramType t);

}  // namespace liecheb

#endif
