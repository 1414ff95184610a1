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

#ifndef LIECHEB_FACTORIZATION_HPP
#define LIECHEB_FACTORIZATION_HPP

#include <vector>

#include "liecheb/bigint.hpp"
#include "liecheb/poly.hpp"

namespace liecheb {

/// One irreducible factor: a cyclotomic Phi_n, a Lehmer psi_n, or a
/// literal polynomial, together with its multiplicity.
struct FactorRef {
    enum class Kind { Phi, Psi, Literal };

    Kind kind = Kind::Literal;
    int index = 0;  // Phi/Psi only
    IntPoly literal;
    int multiplicity = 1;

    static FactorRef phi(int index, int multiplicity = 1);
    static FactorRef psi(int index, int multiplicity = 1);
    static FactorRef lit(IntPoly p, int multiplicity = 1);

    friend bool operator==(const FactorRef&, const FactorRef&) = default;
};

/// scalar * prod factor^multiplicity. The scalar stays an exact rational
/// so Chebyshev T-factorizations never leave integer arithmetic.
struct Factorization {
    Rational scalar{};
    std::vector<FactorRef> factors;

    /// Index of each Phi/Psi factor, repeated per multiplicity, sorted.
    std::vector<int> index_multiset() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

}  // namespace liecheb

#endif
