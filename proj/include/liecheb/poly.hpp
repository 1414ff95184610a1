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

#ifndef LIECHEB_POLY_HPP
#define LIECHEB_POLY_HPP

#include <initializer_list>
#include <vector>

#include "liecheb/bigint.hpp"

namespace liecheb {

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored low-to-high; the representation is always
/// normalized (no trailing zero), and the zero polynomial is the empty
/// sequence with degree() == -1. Values are immutable after construction,
/// so every operation below is a pure function.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(BigInt constant);
    IntPoly(std::initializer_list<BigInt> low_to_high);

    static IntPoly from_coeffs(std::vector<BigInt> low_to_high);
    static IntPoly monomial(int deg, BigInt c = BigInt(1));
    static IntPoly variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^k; zero outside the stored range.
    const BigInt& coeff(int k) const;
    const BigInt& leading() const { return coeffs_.back(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const BigInt& c, const IntPoly& p);

  private:
    std::vector<BigInt> coeffs_;
};

BigInt eval_int(const IntPoly& p, const BigInt& x);
double eval_float(const IntPoly& p, double x);

/// p(x + c), exact Taylor shift.
IntPoly shift_arg(const IntPoly& p, const BigInt& c);

/// p(c * x).
IntPoly scale_arg(const IntPoly& p, const BigInt& c);

/// p(x / 2); throws NonIntegralResult if any coefficient fails to halve.
IntPoly halve_arg(const IntPoly& p);

/// Quotient p / d over the integers; throws InexactDivision on remainder.
IntPoly exact_div(const IntPoly& p, const IntPoly& d);

IntPoly derivative(const IntPoly& p);

/// For reciprocal Q of degree 2m, the psi with Q(x) = x^m psi(x + 1/x),
/// obtained by peeling coefficients against the basis b_k(z) = x^k + x^-k
/// (b_0 = 2, b_1 = z, b_k = z b_{k-1} - b_{k-2}).
IntPoly reciprocal_descend(const IntPoly& q);

/// x^m psi(x + 1/x) for m = deg psi; inverse of reciprocal_descend.
IntPoly reciprocal_ascend(const IntPoly& psi);

/// For even Q, the f of half degree with f(x^2) = Q(x).
IntPoly even_part_descend(const IntPoly& q);

/// GCD of the coefficients (0 for the zero polynomial).
BigInt content(const IntPoly& p);

}  // namespace liecheb

#endif
