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

#ifndef LIECHEB_SPECTRAL_HPP
#define LIECHEB_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "liecheb/liedata.hpp"
#include "liecheb/poly.hpp"

namespace liecheb {

/// All complex roots by Aberth-Ehrlich simultaneous iteration on the
/// monic float image. Deterministic (seed-free circle initialization),
/// residual-checked, sorted by (re, im). Throws NoConvergence if the
/// backward error target is missed after the iteration cap.
std::vector<std::complex<double>> roots(const IntPoly& p);

/// Closed-form eigenvalues b + 2a sqrt(c/a) cos(j pi / (n+1)), j = 1..n,
/// of the tridiagonal Toeplitz matrix with bands (c, b, a).
std::vector<double> toeplitz_eigenvalues(double a, double b, double c, int n);

enum class Classification { Spherical, Affine, Hyperbolic };

struct SpectralReport {
    std::vector<std::complex<double>> eigenvalues;  // roots of a_poly
    std::vector<double> predicted;                  // 2cos(m_i pi / h), simple types
    double max_residual = 0.0;
    double cartan_pairing_residual = 0.0;  // multiset distance of {xi} vs {4 - xi}
    double spectral_radius = 0.0;
    Classification classification = Classification::Spherical;
};

/// Adjacency eigenvalues against the exponent closed form, plus the
/// Cartan pairing xi <-> 4 - xi check.
SpectralReport spectrum_check(DiagramType t);

struct SineCheck {
    double lhs = 0.0;      // 2^(2l) prod sin^2(m_i pi / 2h)
    long long det = 0;     // determinant of the Cartan matrix
    double residual = 0.0;
};

SineCheck sine_formula_check(DiagramType t);

/// |leading| * prod max(1, |root|).
double mahler_measure(const IntPoly& p);

/// True iff exactly one real root exceeds 1 + tol, every other root has
/// modulus <= 1 + tol, and some root lies within tol of the unit circle
/// (tol = 1e-6).
bool salem_check(const IntPoly& p);

/// Spherical / Affine / Hyperbolic from the adjacency spectral radius,
/// with the exact determinant consulted for the affine boundary.
Classification classify(DiagramType t);

}  // namespace liecheb

#endif
