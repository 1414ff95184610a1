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

#include "liecheb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "liecheb/cartan.hpp"
#include "liecheb/errors.hpp"

namespace liecheb {

namespace {

using Cplx = std::complex<double>;
// the iteration runs in extended precision so that ill-conditioned
// high-rank characteristic polynomials still land well under 1e-9
using LCplx = std::complex<long double>;

constexpr int kMaxIterations = 10000;
constexpr long double kStepTol = 1e-13L;
constexpr double kResidualTol = 1e-9;

// p(z) and a running magnitude bound sum |a_k| |z|^k for the backward error
struct Eval {
    LCplx value;
    LCplx deriv;
    long double scale;
};

Eval evaluate(const std::vector<long double>& a, LCplx z) {
    LCplx p = 0.0L, dp = 0.0L;
    long double s = 0.0L;
    const long double az = std::abs(z);
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + a[static_cast<size_t>(k)];
        s = s * az + std::abs(a[static_cast<size_t>(k)]);
    }
    return {p, dp, s};
}

// content and sign stripped, leading coefficient positive
IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt c = content(p);
    if (p.leading() < 0) c = -c;
    std::vector<BigInt> v(p.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = p.coeff(static_cast<int>(k)) / c;
    return IntPoly::from_coeffs(std::move(v));
}

// r with lead(b)^k * a = q*b + r, deg r < deg b; only used inside the gcd
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const BigInt& lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const IntPoly t = IntPoly::monomial(r.degree() - b.degree(), r.leading()) * b;
        r = lb * r - t;
    }
    return r;
}

// primitive gcd over the integers (primitive PRS)
IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<Cplx> aberth(const IntPoly& p);

}  // namespace

std::vector<Cplx> roots(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("roots: degree must be >= 1");
    // peel multiple roots exactly: gcd(p, p') holds every root with its
    // multiplicity reduced by one, so each Aberth run sees simple roots only
    std::vector<Cplx> out;
    IntPoly cur = p;
    while (cur.degree() >= 1) {
        const IntPoly g = poly_gcd(cur, derivative(cur));
        if (g.degree() == 0) {
            const auto part = aberth(cur);
            out.insert(out.end(), part.begin(), part.end());
            break;
        }
        const auto part = aberth(exact_div(primitive_part(cur), g));
        out.insert(out.end(), part.begin(), part.end());
        cur = g;
    }
    std::sort(out.begin(), out.end(), [](const Cplx& u, const Cplx& v) {
        if (u.real() != v.real()) return u.real() < v.real();
        return u.imag() < v.imag();
    });
    return out;
}

namespace {

std::vector<Cplx> aberth(const IntPoly& p) {
    const int d = p.degree();

    // monic float image
    const long double lead = p.leading().convert_to<long double>();
    std::vector<long double> a(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        a[static_cast<size_t>(k)] = p.coeff(k).convert_to<long double>() / lead;

    long double cauchy = 0.0L;
    for (int k = 0; k < d; ++k) cauchy = std::max(cauchy, std::abs(a[static_cast<size_t>(k)]));
    const long double radius = 1.0L + cauchy;

    // deterministic circle start, offset so no guess sits on a symmetry axis
    std::vector<LCplx> z(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        const long double theta =
            2.0L * std::numbers::pi_v<long double> * j / d +
            std::numbers::pi_v<long double> / (2 * d) + 0.3L;
        z[static_cast<size_t>(j)] = std::polar(radius, theta);
    }

    const long double eps = std::numeric_limits<long double>::epsilon();
    std::vector<bool> settled(static_cast<size_t>(d), false);
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        long double max_step = 0.0L;
        bool all_settled = true;
        for (int i = 0; i < d; ++i) {
            if (settled[static_cast<size_t>(i)]) continue;
            const Eval e = evaluate(a, z[static_cast<size_t>(i)]);
            if (std::abs(e.value) <= 16.0L * d * eps * e.scale) {
                settled[static_cast<size_t>(i)] = true;
                continue;
            }
            all_settled = false;
            LCplx newton;
            if (e.deriv == LCplx(0.0L)) {
                newton = LCplx(0.01L, 0.01L);  // nudge off the critical point
            } else {
                newton = e.value / e.deriv;
            }
            LCplx repulsion = 0.0L;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                LCplx diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-300L) diff = LCplx(1e-300L, 0.0L);
                repulsion += 1.0L / diff;
            }
            const LCplx denom = 1.0L - newton * repulsion;
            const LCplx step = std::abs(denom) < 1e-300L ? newton : newton / denom;
            z[static_cast<size_t>(i)] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (all_settled || max_step < kStepTol) break;
    }

    std::vector<Cplx> out(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        const Eval e = evaluate(a, z[static_cast<size_t>(i)]);
        if (!(std::abs(e.value) <= kResidualTol * std::max(e.scale, 1.0L)))
            throw NoConvergence("roots: residual target not reached after iteration cap");
        out[static_cast<size_t>(i)] = Cplx(static_cast<double>(z[static_cast<size_t>(i)].real()),
                                           static_cast<double>(z[static_cast<size_t>(i)].imag()));
    }
    return out;
}

}  // namespace

std::vector<double> toeplitz_eigenvalues(double a, double b, double c, int n) {
    if (n < 1) throw std::domain_error("toeplitz_eigenvalues: n must be >= 1");
    if (a == 0.0) throw std::domain_error("toeplitz_eigenvalues: a must be nonzero");
    const double ratio = c / a;
    if (ratio < 0.0) throw std::domain_error("toeplitz_eigenvalues: c/a must be >= 0");
    const double amp = 2.0 * a * std::sqrt(ratio);
    std::vector<double> lambda(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
        lambda[static_cast<size_t>(j - 1)] = b + amp * std::cos(j * std::numbers::pi / (n + 1));
    return lambda;
}

namespace {

Classification classify_from(double rho, const BigInt& det_c) {
    constexpr double tol = 1e-9;
    if (det_c == 0) return Classification::Affine;
    if (rho < 2.0 - tol) return Classification::Spherical;
    if (rho > 2.0 + tol) return Classification::Hyperbolic;
    return Classification::Affine;
}

}  // namespace

SpectralReport spectrum_check(DiagramType t) {
    SpectralReport rep;
    rep.eigenvalues = roots(a_poly(t));

    if (is_simple_finite(t)) {
        const RootSystemData data = root_system_data(t);
        for (int m : data.exponents)
            rep.predicted.push_back(2.0 * std::cos(m * std::numbers::pi / data.coxeter_number));
        std::sort(rep.predicted.begin(), rep.predicted.end());
        for (size_t k = 0; k < rep.predicted.size(); ++k)
            rep.max_residual = std::max(rep.max_residual,
                                        std::abs(rep.eigenvalues[k] - rep.predicted[k]));
    }

    // Cartan spectrum pairs as xi <-> 4 - xi
    std::vector<std::complex<double>> xi = roots(p_poly(t));
    std::vector<std::complex<double>> mirrored(xi.size());
    for (size_t k = 0; k < xi.size(); ++k) mirrored[k] = 4.0 - xi[k];
    std::sort(mirrored.begin(), mirrored.end(), [](const auto& u, const auto& v) {
        if (u.real() != v.real()) return u.real() < v.real();
        return u.imag() < v.imag();
    });
    for (size_t k = 0; k < xi.size(); ++k)
        rep.cartan_pairing_residual =
            std::max(rep.cartan_pairing_residual, std::abs(xi[k] - mirrored[k]));

    for (const auto& z : rep.eigenvalues) rep.spectral_radius = std::max(rep.spectral_radius, std::abs(z));
    rep.classification = classify_from(rep.spectral_radius, det_cartan_computed(t));
    return rep;
}

SineCheck sine_formula_check(DiagramType t) {
    const RootSystemData data = root_system_data(t);
    double lhs = 1.0;
    for (int m : data.exponents) {
        const double s = 2.0 * std::sin(m * std::numbers::pi / (2.0 * data.coxeter_number));
        lhs *= s * s;
    }
    SineCheck check;
    check.lhs = lhs;
    check.det = data.det_cartan;
    check.residual = std::abs(lhs - static_cast<double>(data.det_cartan));
    return check;
}

double mahler_measure(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("mahler_measure: degree must be >= 1");
    double m = std::abs(p.leading().convert_to<double>());
    for (const auto& z : roots(p)) m *= std::max(1.0, std::abs(z));
    return m;
}

bool salem_check(const IntPoly& p) {
    if (p.degree() < 2) throw std::invalid_argument("salem_check: degree must be >= 2");
    constexpr double tol = 1e-6;
    int outside = 0;
    bool outside_is_real_gt1 = false;
    bool touches_circle = false;
    for (const auto& z : roots(p)) {
        const double mod = std::abs(z);
        if (mod > 1.0 + tol) {
            ++outside;
            outside_is_real_gt1 = std::abs(z.imag()) <= tol && z.real() > 1.0 + tol;
        }
        if (std::abs(mod - 1.0) <= tol) touches_circle = true;
    }
    return outside == 1 && outside_is_real_gt1 && touches_circle;
}

Classification classify(DiagramType t) {
    double rho = 0.0;
    for (const auto& z : roots(a_poly(t))) rho = std::max(rho, std::abs(z));
    return classify_from(rho, det_cartan_computed(t));
}

}  // namespace liecheb
