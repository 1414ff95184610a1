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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liecheb/cartan.hpp"
#include "liecheb/coxeter.hpp"
#include "liecheb/cyclotomic.hpp"
#include "liecheb/errors.hpp"
#include "liecheb/spectral.hpp"
#include "liecheb/verify.hpp"
#include "test_helpers.hpp"

using namespace liecheb;
using liecheb::testing::P;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("roots of simple polynomials") {
    const auto r1 = roots(P({-3, 0, 1}));
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].real() == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
    CHECK(r1[1].real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

    const auto r2 = roots(P({-2, 1}));
    REQUIRE(r2.size() == 1);
    CHECK(std::abs(r2[0] - std::complex<double>(2.0, 0.0)) < 1e-12);

    // Phi_12 roots sit on the unit circle at +-pi/6, +-5pi/6
    const auto r3 = roots(phi(12));
    REQUIRE(r3.size() == 4);
    const double c = std::cos(std::numbers::pi / 6), s = std::sin(std::numbers::pi / 6);
    const std::vector<std::complex<double>> expected = {
        {-c, -s}, {-c, s}, {c, -s}, {c, s}};
    for (size_t k = 0; k < 4; ++k) CHECK(std::abs(r3[k] - expected[k]) < 1e-10);

    CHECK_THROWS_AS(roots(P({5})), std::invalid_argument);
    CHECK_THROWS_AS(roots(IntPoly{}), std::invalid_argument);
}

TEST_CASE("roots handle multiple roots exactly via square-free peeling") {
    // (x-2)^2 (x^2-4x+1), the D_4 Cartan polynomial
    const auto r = roots(P({4, -20, 21, -8, 1}));
    REQUIRE(r.size() == 4);
    CHECK(std::abs(r[1] - std::complex<double>(2, 0)) < 1e-12);
    CHECK(std::abs(r[2] - std::complex<double>(2, 0)) < 1e-12);
    // x^3 (triple root)
    const auto r2 = roots(P({0, 0, 0, 1}));
    for (const auto& z : r2) CHECK(std::abs(z) < 1e-12);
    // (x-1)^5 exercises the peeling recursion depth
    const IntPoly quintic = P({-1, 1}) * P({-1, 1}) * P({-1, 1}) * P({-1, 1}) * P({-1, 1});
    const auto r3 = roots(quintic);
    REQUIRE(r3.size() == 5);
    for (const auto& z : r3) CHECK(std::abs(z - std::complex<double>(1, 0)) < 1e-12);
}

TEST_CASE("roots stay robust on clustered and high-degree inputs") {
    // all 50 roots of x^50 - 1 on the unit circle
    const auto circle = roots(IntPoly::monomial(50) - IntPoly{1});
    REQUIRE(circle.size() == 50);
    for (const auto& z : circle) CHECK(std::abs(std::abs(z) - 1.0) < 1e-10);
    // degree-48 cyclotomic with tightly clustered roots
    CHECK(mahler_measure(phi(105)) == doctest::Approx(1.0).epsilon(1e-9));
    // mixed product: measure multiplies the outside-the-disk roots
    const IntPoly mixed = P({-3, 0, 1}) * phi(12) * P({-1, 1});
    CHECK(mahler_measure(mixed) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("toeplitz closed form") {
    const auto two = toeplitz_eigenvalues(-1, 2, -1, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == doctest::Approx(1.0));
    CHECK(two[1] == doctest::Approx(3.0));

    const auto three = toeplitz_eigenvalues(1, 0, 1, 3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(three[1] == doctest::Approx(0.0));
    CHECK(three[2] == doctest::Approx(-std::sqrt(2.0)));

    CHECK_THROWS_AS(toeplitz_eigenvalues(0, 2, -1, 3), std::domain_error);
    CHECK_THROWS_AS(toeplitz_eigenvalues(1, 0, -1, 3), std::domain_error);
    CHECK_THROWS_AS(toeplitz_eigenvalues(1, 0, 1, 0), std::domain_error);
}

TEST_CASE("toeplitz asymmetric bands match the B2 Cartan spectrum") {
    // [[2,-2],[-1,2]] has constant bands c=-1, b=2, a=-2
    auto lambda = toeplitz_eigenvalues(-2, 2, -1, 2);
    std::sort(lambda.begin(), lambda.end());
    const auto xi = roots(p_poly({Family::B, 2}));  // 2 +- sqrt(2)
    CHECK(std::abs(xi[0] - lambda[0]) < 1e-12);
    CHECK(std::abs(xi[1] - lambda[1]) < 1e-12);
}

TEST_CASE("toeplitz matches the A-family Cartan spectra") {
    for (int n = 1; n <= 12; ++n) {
        auto lambda = toeplitz_eigenvalues(-1, 2, -1, n);
        std::sort(lambda.begin(), lambda.end());
        const auto xi = roots(p_poly({Family::A, n}));
        for (int k = 0; k < n; ++k)
            CHECK(std::abs(xi[static_cast<size_t>(k)] - lambda[static_cast<size_t>(k)]) < 1e-8);
    }
}

TEST_CASE("spectrum_check against the exponent closed form") {
    const SpectralReport f4 = spectrum_check({Family::F, 4});
    REQUIRE(f4.predicted.size() == 4);
    const double s6 = std::sqrt(6.0), s2 = std::sqrt(2.0);
    CHECK(f4.eigenvalues[0].real() == doctest::Approx(-(s6 + s2) / 2));
    CHECK(f4.eigenvalues[1].real() == doctest::Approx(-(s6 - s2) / 2));
    CHECK(f4.eigenvalues[2].real() == doctest::Approx((s6 - s2) / 2));
    CHECK(f4.eigenvalues[3].real() == doctest::Approx((s6 + s2) / 2));
    CHECK(f4.max_residual < 1e-8);

    const SpectralReport a1 = spectrum_check({Family::A, 1});
    REQUIRE(a1.eigenvalues.size() == 1);
    CHECK(std::abs(a1.eigenvalues[0]) < 1e-12);
    CHECK(a1.predicted[0] == doctest::Approx(0.0));

    for (DiagramType t : simple_types_up_to(12)) {
        const SpectralReport rep = spectrum_check(t);
        CHECK(rep.max_residual < 1e-8);
        CHECK(rep.cartan_pairing_residual < 1e-8);
        CHECK(rep.classification == Classification::Spherical);
    }
}

TEST_CASE("E9 golden-ratio spectrum") {
    const auto ev = roots(a_poly({Family::GenE, 9}));
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    const std::vector<double> expected = {-2.0, -tau, -1.0, -1.0 / tau, 0.0,
                                          1.0 / tau, 1.0, tau, 2.0};
    REQUIRE(ev.size() == expected.size());
    for (size_t k = 0; k < ev.size(); ++k) CHECK(std::abs(ev[k] - expected[k]) < 1e-8);
}

TEST_CASE("sine formula") {
    const SineCheck a6 = sine_formula_check({Family::A, 6});
    CHECK(a6.det == 7);
    CHECK(a6.lhs == doctest::Approx(7.0));
    const SineCheck e8 = sine_formula_check({Family::E, 8});
    CHECK(e8.det == 1);
    CHECK(e8.residual < 1e-9);
    const SineCheck b5 = sine_formula_check({Family::B, 5});
    CHECK(b5.det == 2);
    CHECK(b5.residual < 1e-9);
    for (DiagramType t : simple_types_up_to(12)) {
        CHECK(sine_formula_check(t).residual < 1e-9);
        // exact counterpart: a(2) = det C with no floats involved
        CHECK(eval_int(a_poly(t), 2) == BigInt(root_system_data(t).det_cartan));
    }
}

TEST_CASE("mahler measure") {
    const IntPoly lehmer = P({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    CHECK(mahler_measure(lehmer) == doctest::Approx(1.1762808).epsilon(1e-4));
    CHECK(mahler_measure(phi(12)) == doctest::Approx(1.0));
    CHECK(mahler_measure(coxeter_polynomial({Family::GenG, 4})) ==
          doctest::Approx(1.72208).epsilon(1e-3));
    for (DiagramType t : simple_types_up_to(10)) {
        const double m = mahler_measure(coxeter_polynomial(t));
        CHECK(std::abs(m - 1.0) < 1e-6);
        CHECK(std::abs(mahler_measure(associated_Q(t)) - 1.0) < 1e-6);
    }
    // leading coefficient scales the measure
    CHECK(mahler_measure(P({0, 3})) == doctest::Approx(3.0));
}

TEST_CASE("salem verdicts") {
    const IntPoly lehmer = P({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    CHECK(salem_check(lehmer));
    const auto lr = roots(lehmer);
    double largest = 0.0;
    for (const auto& z : lr) largest = std::max(largest, std::abs(z));
    CHECK(largest == doctest::Approx(1.17628).epsilon(1e-4));
    CHECK_FALSE(salem_check(phi(5)));
    CHECK_FALSE(salem_check(P({-3, 0, 1})));  // conjugate -sqrt(3) escapes the disk
    CHECK_THROWS_AS(salem_check(P({-2, 1})), std::invalid_argument);
}

TEST_CASE("classification") {
    CHECK(classify({Family::E, 8}) == Classification::Spherical);
    CHECK(classify({Family::GenE, 9}) == Classification::Affine);
    CHECK(classify({Family::GenE, 10}) == Classification::Hyperbolic);
    CHECK(classify({Family::GenG, 3}) == Classification::Affine);
    CHECK(classify({Family::GenG, 4}) == Classification::Hyperbolic);
    CHECK(classify({Family::AffineA, 3}) == Classification::Affine);
    CHECK(classify({Family::AffineD, 5}) == Classification::Affine);
    for (DiagramType t : simple_types_up_to(8))
        CHECK(classify(t) == Classification::Spherical);
}

TEST_CASE("adjacency spectra are symmetric under negation") {
    for (DiagramType t : simple_types_up_to(12)) {
        auto ev = roots(a_poly(t));
        std::vector<std::complex<double>> neg(ev.size());
        for (size_t k = 0; k < ev.size(); ++k) neg[k] = -ev[k];
        std::sort(neg.begin(), neg.end(), [](auto u, auto v) {
            if (u.real() != v.real()) return u.real() < v.real();
            return u.imag() < v.imag();
        });
        for (size_t k = 0; k < ev.size(); ++k) CHECK(std::abs(ev[k] - neg[k]) < 1e-8);
    }
}

TEST_SUITE_END();
