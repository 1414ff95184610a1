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

#include "liecheb/cartan.hpp"
#include "liecheb/chebyshev.hpp"
#include "liecheb/errors.hpp"
#include "liecheb/verify.hpp"
#include "test_helpers.hpp"

using namespace liecheb;
using liecheb::testing::P;

TEST_SUITE_BEGIN("cartan");

TEST_CASE("matrices match the reference forms") {
    CHECK(build({Family::G, 2}).cartan == IntMatrix{{2, -1}, {-3, 2}});
    CHECK(build({Family::A, 1}).cartan == IntMatrix{{2}});
    CHECK(build({Family::A, 1}).adjacency == IntMatrix{{0}});
    const IntMatrix e6{{2, 0, -1, 0, 0, 0},
                       {0, 2, 0, -1, 0, 0},
                       {-1, 0, 2, -1, 0, 0},
                       {0, -1, -1, 2, -1, 0},
                       {0, 0, 0, -1, 2, -1},
                       {0, 0, 0, 0, -1, 2}};
    CHECK(build({Family::E, 6}).cartan == e6);
    CHECK(build({Family::GenE, 6}).cartan == e6);
    const IntMatrix f4{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    CHECK(build({Family::F, 4}).cartan == f4);
    // B has the double bond on the (n-1, n) entry; C is its transpose
    CHECK(build({Family::B, 2}).cartan == IntMatrix{{2, -2}, {-1, 2}});
    CHECK(build({Family::C, 2}).cartan == IntMatrix{{2, -1}, {-2, 2}});
    // D branch nodes come last and hang off node n-2
    CHECK(build({Family::D, 4}).cartan ==
          IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
}

TEST_CASE("adjacency is 2I minus cartan with nonnegative entries") {
    for (DiagramType t : simple_types_up_to(8)) {
        const CartanBundle b = build(t);
        for (int i = 0; i < b.cartan.size(); ++i)
            for (int j = 0; j < b.cartan.size(); ++j) {
                CHECK(b.adjacency.at(i, j) == (i == j ? BigInt(2) : BigInt(0)) - b.cartan.at(i, j));
                if (i == j) {
                    CHECK(b.cartan.at(i, j) == 2);
                } else {
                    CHECK(b.cartan.at(i, j) <= 0);
                    CHECK(b.cartan.at(i, j) >= -3);
                    CHECK((b.cartan.at(i, j) == 0) == (b.cartan.at(j, i) == 0));
                }
            }
    }
}

TEST_CASE("affine extended matrices are singular") {
    const CartanBundle a2 = build_affine({Family::AffineA, 2});
    CHECK(a2.cartan.size() == 3);
    CHECK(det(a2.cartan) == 0);
    // char poly has a root at 0
    CHECK(char_poly(a2.cartan).coeff(0) == 0);
    // q of the 3-cycle: 2T_3 + 2
    CHECK(q_poly({Family::AffineA, 2}) == P({2, -6, 0, 8}));
    CHECK(q_poly({Family::AffineA, 2}) ==
          scale_arg(char_poly(-a2.adjacency), BigInt(2)));

    for (int l = 1; l <= 10; ++l) {
        CHECK(det(build_affine({Family::AffineA, l}).cartan) == 0);
        if (l >= 3) CHECK(det(build_affine({Family::AffineB, l}).cartan) == 0);
        if (l >= 2) CHECK(det(build_affine({Family::AffineC, l}).cartan) == 0);
        if (l >= 4) CHECK(det(build_affine({Family::AffineD, l}).cartan) == 0);
    }
    CHECK_THROWS_AS(build_affine({Family::A, 3}), UnsupportedType);
    CHECK_THROWS_AS(build({Family::AffineA, 3}), UnsupportedType);
}

TEST_CASE("affine q identities against the extended matrices") {
    auto det_route = [](DiagramType t) {
        return scale_arg(char_poly(-build_affine(t).adjacency), BigInt(2));
    };
    for (int l = 1; l <= 10; ++l)
        CHECK(q_poly({Family::AffineA, l}) == det_route({Family::AffineA, l}));
    for (int l = 3; l <= 10; ++l)
        CHECK(q_poly({Family::AffineB, l}) == det_route({Family::AffineB, l}));
    for (int l = 2; l <= 10; ++l)
        CHECK(q_poly({Family::AffineC, l}) == det_route({Family::AffineC, l}));
    for (int l = 4; l <= 10; ++l)
        CHECK(q_poly({Family::AffineD, l}) == det_route({Family::AffineD, l}));
    // the four closed forms, spot-checked structurally
    CHECK(q_poly({Family::AffineA, 1}) == P({-4, 0, 4}));                // 2T_2 - 2
    CHECK(q_poly({Family::AffineB, 3}) == P({0, 0, -16, 0, 16}));        // 2(T_4 - T_0)
    CHECK(q_poly({Family::AffineC, 2}) == P({0, -8, 0, 8}));             // 2(T_3 - T_1)
    CHECK(q_poly({Family::AffineD, 4}) == P({0, 0, 0, -32, 0, 32}));     // 8x^2(T_3 - T_1)
}

TEST_CASE("q formulas") {
    CHECK(q_poly({Family::B, 3}) == P({0, -6, 0, 8}));
    CHECK(q_poly({Family::D, 7}) == P({0, -4, 0, 72, 0, -192, 0, 128}));
    CHECK(q_poly({Family::E, 6}) == P({-1, 0, 20, 0, -80, 0, 64}));
    CHECK(q_poly({Family::F, 4}) == P({1, 0, -16, 0, 16}));
    CHECK(q_poly({Family::G, 2}) == P({-3, 0, 4}));
}

TEST_CASE("p and a polynomials") {
    CHECK(p_poly({Family::G, 2}) == P({1, -4, 1}));
    CHECK(a_poly({Family::F, 4}) == P({1, 0, -4, 0, 1}));
    // a_9 for the affine E_9 diagram: x(x-1)(x+1)(x+2)(x-2)(x^2-x-1)(x^2+x-1)
    const IntPoly a9 = P({0, 1}) * P({-1, 1}) * P({1, 1}) * P({2, 1}) * P({-2, 1}) *
                       P({-1, -1, 1}) * P({-1, 1, 1});
    CHECK(a_poly({Family::GenE, 9}) == a9);
    CHECK(a9 == P({0, 4, 0, -17, 0, 20, 0, -8, 0, 1}));
    // GenG affine and hyperbolic rows
    CHECK(q_poly({Family::GenG, 3}) == P({0, -8, 0, 8}));
    CHECK(a_poly({Family::GenG, 3}) == P({0, -4, 0, 1}));
    CHECK(p_poly({Family::GenG, 3}) == P({0, 8, -6, 1}));
    CHECK(q_poly({Family::GenG, 4}) == P({3, 0, -20, 0, 16}));
    CHECK(a_poly({Family::GenG, 4}) == P({3, 0, -5, 0, 1}));
    CHECK(p_poly({Family::GenG, 4}) == P({-1, -12, 19, -8, 1}));
}

TEST_CASE("adjacency polynomial rows") {
    CHECK(a_poly({Family::A, 8}) == P({1, 0, -10, 0, 15, 0, -7, 0, 1}));
    CHECK(a_poly({Family::A, 10}) == P({-1, 0, 15, 0, -35, 0, 28, 0, -9, 0, 1}));
    CHECK(a_poly({Family::B, 6}) == P({-2, 0, 9, 0, -6, 0, 1}));
    CHECK(a_poly({Family::B, 10}) == P({-2, 0, 25, 0, -50, 0, 35, 0, -10, 0, 1}));
    CHECK(a_poly({Family::D, 8}) == P({0, 0, -7, 0, 14, 0, -7, 0, 1}));
    CHECK(a_poly({Family::E, 6}) == P({-1, 0, 5, 0, -5, 0, 1}));
    CHECK(a_poly({Family::E, 7}) == P({0, -3, 0, 9, 0, -6, 0, 1}));
    CHECK(a_poly({Family::E, 8}) == P({1, 0, -8, 0, 14, 0, -7, 0, 1}));
    CHECK(a_poly({Family::G, 2}) == P({-3, 0, 1}));
}

TEST_CASE("closed-form p coefficients") {
    CHECK(closed_form_p({Family::A, 4}) == P({5, -20, 21, -8, 1}));
    CHECK(closed_form_p({Family::B, 4}) == P({2, -16, 20, -8, 1}));
    CHECK(closed_form_p({Family::D, 5}) == P({-4, 34, -56, 36, -10, 1}));
    CHECK_THROWS_AS(closed_form_p({Family::E, 6}), UnsupportedType);
    CHECK_THROWS_AS(closed_form_p({Family::F, 4}), UnsupportedType);
    CHECK_THROWS_AS(closed_form_p({Family::G, 2}), UnsupportedType);
    for (int n = 2; n <= 12; ++n) {
        if (n >= 2) CHECK(closed_form_p({Family::B, n}) == p_poly({Family::B, n}));
        if (n >= 2) CHECK(closed_form_p({Family::C, n}) == p_poly({Family::C, n}));
        if (n >= 3) CHECK(closed_form_p({Family::D, n}) == p_poly({Family::D, n}));
        CHECK(closed_form_p({Family::A, n}) == p_poly({Family::A, n}));
    }
}

TEST_CASE("three-way characteristic polynomial agreement") {
    for (DiagramType t : simple_types_up_to(8)) {
        const CartanBundle b = build(t);
        const IntPoly via_q = p_poly(t);
        CHECK(char_poly(b.cartan) == via_q);
        CHECK(char_poly_oracle(b.cartan) == via_q);
        CHECK(char_poly(b.adjacency) == a_poly(t));
        CHECK(char_poly_oracle(b.adjacency) == a_poly(t));
        CHECK(shift_arg(via_q, 2) == a_poly(t));
    }
}

TEST_CASE("determinants") {
    CHECK(det_cartan_computed({Family::A, 7}) == 8);
    CHECK(det_cartan_computed({Family::GenE, 9}) == 0);
    CHECK(det_cartan_computed({Family::GenE, 10}) == -1);
    for (int n = 4; n <= 12; ++n)
        CHECK(det_cartan_computed({Family::GenE, n}) == 9 - n);
    for (int n = 2; n <= 6; ++n)
        CHECK(det_cartan_computed({Family::GenG, n}) == 3 - n);
    for (DiagramType t : simple_types_up_to(12)) {
        CHECK(det_cartan_computed(t) == BigInt(root_system_data(t).det_cartan));
        // p(0) = (-1)^n det
        const BigInt p0 = eval_int(p_poly(t), 0);
        CHECK(p0 == (t.rank % 2 == 0 ? BigInt(root_system_data(t).det_cartan)
                                     : BigInt(-root_system_data(t).det_cartan)));
    }
}

TEST_CASE("odd-rank A polynomials are divisible by x - 2") {
    for (int n = 1; n <= 11; n += 2)
        CHECK_NOTHROW(exact_div(p_poly({Family::A, n}), P({-2, 1})));
}

TEST_CASE("D-family identities") {
    for (int n = 3; n <= 12; ++n) {
        const IntPoly two_t_sum =
            BigInt(2) * (cheb(ChebKind::First, n) + cheb(ChebKind::First, n - 2));
        CHECK(q_poly({Family::D, n}) == two_t_sum);
        CHECK(a_poly({Family::D, n}) == IntPoly{0, 1} * a_poly({Family::B, n - 1}));
    }
}

TEST_CASE("C matrices share polynomials with B") {
    for (int n = 2; n <= 10; ++n) {
        CHECK(q_poly({Family::C, n}) == q_poly({Family::B, n}));
        CHECK(char_poly(build({Family::C, n}).cartan) == char_poly(build({Family::B, n}).cartan));
    }
}

TEST_SUITE_END();
