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

#include <algorithm>
#include <numeric>
#include <random>

#include "liecheb/coxeter.hpp"
#include "liecheb/cyclotomic.hpp"
#include "liecheb/errors.hpp"
#include "liecheb/verify.hpp"
#include "test_helpers.hpp"

using namespace liecheb;
using liecheb::testing::P;

TEST_SUITE_BEGIN("coxeter");

TEST_CASE("A3 worked example") {
    const CartanBundle a3 = build({Family::A, 3});
    const auto sigmas = simple_reflections(a3);
    REQUIRE(sigmas.size() == 3);
    CHECK(sigmas[0] == IntMatrix{{-1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(sigmas[1] == IntMatrix{{1, 0, 0}, {1, -1, 1}, {0, 0, 1}});
    CHECK(sigmas[2] == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 1, -1}});

    const IntMatrix r = coxeter_element(a3);
    CHECK(r == IntMatrix{{0, 0, -1}, {1, 0, -1}, {0, 1, -1}});
    CHECK((r * r * r * r).is_identity());
    CHECK(coxeter_order(r, 40) == 4);
    CHECK(coxeter_polynomial({Family::A, 3}) == P({1, 1, 1, 1}));
}

TEST_CASE("reflections are involutions") {
    for (DiagramType t : simple_types_up_to(8)) {
        const CartanBundle b = build(t);
        for (const IntMatrix& s : simple_reflections(b)) CHECK((s * s).is_identity());
    }
    const auto a1 = simple_reflections(build({Family::A, 1}));
    CHECK(a1[0] == IntMatrix{{-1}});
    CHECK(coxeter_element(build({Family::A, 1}), {1}) == IntMatrix{{-1}});
}

TEST_CASE("braid relations read off the Cartan products") {
    for (DiagramType t : simple_types_up_to(6)) {
        const CartanBundle b = build(t);
        const auto sigmas = simple_reflections(b);
        const int n = b.cartan.size();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const BigInt prod = b.cartan.at(i, j) * b.cartan.at(j, i);
                int m = 0;
                if (prod == 0) m = 2;
                else if (prod == 1) m = 3;
                else if (prod == 2) m = 4;
                else if (prod == 3) m = 6;
                REQUIRE(m != 0);
                const IntMatrix pair = sigmas[static_cast<size_t>(i)] * sigmas[static_cast<size_t>(j)];
                CHECK(coxeter_order(pair, 10) == m);
            }
    }
}

TEST_CASE("invalid permutations are rejected") {
    const CartanBundle a3 = build({Family::A, 3});
    CHECK_THROWS_AS(coxeter_element(a3, {1, 2}), InvalidPermutation);
    CHECK_THROWS_AS(coxeter_element(a3, {1, 2, 2}), InvalidPermutation);
    CHECK_THROWS_AS(coxeter_element(a3, {0, 1, 2}), InvalidPermutation);
    CHECK_THROWS_AS(coxeter_element(a3, {1, 2, 4}), InvalidPermutation);
    CHECK_NOTHROW(coxeter_element(a3, {3, 1, 2}));
}

TEST_CASE("coxeter polynomials match the table") {
    CHECK(coxeter_polynomial({Family::E, 8}) == P({1, 1, 0, -1, -1, -1, 0, 1, 1}));
    CHECK(coxeter_polynomial({Family::E, 7}) == P({1, 1, 0, -1, -1, 0, 1, 1}));
    CHECK(coxeter_polynomial({Family::E, 6}) == P({1, 1, 0, -1, 0, 1, 1}));
    CHECK(coxeter_polynomial({Family::F, 4}) == P({1, 0, -1, 0, 1}));
    CHECK(coxeter_polynomial({Family::G, 2}) == P({1, -1, 1}));
    // Lehmer's polynomial appears at GenE rank 10
    CHECK(coxeter_polynomial({Family::GenE, 10}) == P({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}));
    CHECK(coxeter_polynomial({Family::GenE, 9}) == P({1, 1, 0, -1, -1, -1, -1, 0, 1, 1}));
    for (int n = 3; n <= 12; ++n) {
        // B: x^n + 1;  D: x^n + x^(n-1) + x + 1
        CHECK(coxeter_polynomial({Family::B, n}) == IntPoly::monomial(n) + IntPoly{1});
        CHECK(coxeter_polynomial({Family::D, n}) ==
              IntPoly::monomial(n) + IntPoly::monomial(n - 1) + P({1, 1}));
    }
    for (int n = 1; n <= 12; ++n) {
        std::vector<BigInt> ones(static_cast<size_t>(n) + 1, BigInt(1));
        CHECK(coxeter_polynomial({Family::A, n}) == IntPoly::from_coeffs(ones));
    }
}

TEST_CASE("coxeter element order equals the coxeter number") {
    for (DiagramType t : simple_types_up_to(10)) {
        const RootSystemData d = root_system_data(t);
        const IntMatrix r = coxeter_element(build(t));
        const auto order = coxeter_order(r, 10LL * d.coxeter_number);
        REQUIRE(order.has_value());
        CHECK(*order == d.coxeter_number);
    }
}

TEST_CASE("char poly is ordering-independent on trees") {
    std::mt19937 rng(4242);
    for (DiagramType t : simple_types_up_to(6)) {
        const CartanBundle b = build(t);
        const IntPoly reference = char_poly(coxeter_element(b));
        std::vector<int> order(static_cast<size_t>(t.rank));
        std::iota(order.begin(), order.end(), 1);
        for (int round = 0; round < 10; ++round) {
            std::shuffle(order.begin(), order.end(), rng);
            CHECK(char_poly(coxeter_element(b, order)) == reference);
        }
    }
}

TEST_CASE("coxeter factorizations") {
    CHECK(coxeter_factorization({Family::E, 7}).index_multiset() == std::vector<int>{2, 18});
    CHECK(coxeter_factorization({Family::D, 4}).index_multiset() == std::vector<int>{2, 2, 6});
    CHECK(coxeter_factorization({Family::A, 11}).index_multiset() ==
          std::vector<int>{2, 3, 4, 6, 12});
    // expand A11 and compare against (x^12 - 1)/(x - 1)
    const IntPoly quotient = exact_div(IntPoly::monomial(12) - IntPoly{1}, P({-1, 1}));
    CHECK(expand(coxeter_factorization({Family::A, 11})) == quotient);
    // D-family rows, including the doubled Phi_2 at even branch counts
    CHECK(coxeter_factorization({Family::D, 5}).index_multiset() == std::vector<int>{2, 8});
    CHECK(coxeter_factorization({Family::D, 6}).index_multiset() == std::vector<int>{2, 2, 10});
    CHECK(coxeter_factorization({Family::D, 7}).index_multiset() == std::vector<int>{2, 4, 12});
    CHECK(coxeter_factorization({Family::D, 10}).index_multiset() ==
          std::vector<int>{2, 2, 6, 18});
    // B-list
    CHECK(coxeter_factorization({Family::B, 6}).index_multiset() == std::vector<int>{4, 12});
    CHECK(coxeter_factorization({Family::B, 9}).index_multiset() == std::vector<int>{2, 6, 18});
    for (DiagramType t : simple_types_up_to(12))
        CHECK(expand(coxeter_factorization(t)) == coxeter_polynomial(t));
    // the largest index is the Coxeter number
    for (DiagramType t : simple_types_up_to(10)) {
        const auto indices = coxeter_factorization(t).index_multiset();
        CHECK(indices.back() == root_system_data(t).coxeter_number);
    }
}

TEST_CASE("associated Q") {
    CHECK(associated_Q({Family::A, 5}) == P({1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK(associated_Q({Family::B, 3}) == IntPoly::monomial(6) + IntPoly{1});
    const IntPoly e7_q = P({1, 0, 1}) * (IntPoly::monomial(12) - IntPoly::monomial(6) + IntPoly{1});
    CHECK(associated_Q({Family::E, 7}) == e7_q);
    CHECK(associated_Q({Family::A, 1}) == P({1, 0, 1}));
}

TEST_CASE("Q = f(x^2) and Q = ascend(a)") {
    std::vector<DiagramType> types = simple_types_up_to(10);
    types.push_back({Family::GenE, 9});
    types.push_back({Family::GenE, 10});
    for (DiagramType t : types) {
        const IntPoly q = associated_Q(t);
        CHECK(even_part_descend(q) == coxeter_polynomial(t));
        CHECK(q == reciprocal_ascend(a_poly(t)));
        CHECK(reciprocal_descend(q) == a_poly(t));
    }
}

TEST_CASE("Q factorization rows of the A family") {
    using V = std::vector<int>;
    CHECK(Q_factorization({Family::A, 2}).index_multiset() == V{3, 6});
    CHECK(Q_factorization({Family::A, 3}).index_multiset() == V{4, 8});
    CHECK(Q_factorization({Family::A, 4}).index_multiset() == V{5, 10});
    CHECK(Q_factorization({Family::A, 6}).index_multiset() == V{7, 14});
    CHECK(Q_factorization({Family::A, 7}).index_multiset() == V{4, 8, 16});
    CHECK(Q_factorization({Family::A, 8}).index_multiset() == V{3, 6, 9, 18});
    CHECK(Q_factorization({Family::A, 10}).index_multiset() == V{11, 22});
    CHECK(Q_factorization({Family::A, 11}).index_multiset() == V{3, 4, 6, 8, 12, 24});
}

TEST_CASE("coxeter factorization rows of the A and B families") {
    using V = std::vector<int>;
    CHECK(coxeter_factorization({Family::A, 5}).index_multiset() == V{2, 3, 6});
    CHECK(coxeter_factorization({Family::A, 8}).index_multiset() == V{3, 9});
    CHECK(coxeter_factorization({Family::A, 10}).index_multiset() == V{11});
    CHECK(coxeter_factorization({Family::B, 8}).index_multiset() == V{16});
    CHECK(coxeter_factorization({Family::B, 10}).index_multiset() == V{4, 20});
}

TEST_CASE("Q factorizations") {
    CHECK(Q_factorization({Family::A, 9}).index_multiset() == std::vector<int>{4, 5, 10, 20});
    CHECK(Q_factorization({Family::E, 6}).index_multiset() == std::vector<int>{3, 6, 24});
    CHECK(Q_factorization({Family::A, 1}).index_multiset() == std::vector<int>{4});
    CHECK(Q_factorization({Family::A, 5}).index_multiset() == std::vector<int>{3, 4, 6, 12});
    CHECK(Q_factorization({Family::B, 2}).index_multiset() == std::vector<int>{8});
    CHECK(Q_factorization({Family::D, 4}).index_multiset() == std::vector<int>{4, 4, 12});
    CHECK(Q_factorization({Family::E, 7}).index_multiset() == std::vector<int>{4, 36});
    CHECK(Q_factorization({Family::E, 8}).index_multiset() == std::vector<int>{60});
    CHECK(Q_factorization({Family::F, 4}).index_multiset() == std::vector<int>{24});
    CHECK(Q_factorization({Family::G, 2}).index_multiset() == std::vector<int>{12});
    for (DiagramType t : simple_types_up_to(12))
        CHECK(expand(Q_factorization(t)) == associated_Q(t));
}

TEST_CASE("a factorizations mirror Q index-for-index") {
    CHECK(a_factorization({Family::E, 6}).index_multiset() == std::vector<int>{3, 6, 24});
    CHECK(a_factorization({Family::F, 4}).index_multiset() == std::vector<int>{24});
    // affine E_9: literal product forces psi_6 into the set
    CHECK(a_factorization({Family::GenE, 9}).index_multiset() ==
          std::vector<int>{1, 2, 3, 4, 5, 6, 10});
    CHECK(expand(a_factorization({Family::GenE, 9})) == a_poly({Family::GenE, 9}));
    for (DiagramType t : simple_types_up_to(10)) {
        CHECK(a_factorization(t).index_multiset() == Q_factorization(t).index_multiset());
        CHECK(expand(a_factorization(t)) == a_poly(t));
    }
}

TEST_CASE("generalized fallbacks and hyperbolic rejection") {
    // affine G row: a_3 = psi_1 psi_2 psi_4, f_3 = Phi_1^2 Phi_2
    CHECK(a_factorization({Family::GenG, 3}).index_multiset() == std::vector<int>{1, 2, 4});
    CHECK(coxeter_factorization({Family::GenG, 3}).index_multiset() == std::vector<int>{1, 1, 2});
    CHECK(coxeter_factorization({Family::GenE, 9}).index_multiset() ==
          std::vector<int>{1, 1, 2, 3, 5});
    CHECK(expand(coxeter_factorization({Family::GenE, 9})) == coxeter_polynomial({Family::GenE, 9}));
    // Q_9 = Phi_1^2 Phi_2^2 Phi_3 Phi_4 Phi_5 Phi_6 Phi_10
    CHECK(Q_factorization({Family::GenE, 9}).index_multiset() ==
          std::vector<int>{1, 1, 2, 2, 3, 4, 5, 6, 10});
    CHECK(expand(Q_factorization({Family::GenE, 9})) == associated_Q({Family::GenE, 9}));

    CHECK_THROWS_AS(coxeter_factorization({Family::GenE, 10}), UnsupportedType);
    CHECK_THROWS_AS(Q_factorization({Family::GenE, 10}), UnsupportedType);
    CHECK_THROWS_AS(a_factorization({Family::GenE, 10}), UnsupportedType);
    CHECK_THROWS_AS(coxeter_factorization({Family::GenG, 4}), UnsupportedType);
}

TEST_CASE("coxeter_report") {
    const CoxeterReport rep = coxeter_report({Family::A, 3});
    CHECK(rep.coxeter_order == 4);
    CHECK(rep.coxeter_poly == P({1, 1, 1, 1}));
    CHECK(rep.q_assoc == associated_Q({Family::A, 3}));
    CHECK(expand(rep.f_factors) == rep.coxeter_poly);
    CHECK(expand(rep.Q_factors) == rep.q_assoc);

    // hyperbolic: no finite order within the cap
    const CoxeterReport lehmer = coxeter_report({Family::GenE, 10});
    CHECK_FALSE(lehmer.coxeter_order.has_value());
    // affine: infinite order as well
    const CoxeterReport e9 = coxeter_report({Family::GenE, 9});
    CHECK_FALSE(e9.coxeter_order.has_value());
}

TEST_SUITE_END();
