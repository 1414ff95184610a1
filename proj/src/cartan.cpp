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

#include "liecheb/cartan.hpp"

#include <stdexcept>
#include <utility>

#include "liecheb/chebyshev.hpp"
#include "liecheb/errors.hpp"

namespace liecheb {

namespace {

IntMatrix adjacency_of(const IntMatrix& cartan) {
    const int n = cartan.size();
    IntMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = (i == j ? BigInt(2) : BigInt(0)) - cartan.at(i, j);
    return a;
}

void chain(IntMatrix& c, int from, int to) {
    for (int i = from; i < to; ++i) {
        c.at(i, i + 1) = -1;
        c.at(i + 1, i) = -1;
    }
}

IntMatrix cartan_matrix(DiagramType t) {
    const int n = t.rank;
    IntMatrix c(n);
    for (int i = 0; i < n; ++i) c.at(i, i) = 2;
    switch (t.family) {
        case Family::A:
            chain(c, 0, n - 1);
            break;
        case Family::B:
            chain(c, 0, n - 1);
            c.at(n - 2, n - 1) = -2;
            break;
        case Family::C:
            chain(c, 0, n - 1);
            c.at(n - 1, n - 2) = -2;
            break;
        case Family::D:
            // branch nodes n-1, n attach to node n-2 and come last
            chain(c, 0, n - 3);
            c.at(n - 3, n - 2) = c.at(n - 2, n - 3) = -1;
            c.at(n - 3, n - 1) = c.at(n - 1, n - 3) = -1;
            break;
        case Family::E:
        case Family::GenE:
            // chain 3..n with node 1 on node 3 and node 2 on node 4
            chain(c, 2, n - 1);
            c.at(0, 2) = c.at(2, 0) = -1;
            c.at(1, 3) = c.at(3, 1) = -1;
            break;
        case Family::F:
            chain(c, 0, 3);
            c.at(1, 2) = -2;
            break;
        case Family::G:
        case Family::GenG:
            chain(c, 0, n - 1);
            c.at(n - 1, n - 2) = -3;
            break;
        default:
            throw UnsupportedType("cartan_matrix: affine families use build_affine");
    }
    return c;
}

IntMatrix extended_cartan_matrix(DiagramType t) {
    const int l = t.rank;
    const int n = l + 1;  // affine node appended last
    IntMatrix c(n);
    auto base = [&](DiagramType u) {
        IntMatrix m = cartan_matrix(u);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) c.at(i, j) = m.at(i, j);
    };
    for (int i = 0; i < n; ++i) c.at(i, i) = 2;
    switch (t.family) {
        case Family::AffineA:
            base({Family::A, l});
            if (l == 1) {
                c.at(0, 1) = c.at(1, 0) = -2;
            } else {
                c.at(l, 0) = c.at(0, l) = -1;
                c.at(l, l - 1) = c.at(l - 1, l) = -1;
            }
            break;
        case Family::AffineB:
            base({Family::B, l});
            c.at(l, 1) = c.at(1, l) = -1;
            break;
        case Family::AffineC:
            base({Family::C, l});
            c.at(l, 0) = -2;
            c.at(0, l) = -1;
            break;
        case Family::AffineD:
            base({Family::D, l});
            c.at(l, 1) = c.at(1, l) = -1;
            break;
        default:
            throw UnsupportedType("build_affine: supported families are A~, B~, C~, D~");
    }
    return c;
}

}  // namespace

CartanBundle build(DiagramType t) {
    validate(t);
    if (is_affine_classical(t)) throw UnsupportedType("build: affine types use build_affine");
    IntMatrix c = cartan_matrix(t);
    IntMatrix a = adjacency_of(c);
    return CartanBundle{t, std::move(c), std::move(a)};
}

CartanBundle build_affine(DiagramType t) {
    validate(t);
    if (!is_affine_classical(t))
        throw UnsupportedType("build_affine: not an affine classical type");
    IntMatrix c = extended_cartan_matrix(t);
    IntMatrix a = adjacency_of(c);
    return CartanBundle{t, std::move(c), std::move(a)};
}

IntPoly q_poly(DiagramType t) {
    validate(t);
    const int n = t.rank;
    const auto T = [](int k) { return cheb(ChebKind::First, k); };
    const auto U = [](int k) { return cheb(ChebKind::Second, k); };
    switch (t.family) {
        case Family::A: return U(n);
        case Family::B:
        case Family::C: return BigInt(2) * T(n);
        case Family::D: return IntPoly{0, 4} * T(n - 1);
        case Family::G:
        case Family::GenG: return BigInt(2) * T(n) - U(n - 2);
        case Family::E:
        case Family::GenE: return IntPoly{0, 0, 8} * T(n - 2) - U(n - 2);
        case Family::F:
            // no Chebyshev combination for F_4; fall back to the matrix
            return scale_arg(char_poly(-build(t).adjacency), BigInt(2));
        case Family::AffineA: {
            const int m = n + 1;
            IntPoly q = BigInt(2) * T(m);
            return m % 2 == 0 ? q - IntPoly{2} : q + IntPoly{2};
        }
        case Family::AffineB: {
            const int m = n + 1;
            return BigInt(2) * (T(m) - T(m - 4));
        }
        case Family::AffineC: {
            const int m = n + 1;
            return BigInt(2) * (T(m) - T(m - 2));
        }
        case Family::AffineD: {
            const int m = n + 1;
            return IntPoly{0, 0, 8} * (T(m - 2) - T(m - 4));
        }
    }
    throw UnsupportedType("q_poly: unhandled family");
}

IntPoly a_poly(DiagramType t) { return halve_arg(q_poly(t)); }

IntPoly p_poly(DiagramType t) { return shift_arg(a_poly(t), BigInt(-2)); }

IntPoly closed_form_p(DiagramType t) {
    validate(t);
    const int n = t.rank;
    std::vector<BigInt> c;
    switch (t.family) {
        case Family::A: {
            c.resize(static_cast<size_t>(n) + 1);
            for (int j = 0; j <= n; ++j) {
                BigInt term = binomial(static_cast<unsigned>(n + j + 1), static_cast<unsigned>(2 * j + 1));
                c[static_cast<size_t>(j)] = (n + j) % 2 == 0 ? term : -term;
            }
            return IntPoly::from_coeffs(std::move(c));
        }
        case Family::B:
        case Family::C: {
            c.resize(static_cast<size_t>(n) + 1);
            for (int j = 0; j <= n; ++j) {
                BigInt num = BigInt(2 * n) * factorial(static_cast<unsigned>(n + j - 1));
                BigInt den = factorial(static_cast<unsigned>(n - j)) * factorial(static_cast<unsigned>(2 * j));
                BigInt term = exact_quotient(num, den);
                c[static_cast<size_t>(j)] = (n + j) % 2 == 0 ? term : -term;
            }
            return IntPoly::from_coeffs(std::move(c));
        }
        case Family::D: {
            c.resize(static_cast<size_t>(n));
            for (int j = 0; j <= n - 1; ++j) {
                BigInt num = BigInt(2 * n - 2) * factorial(static_cast<unsigned>(n + j - 2));
                BigInt den = factorial(static_cast<unsigned>(n - j - 1)) * factorial(static_cast<unsigned>(2 * j));
                BigInt term = exact_quotient(num, den);
                c[static_cast<size_t>(j)] = (n + j) % 2 == 0 ? -term : term;
            }
            return IntPoly{-2, 1} * IntPoly::from_coeffs(std::move(c));
        }
        default:
            throw UnsupportedType("closed_form_p: defined for families A, B, C, D");
    }
}

BigInt det_cartan_computed(DiagramType t) {
    const IntPoly p = p_poly(t);
    const int dim = is_affine_classical(t) ? t.rank + 1 : t.rank;
    BigInt v = p.coeff(0);
    return dim % 2 == 0 ? v : -v;
}

}  // namespace liecheb
