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

#include "liecheb/chebyshev.hpp"

#include <stdexcept>
#include <utility>

#include "liecheb/cyclotomic.hpp"

namespace liecheb {

IntPoly cheb(ChebKind kind, int n) {
    if (n < 0) throw std::invalid_argument("cheb: n must be >= 0");
    IntPoly prev{1};
    if (n == 0) return prev;
    IntPoly cur = kind == ChebKind::First ? IntPoly{0, 1} : IntPoly{0, 2};
    const IntPoly two_x{0, 2};
    for (int k = 1; k < n; ++k) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly cheb_closed_form(ChebKind kind, int n) {
    if (n < 1) throw std::invalid_argument("cheb_closed_form: n must be >= 1");
    std::vector<BigInt> c(static_cast<size_t>(n) + 1);
    BigInt two_pow = 1;  // 2^(n-2j) built top-down
    for (int k = 0; k < n; ++k) two_pow *= 2;
    for (int j = 0; 2 * j <= n; ++j) {
        const int deg = n - 2 * j;
        BigInt term;
        if (kind == ChebKind::Second) {
            term = binomial(static_cast<unsigned>(n - j), static_cast<unsigned>(j)) * two_pow;
        } else {
            // n (n-j-1)! / (j! (n-2j)!) * 2^(n-2j) / 2, all divisions exact
            BigInt num = BigInt(n) * factorial(static_cast<unsigned>(n - j - 1)) * two_pow;
            BigInt den = factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(deg)) * 2;
            term = exact_quotient(num, den);
        }
        c[static_cast<size_t>(deg)] = (j % 2 == 0) ? term : -term;
        two_pow >>= 2;  // next degree drops by 2
    }
    return IntPoly::from_coeffs(std::move(c));
}

Factorization factor_U(int n) {
    if (n < 1) throw std::invalid_argument("factor_U: n must be >= 1");
    Factorization f;
    for (int j : divisors(2 * n + 2))
        if (j != 1 && j != 2) f.factors.push_back(FactorRef::psi(j));
    return f;
}

Factorization factor_T(int n) {
    if (n < 1) throw std::invalid_argument("factor_T: n must be >= 1");
    int odd = n;
    int r = 4;
    while (odd % 2 == 0) {
        odd /= 2;
        r *= 2;
    }
    Factorization f;
    f.scalar = Rational(BigInt(1), BigInt(2));
    for (int j : divisors(odd)) f.factors.push_back(FactorRef::psi(r * j));
    return f;
}

IntPoly expand_chebyshev_factorization(const Factorization& f) {
    Factorization plain = f;
    plain.scalar = Rational();
    IntPoly prod = scale_arg(expand(plain), BigInt(2));
    if (f.scalar.is_one()) return prod;
    prod = f.scalar.num * prod;
    std::vector<BigInt> v(prod.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k)
        v[k] = exact_quotient(prod.coeff(static_cast<int>(k)), f.scalar.den);
    return IntPoly::from_coeffs(std::move(v));
}

}  // namespace liecheb
