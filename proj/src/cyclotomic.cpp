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

#include "liecheb/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace liecheb {

FactorRef FactorRef::phi(int index, int multiplicity) {
    FactorRef f;
    f.kind = Kind::Phi;
    f.index = index;
    f.multiplicity = multiplicity;
    return f;
}

FactorRef FactorRef::psi(int index, int multiplicity) {
    FactorRef f;
    f.kind = Kind::Psi;
    f.index = index;
    f.multiplicity = multiplicity;
    return f;
}

FactorRef FactorRef::lit(IntPoly p, int multiplicity) {
    FactorRef f;
    f.kind = Kind::Literal;
    f.literal = std::move(p);
    f.multiplicity = multiplicity;
    return f;
}

std::vector<int> Factorization::index_multiset() const {
    std::vector<int> out;
    for (const auto& f : factors) {
        if (f.kind == FactorRef::Kind::Literal) continue;
        for (int k = 0; k < f.multiplicity; ++k) out.push_back(f.index);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> divisors(int n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<int> d;
    for (int i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly phi(int n) {
    if (n < 1) throw std::invalid_argument("phi: n must be >= 1");
    static std::map<int, IntPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntPoly result;
    if (n == 1) {
        result = IntPoly{-1, 1};
    } else {
        // x^n - 1 divided by the Phi_d of all proper divisors d
        std::vector<BigInt> xn(static_cast<size_t>(n) + 1);
        xn[0] = -1;
        xn[static_cast<size_t>(n)] = 1;
        IntPoly num = IntPoly::from_coeffs(std::move(xn));
        for (int d : divisors(n))
            if (d != n) num = exact_div(num, phi(d));
        result = std::move(num);
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(n, std::move(result)).first->second;
}

IntPoly psi(int n) {
    if (n < 1) throw std::invalid_argument("psi: n must be >= 1");
    if (n == 1) return IntPoly{-2, 1};
    if (n == 2) return IntPoly{2, 1};
    return reciprocal_descend(phi(n));
}

Factorization phi_of_square(int j) {
    if (j < 1) throw std::invalid_argument("phi_of_square: j must be >= 1");
    Factorization f;
    if (j % 2 == 0) {
        f.factors.push_back(FactorRef::phi(2 * j));
    } else {
        f.factors.push_back(FactorRef::phi(j));
        f.factors.push_back(FactorRef::phi(2 * j));
    }
    return f;
}

Factorization factor_xn_plus_1(int n) {
    if (n < 1) throw std::invalid_argument("factor_xn_plus_1: n must be >= 1");
    int odd = n;
    int m = 1;
    while (odd % 2 == 0) {
        odd /= 2;
        m *= 2;
    }
    Factorization f;
    for (int d : divisors(odd)) f.factors.push_back(FactorRef::phi(2 * m * d));
    return f;
}

IntPoly expand(const Factorization& f) {
    IntPoly prod{1};
    for (const auto& factor : f.factors) {
        IntPoly base;
        switch (factor.kind) {
            case FactorRef::Kind::Phi: base = phi(factor.index); break;
            case FactorRef::Kind::Psi: base = psi(factor.index); break;
            case FactorRef::Kind::Literal: base = factor.literal; break;
        }
        for (int k = 0; k < factor.multiplicity; ++k) prod = prod * base;
    }
    if (f.scalar.is_one()) return prod;
    prod = f.scalar.num * prod;
    if (f.scalar.den == 1) return prod;
    std::vector<BigInt> v(prod.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k)
        v[k] = exact_quotient(prod.coeff(static_cast<int>(k)), f.scalar.den);
    return IntPoly::from_coeffs(std::move(v));
}

}  // namespace liecheb
