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

#include "liecheb/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace liecheb {

namespace {
const BigInt kZero{0};

void normalize(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

IntPoly::IntPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::initializer_list<BigInt> low_to_high) : coeffs_(low_to_high) {
    normalize(coeffs_);
}

IntPoly IntPoly::from_coeffs(std::vector<BigInt> low_to_high) {
    IntPoly p;
    p.coeffs_ = std::move(low_to_high);
    normalize(p.coeffs_);
    return p;
}

IntPoly IntPoly::monomial(int deg, BigInt c) {
    if (deg < 0) throw std::invalid_argument("monomial: negative degree");
    if (c == 0) return {};
    std::vector<BigInt> v(static_cast<size_t>(deg) + 1);
    v.back() = std::move(c);
    return from_coeffs(std::move(v));
}

const BigInt& IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> v = coeffs_;
    for (auto& c : v) c = -c;
    return from_coeffs(std::move(v));
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    std::vector<BigInt> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (size_t k = 0; k < v.size(); ++k)
        v[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    return IntPoly::from_coeffs(std::move(v));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
    std::vector<BigInt> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (size_t k = 0; k < v.size(); ++k)
        v[k] = p.coeff(static_cast<int>(k)) - q.coeff(static_cast<int>(k));
    return IntPoly::from_coeffs(std::move(v));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> v(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < q.coeffs_.size(); ++j)
            v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return IntPoly::from_coeffs(std::move(v));
}

IntPoly operator*(const BigInt& c, const IntPoly& p) {
    if (c == 0 || p.is_zero()) return {};
    std::vector<BigInt> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return IntPoly::from_coeffs(std::move(v));
}

BigInt eval_int(const IntPoly& p, const BigInt& x) {
    BigInt r = 0;
    for (int k = p.degree(); k >= 0; --k) r = r * x + p.coeff(k);
    return r;
}

double eval_float(const IntPoly& p, double x) {
    double r = 0.0;
    for (int k = p.degree(); k >= 0; --k) r = r * x + p.coeff(k).convert_to<double>();
    return r;
}

IntPoly shift_arg(const IntPoly& p, const BigInt& c) {
    // Horner in (x + c)
    IntPoly r;
    const IntPoly xc{c, 1};
    for (int k = p.degree(); k >= 0; --k) r = r * xc + IntPoly(p.coeff(k));
    return r;
}

IntPoly scale_arg(const IntPoly& p, const BigInt& c) {
    std::vector<BigInt> v(p.coeffs().size());
    BigInt ck = 1;
    for (size_t k = 0; k < v.size(); ++k) {
        v[k] = p.coeff(static_cast<int>(k)) * ck;
        ck *= c;
    }
    return IntPoly::from_coeffs(std::move(v));
}

IntPoly halve_arg(const IntPoly& p) {
    std::vector<BigInt> v(p.coeffs().size());
    BigInt pow = 1;
    for (size_t k = 0; k < v.size(); ++k) {
        const BigInt& c = p.coeff(static_cast<int>(k));
        if (c % pow != 0)
            throw NonIntegralResult("halve_arg: coefficient of x^" + std::to_string(k) +
                                    " is not divisible by 2^" + std::to_string(k));
        v[k] = c / pow;
        pow <<= 1;
    }
    return IntPoly::from_coeffs(std::move(v));
}

IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    if (p.is_zero()) return {};
    if (p.degree() < d.degree()) throw InexactDivision("exact_div: degree of dividend below divisor");
    const int dd = d.degree();
    std::vector<BigInt> rem = p.coeffs();
    std::vector<BigInt> q(static_cast<size_t>(p.degree() - dd) + 1);
    const BigInt& lead = d.leading();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        BigInt& top = rem[static_cast<size_t>(k + dd)];
        if (top % lead != 0) throw InexactDivision("exact_div: leading coefficient does not divide");
        BigInt c = top / lead;
        if (c != 0)
            for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(k + i)] -= c * d.coeff(i);
        q[static_cast<size_t>(k)] = std::move(c);
    }
    for (const auto& r : rem)
        if (r != 0) throw InexactDivision("exact_div: nonzero remainder");
    return IntPoly::from_coeffs(std::move(q));
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<BigInt> v(static_cast<size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k) v[static_cast<size_t>(k - 1)] = k * p.coeff(k);
    return IntPoly::from_coeffs(std::move(v));
}

IntPoly reciprocal_descend(const IntPoly& q) {
    if (q.is_zero()) throw NotReciprocal("reciprocal_descend: zero polynomial");
    const int d = q.degree();
    if (d % 2 != 0) throw OddDegree("reciprocal_descend: degree must be even");
    for (int j = 0; j <= d; ++j)
        if (q.coeff(j) != q.coeff(d - j))
            throw NotReciprocal("reciprocal_descend: coefficients are not palindromic");
    const int m = d / 2;
    // q(x)/x^m = q_m + sum_{k>=1} q_{m+k} (x^k + x^-k); substitute the basis.
    IntPoly psi{q.coeff(m)};
    IntPoly b_prev{2};                   // b_0
    IntPoly b_cur = IntPoly::variable(); // b_1
    for (int k = 1; k <= m; ++k) {
        psi = psi + q.coeff(m + k) * b_cur;
        IntPoly b_next = IntPoly::variable() * b_cur - b_prev;
        b_prev = std::move(b_cur);
        b_cur = std::move(b_next);
    }
    return psi;
}

IntPoly reciprocal_ascend(const IntPoly& psi) {
    if (psi.is_zero()) return {};
    const int m = psi.degree();
    // x^m psi(x + 1/x) = sum_k psi_k x^(m-k) (x^2 + 1)^k
    const IntPoly x2p1{1, 0, 1};
    IntPoly acc;
    IntPoly power{1};
    for (int k = 0; k <= m; ++k) {
        acc = acc + psi.coeff(k) * (IntPoly::monomial(m - k) * power);
        if (k < m) power = power * x2p1;
    }
    return acc;
}

IntPoly even_part_descend(const IntPoly& q) {
    for (int k = 1; k <= q.degree(); k += 2)
        if (q.coeff(k) != 0)
            throw NotEven("even_part_descend: nonzero odd coefficient at x^" + std::to_string(k));
    std::vector<BigInt> v(static_cast<size_t>(q.degree() / 2) + 1);
    if (q.is_zero()) return {};
    for (int k = 0; 2 * k <= q.degree(); ++k) v[static_cast<size_t>(k)] = q.coeff(2 * k);
    return IntPoly::from_coeffs(std::move(v));
}

BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c < 0 ? BigInt(-c) : c);
    return g;
}

}  // namespace liecheb
