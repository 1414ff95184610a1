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

#include "liecheb/matrix.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace liecheb {

IntMatrix::IntMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n) {
    if (n < 1) throw std::invalid_argument("IntMatrix: dimension must be >= 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<BigInt>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        int j = 0;
        for (const auto& v : row) at(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool IntMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& v : r.entries_) v = -v;
    return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix add: dimension mismatch");
    IntMatrix r = a;
    for (size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix mul: dimension mismatch");
    const int n = a.n_;
    IntMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

IntPoly char_poly(const IntMatrix& m) {
    const int n = m.size();
    std::vector<BigInt> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    IntMatrix mk = m;
    c[static_cast<size_t>(n - 1)] = -mk.trace();
    for (int k = 2; k <= n; ++k) {
        IntMatrix t = mk;
        for (int i = 0; i < n; ++i) t.at(i, i) += c[static_cast<size_t>(n - k + 1)];
        mk = m * t;
        BigInt tr = mk.trace();
        // the division by k is provably exact for integer matrices
        if (tr % k != 0) throw std::logic_error("char_poly: inexact Faddeev-LeVerrier step");
        c[static_cast<size_t>(n - k)] = -tr / k;
    }
    return IntPoly::from_coeffs(std::move(c));
}

IntPoly char_poly_oracle(const IntMatrix& m) {
    const int n = m.size();
    if (n > 10) throw DimensionTooLarge("char_poly_oracle: dimension above 10");
    // entries of xI - M
    std::vector<IntPoly> b(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntPoly e{-m.at(i, j)};
            if (i == j) e = e + IntPoly::variable();
            b[static_cast<size_t>(i) * n + j] = std::move(e);
        }
    // Laplace expansion memoized over column subsets; the row index is
    // determined by the subset size (rows are consumed bottom-up).
    const uint32_t full = (1u << n) - 1;
    std::vector<IntPoly> memo(full + 1);
    memo[0] = IntPoly{1};
    for (uint32_t mask = 1; mask <= full; ++mask) {
        const int r = n - std::popcount(mask);
        IntPoly acc;
        int sign = 1;
        for (int j = 0; j < n; ++j) {
            if (!((mask >> j) & 1u)) continue;
            const IntPoly term = b[static_cast<size_t>(r) * n + j] * memo[mask ^ (1u << j)];
            acc = sign > 0 ? acc + term : acc - term;
            sign = -sign;
        }
        memo[mask] = std::move(acc);
    }
    return memo[full];
}

BigInt det(const IntMatrix& m) {
    const IntPoly p = char_poly(m);
    BigInt d = p.coeff(0);  // det(xI - M) at 0 is (-1)^n det M
    return m.size() % 2 == 0 ? d : -d;
}

}  // namespace liecheb
