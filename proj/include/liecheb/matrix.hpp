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

#ifndef LIECHEB_MATRIX_HPP
#define LIECHEB_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "liecheb/bigint.hpp"
#include "liecheb/poly.hpp"

namespace liecheb {

/// Small dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(int n);
    IntMatrix(std::initializer_list<std::initializer_list<BigInt>> rows);

    static IntMatrix identity(int n);

    int size() const { return n_; }
    BigInt& at(int i, int j) { return entries_[static_cast<size_t>(i) * n_ + j]; }
    const BigInt& at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }

    BigInt trace() const;
    bool is_identity() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    IntMatrix operator-() const;
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  private:
    int n_ = 0;
    std::vector<BigInt> entries_;
};

/// det(xI - M) by Faddeev-LeVerrier; every internal division is exact.
IntPoly char_poly(const IntMatrix& m);

/// Same contract as char_poly via cofactor expansion over the polynomial
/// ring. Independent of the Faddeev-LeVerrier path. Requires n <= 10.
IntPoly char_poly_oracle(const IntMatrix& m);

BigInt det(const IntMatrix& m);

}  // namespace liecheb

#endif
