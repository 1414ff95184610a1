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

#ifndef LIECHEB_BIGINT_HPP
#define LIECHEB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "liecheb/errors.hpp"

namespace liecheb {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// a/b with a divisibility check; throws NonIntegralResult otherwise.
BigInt exact_quotient(const BigInt& a, const BigInt& b);

/// Exact rational scalar. Kept normalized: den > 0, gcd(num, den) = 1.
struct Rational {
    BigInt num{1};
    BigInt den{1};

    Rational() = default;
    Rational(BigInt n, BigInt d);

    bool is_one() const { return num == 1 && den == 1; }
    friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace liecheb

#endif
