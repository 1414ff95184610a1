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

#include "liecheb/coxeter.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "liecheb/cyclotomic.hpp"
#include "liecheb/errors.hpp"

namespace liecheb {

namespace {

Factorization from_counts(const std::map<int, int>& counts, FactorRef::Kind kind) {
    Factorization f;
    for (const auto& [index, mult] : counts)
        f.factors.push_back(kind == FactorRef::Kind::Phi ? FactorRef::phi(index, mult)
                                                         : FactorRef::psi(index, mult));
    return f;
}

// index multiset of the Coxeter polynomial factorization, simple types
std::map<int, int> coxeter_indices(DiagramType t) {
    const int n = t.rank;
    std::map<int, int> counts;
    auto xn_plus_1 = [&](int k) {  // indices of the x^k + 1 factorization
        int odd = k, m = 1;
        while (odd % 2 == 0) {
            odd /= 2;
            m *= 2;
        }
        for (int d : divisors(odd)) counts[2 * m * d] += 1;
    };
    switch (t.family) {
        case Family::A:
            for (int d : divisors(n + 1))
                if (d != 1) counts[d] += 1;
            break;
        case Family::B:
        case Family::C:
            xn_plus_1(n);
            break;
        case Family::D:
            counts[2] += 1;
            xn_plus_1(n - 1);
            break;
        case Family::E:
            if (n == 6) { counts[3]++; counts[12]++; }
            else if (n == 7) { counts[2]++; counts[18]++; }
            else { counts[30]++; }
            break;
        case Family::F: counts[12]++; break;
        case Family::G: counts[6]++; break;
        default: break;
    }
    return counts;
}

// index multiset of the Q factorization, simple types
std::map<int, int> q_indices(DiagramType t) {
    const int n = t.rank;
    std::map<int, int> counts;
    auto shifted = [&](int k) {  // Phi_{rd}, d | N odd, with k = 2^a N, r = 2^(a+2)
        int odd = k, r = 4;
        while (odd % 2 == 0) {
            odd /= 2;
            r *= 2;
        }
        for (int d : divisors(odd)) counts[r * d] += 1;
    };
    switch (t.family) {
        case Family::A:
            for (int j : divisors(2 * n + 2))
                if (j != 1 && j != 2) counts[j] += 1;
            break;
        case Family::B:
        case Family::C:
            shifted(n);
            break;
        case Family::D:
            counts[4] += 1;
            shifted(n - 1);
            break;
        case Family::E:
            if (n == 6) { counts[3]++; counts[6]++; counts[24]++; }
            else if (n == 7) { counts[4]++; counts[36]++; }
            else { counts[60]++; }
            break;
        case Family::F: counts[24]++; break;
        case Family::G: counts[12]++; break;
        default: break;
    }
    return counts;
}

bool factorization_allowed(DiagramType t) {
    if (is_simple_finite(t)) return true;
    // spherical or affine generalized diagrams stay cyclotomic
    if (t.family == Family::GenE) return t.rank <= 9;
    if (t.family == Family::GenG) return t.rank <= 3;
    return false;
}

// exact trial division by Phi_j (or psi_j), ascending j
Factorization factor_by_trial(const IntPoly& target, FactorRef::Kind kind) {
    IntPoly rem = target;
    std::map<int, int> counts;
    const int bound = 4 * target.degree() * target.degree() + 64;
    for (int j = 1; j <= bound && rem.degree() > 0; ++j) {
        // degree test via the totient before materializing the factor
        const int base_deg = j <= 2 ? 1 : (kind == FactorRef::Kind::Phi ? euler_phi(j) : euler_phi(j) / 2);
        if (base_deg > rem.degree()) continue;
        const IntPoly base = kind == FactorRef::Kind::Phi ? phi(j) : psi(j);
        for (;;) {
            try {
                IntPoly quo = exact_div(rem, base);
                rem = std::move(quo);
                counts[j] += 1;
            } catch (const InexactDivision&) {
                break;
            }
            if (rem.degree() == 0) break;
        }
    }
    if (!(rem == IntPoly{1}))
        throw UnsupportedType("factorization: polynomial has a non-cyclotomic factor");
    return from_counts(counts, kind);
}

}  // namespace

std::vector<IntMatrix> simple_reflections(const CartanBundle& bundle) {
    const int n = bundle.cartan.size();
    std::vector<IntMatrix> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        IntMatrix s = IntMatrix::identity(n);
        for (int j = 0; j < n; ++j) s.at(i, j) -= bundle.cartan.at(i, j);
        out.push_back(std::move(s));
    }
    return out;
}

IntMatrix coxeter_element(const CartanBundle& bundle, const std::vector<int>& order) {
    const int n = bundle.cartan.size();
    if (static_cast<int>(order.size()) != n)
        throw InvalidPermutation("coxeter_element: order must list every node once");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : order) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw InvalidPermutation("coxeter_element: order is not a permutation of 1.." +
                                     std::to_string(n));
        seen[static_cast<size_t>(v - 1)] = true;
    }
    const auto sigmas = simple_reflections(bundle);
    IntMatrix r = IntMatrix::identity(n);
    for (int v : order) r = r * sigmas[static_cast<size_t>(v - 1)];
    return r;
}

IntMatrix coxeter_element(const CartanBundle& bundle) {
    std::vector<int> order(static_cast<size_t>(bundle.cartan.size()));
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i) + 1;
    return coxeter_element(bundle, order);
}

std::optional<long long> coxeter_order(const IntMatrix& m, long long cap) {
    IntMatrix power = m;
    for (long long k = 1; k <= cap; ++k) {
        if (power.is_identity()) return k;
        power = power * m;
    }
    return std::nullopt;
}

IntPoly coxeter_polynomial(DiagramType t) {
    validate(t);
    if (is_affine_classical(t))
        throw UnsupportedType("coxeter_polynomial: affine classical types are not supported");
    return char_poly(coxeter_element(build(t)));
}

Factorization coxeter_factorization(DiagramType t) {
    validate(t);
    if (!factorization_allowed(t))
        throw UnsupportedType("coxeter_factorization: polynomial is not cyclotomic for " + to_string(t));
    if (is_simple_finite(t)) return from_counts(coxeter_indices(t), FactorRef::Kind::Phi);
    return factor_by_trial(coxeter_polynomial(t), FactorRef::Kind::Phi);
}

IntPoly associated_Q(DiagramType t) {
    validate(t);
    if (is_affine_classical(t))
        throw UnsupportedType("associated_Q: affine classical types are not supported");
    return reciprocal_ascend(a_poly(t));
}

Factorization Q_factorization(DiagramType t) {
    validate(t);
    if (!factorization_allowed(t))
        throw UnsupportedType("Q_factorization: polynomial is not cyclotomic for " + to_string(t));
    if (is_simple_finite(t)) return from_counts(q_indices(t), FactorRef::Kind::Phi);
    return factor_by_trial(associated_Q(t), FactorRef::Kind::Phi);
}

Factorization a_factorization(DiagramType t) {
    validate(t);
    if (!factorization_allowed(t))
        throw UnsupportedType("a_factorization: polynomial is not cyclotomic for " + to_string(t));
    if (is_simple_finite(t)) return from_counts(q_indices(t), FactorRef::Kind::Psi);
    return factor_by_trial(a_poly(t), FactorRef::Kind::Psi);
}

CoxeterReport coxeter_report(DiagramType t) {
    validate(t);
    if (is_affine_classical(t))
        throw UnsupportedType("coxeter_report: affine classical types are not supported");
    CoxeterReport rep;
    rep.diagram = t;
    const CartanBundle bundle = build(t);
    rep.coxeter_element = coxeter_element(bundle);
    rep.coxeter_poly = char_poly(rep.coxeter_element);
    long long cap = 1000;
    if (is_simple_finite(t)) cap = 10LL * root_system_data(t).coxeter_number;
    rep.coxeter_order = coxeter_order(rep.coxeter_element, cap);
    rep.q_assoc = associated_Q(t);
    if (factorization_allowed(t)) {
        rep.f_factors = coxeter_factorization(t);
        rep.Q_factors = Q_factorization(t);
    }
    return rep;
}

}  // namespace liecheb
