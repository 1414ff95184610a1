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

#include "liecheb/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "liecheb/cartan.hpp"
#include "liecheb/chebyshev.hpp"
#include "liecheb/coxeter.hpp"
#include "liecheb/cyclotomic.hpp"
#include "liecheb/errors.hpp"
#include "liecheb/render.hpp"
#include "liecheb/spectral.hpp"

namespace liecheb {

Suite parse_suite(std::string_view s) {
    if (s == "tables") return Suite::Tables;
    if (s == "sine") return Suite::Sine;
    if (s == "spectra") return Suite::Spectra;
    if (s == "odes") return Suite::Odes;
    if (s == "all") return Suite::All;
    throw SpecParseError("unknown suite '" + std::string(s) + "'; expected tables, sine, spectra, odes or all");
}

std::vector<DiagramType> simple_types_up_to(int max_rank) {
    std::vector<DiagramType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= 8 && n <= max_rank; ++n) out.push_back({Family::E, n});
    if (max_rank >= 4) out.push_back({Family::F, 4});
    if (max_rank >= 2) out.push_back({Family::G, 2});
    return out;
}

namespace {

class Runner {
  public:
    void check(const std::string& name, bool pass, const std::string& detail = "") {
        results_.push_back({name, pass, pass ? "" : detail});
    }

    template <typename T>
    void check_eq(const std::string& name, const T& got, const T& expected) {
        if (got == expected) {
            results_.push_back({name, true, ""});
        } else {
            std::ostringstream os;
            os << "expected " << describe(expected) << ", got " << describe(got);
            results_.push_back({name, false, os.str()});
        }
    }

    void check_near(const std::string& name, double got, double expected, double tol) {
        const double err = std::abs(got - expected);
        std::ostringstream os;
        os << "expected " << expected << " +- " << tol << ", got " << got;
        results_.push_back({name, err <= tol, err <= tol ? "" : os.str()});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

  private:
    static std::string describe(const IntPoly& p) { return render_poly(p, OutputFormat::Text); }
    static std::string describe(const BigInt& v) { return v.str(); }
    static std::string describe(long long v) { return std::to_string(v); }
    static std::string describe(int v) { return std::to_string(v); }
    static std::string describe(bool v) { return v ? "true" : "false"; }

    std::vector<CheckResult> results_;
};

void suite_tables(Runner& r, int max_rank) {
    for (DiagramType t : simple_types_up_to(max_rank)) {
        const std::string id = to_string(t);
        const RootSystemData data = root_system_data(t);
        r.check_eq("tables/" + id + "/det", det_cartan_computed(t), BigInt(data.det_cartan));

        bool duality = true;
        const size_t l = data.exponents.size();
        for (size_t i = 0; i < l; ++i)
            duality &= data.exponents[i] + data.exponents[l - 1 - i] == data.coxeter_number;
        r.check("tables/" + id + "/exponent-duality", duality);
        r.check("tables/" + id + "/h-times-rank",
                static_cast<long long>(data.coxeter_number) * t.rank == 2 * data.num_positive_roots);
        BigInt weyl = 1;
        for (int m : data.exponents) weyl *= m + 1;
        r.check_eq("tables/" + id + "/weyl-order", weyl, data.weyl_order);
        bool in_range = true;
        for (int m : data.exponents) in_range &= m > 0 && m < data.coxeter_number;
        r.check("tables/" + id + "/exponent-range", in_range);

        const IntPoly f = coxeter_polynomial(t);
        r.check_eq("tables/" + id + "/coxeter-factorization", expand(coxeter_factorization(t)), f);
        if (t.family == Family::B || t.family == Family::C) {
            IntPoly xn1 = IntPoly::monomial(t.rank) + IntPoly{1};
            r.check_eq("tables/" + id + "/coxeter-closed-form", f, xn1);
        } else if (t.family == Family::D) {
            IntPoly ref = IntPoly::monomial(t.rank) + IntPoly::monomial(t.rank - 1) + IntPoly{1, 1};
            r.check_eq("tables/" + id + "/coxeter-closed-form", f, ref);
        } else if (t.family == Family::A) {
            std::vector<BigInt> ones(static_cast<size_t>(t.rank) + 1, BigInt(1));
            r.check_eq("tables/" + id + "/coxeter-closed-form", f, IntPoly::from_coeffs(ones));
        }
    }
}

void suite_sine(Runner& r, int max_rank) {
    for (DiagramType t : simple_types_up_to(max_rank)) {
        const std::string id = to_string(t);
        const SineCheck s = sine_formula_check(t);
        r.check("sine/" + id + "/residual", s.residual < 1e-9,
                "residual " + std::to_string(s.residual));
        r.check_eq("sine/" + id + "/a-at-2", eval_int(a_poly(t), BigInt(2)), BigInt(s.det));
    }
}

void suite_spectra(Runner& r, int max_rank) {
    for (DiagramType t : simple_types_up_to(max_rank)) {
        const std::string id = to_string(t);
        const SpectralReport rep = spectrum_check(t);
        r.check("spectra/" + id + "/closed-form", rep.max_residual < 1e-8,
                "max residual " + std::to_string(rep.max_residual));
        // {xi} = {4 - xi} as the exact identity p(x) = (-1)^n p(4 - x);
        // the float multiset version is meaningful up to rank 12, beyond
        // which the squared-cosine root clustering defeats any root finder
        const IntPoly p = p_poly(t);
        IntPoly mirrored = shift_arg(scale_arg(p, BigInt(-1)), BigInt(-4));
        if (t.rank % 2 == 1) mirrored = -mirrored;
        r.check_eq("spectra/" + id + "/cartan-mirror", mirrored, p);
        if (t.rank <= 12)
            r.check("spectra/" + id + "/cartan-pairing", rep.cartan_pairing_residual < 1e-8,
                    "pairing residual " + std::to_string(rep.cartan_pairing_residual));
        r.check("spectra/" + id + "/spherical", rep.classification == Classification::Spherical);

        // adjacency spectrum is symmetric under negation
        const auto& ev = rep.eigenvalues;
        std::vector<std::complex<double>> neg(ev.size());
        for (size_t k = 0; k < ev.size(); ++k) neg[k] = -ev[k];
        std::sort(neg.begin(), neg.end(), [](const auto& u, const auto& v) {
            if (u.real() != v.real()) return u.real() < v.real();
            return u.imag() < v.imag();
        });
        double sym = 0.0;
        for (size_t k = 0; k < ev.size(); ++k) sym = std::max(sym, std::abs(ev[k] - neg[k]));
        r.check("spectra/" + id + "/negation-symmetry", sym < 1e-8, "asymmetry " + std::to_string(sym));
    }
    for (int n = 1; n <= max_rank; ++n) {
        // Cartan bands up to rank 12 (see the conditioning note above),
        // adjacency bands at every rank
        if (n <= 12) {
            auto lambda = toeplitz_eigenvalues(-1.0, 2.0, -1.0, n);
            std::sort(lambda.begin(), lambda.end());
            const auto xi = roots(p_poly({Family::A, n}));
            double worst = 0.0;
            for (int k = 0; k < n; ++k)
                worst = std::max(worst,
                                 std::abs(xi[static_cast<size_t>(k)] - lambda[static_cast<size_t>(k)]));
            r.check("spectra/A" + std::to_string(n) + "/toeplitz", worst < 1e-8,
                    "max deviation " + std::to_string(worst));
        }
        auto bands = toeplitz_eigenvalues(1.0, 0.0, 1.0, n);
        std::sort(bands.begin(), bands.end());
        const auto ev = roots(a_poly({Family::A, n}));
        double adj_worst = 0.0;
        for (int k = 0; k < n; ++k)
            adj_worst = std::max(adj_worst,
                                 std::abs(ev[static_cast<size_t>(k)] - bands[static_cast<size_t>(k)]));
        r.check("spectra/A" + std::to_string(n) + "/toeplitz-adjacency", adj_worst < 1e-8,
                "max deviation " + std::to_string(adj_worst));
    }
    if (max_rank >= 9) {
        const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
        std::vector<double> golden = {-2.0, -tau, -1.0, -1.0 / tau, 0.0, 1.0 / tau, 1.0, tau, 2.0};
        const auto ev = roots(a_poly({Family::GenE, 9}));
        double worst = 0.0;
        for (size_t k = 0; k < ev.size(); ++k) worst = std::max(worst, std::abs(ev[k] - golden[k]));
        r.check("spectra/GenE9/golden-spectrum", worst < 1e-8, "max deviation " + std::to_string(worst));
        r.check("spectra/GenE9/affine", classify({Family::GenE, 9}) == Classification::Affine);
    }
    if (max_rank >= 10) {
        r.check("spectra/GenE10/hyperbolic", classify({Family::GenE, 10}) == Classification::Hyperbolic);
        const IntPoly lehmer = coxeter_polynomial({Family::GenE, 10});
        r.check("spectra/GenE10/salem", salem_check(lehmer));
        r.check_near("spectra/GenE10/mahler", mahler_measure(lehmer), 1.1762808, 1e-4);
    }
}

void suite_odes(Runner& r, int) {
    for (int n = 0; n <= 20; ++n) {
        const IntPoly u = cheb(ChebKind::Second, n);
        const IntPoly tn = cheb(ChebKind::First, n);
        const IntPoly one_minus_x2{1, 0, -1};
        const IntPoly u_ode = one_minus_x2 * derivative(derivative(u)) -
                              IntPoly{0, 3} * derivative(u) + BigInt(n * (n + 2)) * u;
        const IntPoly t_ode = one_minus_x2 * derivative(derivative(tn)) -
                              IntPoly{0, 1} * derivative(tn) + BigInt(n * n) * tn;
        r.check("odes/U" + std::to_string(n), u_ode.is_zero());
        r.check("odes/T" + std::to_string(n), t_ode.is_zero());
    }
    for (int n = 1; n <= 40; ++n) {
        r.check_eq("odes/closed-form-U" + std::to_string(n),
                   cheb_closed_form(ChebKind::Second, n), cheb(ChebKind::Second, n));
        r.check_eq("odes/closed-form-T" + std::to_string(n),
                   cheb_closed_form(ChebKind::First, n), cheb(ChebKind::First, n));
    }
    for (int n = 1; n <= 40; ++n) {
        const IntPoly u = cheb(ChebKind::Second, n);
        const IntPoly tn = cheb(ChebKind::First, n);
        r.check_eq("odes/U-at-1-n" + std::to_string(n), eval_int(u, BigInt(1)), BigInt(n + 1));
        r.check_eq("odes/T-at-1-n" + std::to_string(n), eval_int(tn, BigInt(1)), BigInt(1));
        const BigInt u0 = eval_int(u, BigInt(0));
        const BigInt t0 = eval_int(tn, BigInt(0));
        const BigInt expect0 = n % 2 == 1 ? BigInt(0) : (n / 2 % 2 == 0 ? BigInt(1) : BigInt(-1));
        r.check_eq("odes/U-at-0-n" + std::to_string(n), u0, expect0);
        r.check_eq("odes/T-at-0-n" + std::to_string(n), t0, expect0);
        // parity p(-x) = (-1)^n p(x)
        const IntPoly u_neg = scale_arg(u, BigInt(-1));
        const IntPoly t_neg = scale_arg(tn, BigInt(-1));
        r.check("odes/parity-n" + std::to_string(n),
                u_neg == (n % 2 == 0 ? u : -u) && t_neg == (n % 2 == 0 ? tn : -tn));
    }
}

void suite_exact_extras(Runner& r, int max_rank) {
    // three-way characteristic polynomial agreement
    for (DiagramType t : simple_types_up_to(std::min(max_rank, 8))) {
        const std::string id = to_string(t);
        const CartanBundle b = build(t);
        const IntPoly via_q = p_poly(t);
        r.check_eq("exact/" + id + "/charpoly-fl", char_poly(b.cartan), via_q);
        r.check_eq("exact/" + id + "/charpoly-oracle", char_poly_oracle(b.cartan), via_q);
        r.check_eq("exact/" + id + "/adjacency", char_poly(b.adjacency), a_poly(t));
    }
    // Q/f consistency and psi/Phi mirroring
    for (DiagramType t : simple_types_up_to(max_rank)) {
        const std::string id = to_string(t);
        const IntPoly q_assoc = associated_Q(t);
        r.check_eq("exact/" + id + "/Q-even-part", even_part_descend(q_assoc), coxeter_polynomial(t));
        r.check_eq("exact/" + id + "/Q-expand", expand(Q_factorization(t)), q_assoc);
        r.check_eq("exact/" + id + "/a-expand", expand(a_factorization(t)), a_poly(t));
        r.check("exact/" + id + "/mirror-indices",
                a_factorization(t).index_multiset() == Q_factorization(t).index_multiset());
    }
    // Chebyshev factorizations
    for (int n = 1; n <= std::max(12, 2 * max_rank); ++n) {
        r.check_eq("exact/factor-U" + std::to_string(n),
                   expand_chebyshev_factorization(factor_U(n)), cheb(ChebKind::Second, n));
        r.check_eq("exact/factor-T" + std::to_string(n),
                   expand_chebyshev_factorization(factor_T(n)), cheb(ChebKind::First, n));
    }
    // cyclotomic recursion
    for (int n = 1; n <= 64; ++n) {
        IntPoly prod{1};
        for (int d : divisors(n)) prod = prod * phi(d);
        IntPoly xn_minus_1 = IntPoly::monomial(n) - IntPoly{1};
        r.check_eq("exact/cyclo-product-" + std::to_string(n), prod, xn_minus_1);
    }
    // affine q identities against the extended matrices
    const int cap = std::min(max_rank, 10);
    for (int l = 1; l <= cap; ++l) {
        for (Family fam : {Family::AffineA, Family::AffineB, Family::AffineC, Family::AffineD}) {
            DiagramType t{fam, l};
            try {
                validate(t);
            } catch (const UnsupportedType&) {
                continue;
            }
            const CartanBundle b = build_affine(t);
            const IntPoly det_route = scale_arg(char_poly(-b.adjacency), BigInt(2));
            r.check_eq("exact/" + to_string(t) + "/affine-q", q_poly(t), det_route);
            r.check_eq("exact/" + to_string(t) + "/affine-det", det(b.cartan), BigInt(0));
        }
    }
}

}  // namespace

std::vector<CheckResult> run_verification(Suite suite, int max_rank) {
    if (max_rank < 1) throw std::invalid_argument("run_verification: max_rank must be >= 1");
    Runner r;
    if (suite == Suite::Tables || suite == Suite::All) suite_tables(r, max_rank);
    if (suite == Suite::Sine || suite == Suite::All) suite_sine(r, max_rank);
    if (suite == Suite::Spectra || suite == Suite::All) suite_spectra(r, max_rank);
    if (suite == Suite::Odes || suite == Suite::All) suite_odes(r, max_rank);
    if (suite == Suite::All) suite_exact_extras(r, max_rank);
    return r.take();
}

}  // namespace liecheb
