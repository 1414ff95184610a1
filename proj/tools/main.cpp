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

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

#include "liecheb/cartan.hpp"
#include "liecheb/chebyshev.hpp"
#include "liecheb/coxeter.hpp"
#include "liecheb/cyclotomic.hpp"
#include "liecheb/errors.hpp"
#include "liecheb/render.hpp"
#include "liecheb/spectral.hpp"
#include "liecheb/verify.hpp"

namespace {

using namespace liecheb;

// exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 unsupported type/which combination
constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsageError = 2;
constexpr int kUnsupported = 3;

struct Options {
    std::string format = "text";
    std::string type_spec;
    std::string matrix_which = "cartan";
    std::string poly_which = "p";
    std::string suite = "all";
    int max_rank = 10;
    std::string factor_target;
    std::string factor_arg;
    std::string coeffs;
};

int parse_count(const std::string& s) {
    size_t pos = 0;
    int n = 0;
    try {
        n = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw SpecParseError("expected a positive integer, got '" + s + "'");
    }
    if (pos != s.size() || n < 1) throw SpecParseError("expected a positive integer, got '" + s + "'");
    return n;
}

CartanBundle bundle_for(DiagramType t) {
    return is_affine_classical(t) ? build_affine(t) : build(t);
}

int cmd_matrix(const Options& opt) {
    const OutputFormat fmt = parse_format(opt.format);
    const DiagramType t = parse_diagram(opt.type_spec);
    IntMatrix m;
    if (opt.matrix_which == "cartan") {
        m = bundle_for(t).cartan;
    } else if (opt.matrix_which == "adjacency") {
        m = bundle_for(t).adjacency;
    } else if (opt.matrix_which == "extended") {
        if (is_affine_classical(t)) {
            m = build_affine(t).cartan;
        } else {
            Family f;
            switch (t.family) {
                case Family::A: f = Family::AffineA; break;
                case Family::B: f = Family::AffineB; break;
                case Family::C: f = Family::AffineC; break;
                case Family::D: f = Family::AffineD; break;
                default:
                    throw UnsupportedType("extended matrices are available for classical families only");
            }
            m = build_affine({f, t.rank}).cartan;
        }
    } else {
        throw SpecParseError("--which must be cartan, adjacency or extended");
    }
    std::cout << render_matrix(m, fmt) << "\n";
    return kOk;
}

int cmd_poly(const Options& opt) {
    const OutputFormat fmt = parse_format(opt.format);
    const DiagramType t = parse_diagram(opt.type_spec);
    IntPoly p;
    if (opt.poly_which == "p") {
        p = p_poly(t);
    } else if (opt.poly_which == "a") {
        p = a_poly(t);
    } else if (opt.poly_which == "q") {
        p = q_poly(t);
    } else if (opt.poly_which == "Q") {
        p = associated_Q(t);
    } else if (opt.poly_which == "f") {
        p = coxeter_polynomial(t);
    } else {
        throw SpecParseError("--which must be one of p, a, q, Q, f");
    }
    std::cout << render_poly(p, fmt) << "\n";
    return kOk;
}

int cmd_factor(const Options& opt) {
    const OutputFormat fmt = parse_format(opt.format);
    Factorization f;
    IntPoly target;
    if (opt.factor_target == "chebyshev-u") {
        const int n = parse_count(opt.factor_arg);
        f = factor_U(n);
        target = cheb(ChebKind::Second, n);
        std::cout << render_factorization(f, fmt) << "\n";
        std::cout << (expand_chebyshev_factorization(f) == target ? "verified: product matches"
                                                                  : "verification FAILED")
                  << "\n";
        return expand_chebyshev_factorization(f) == target ? kOk : kVerifyFailure;
    }
    if (opt.factor_target == "chebyshev-t") {
        const int n = parse_count(opt.factor_arg);
        f = factor_T(n);
        target = cheb(ChebKind::First, n);
        std::cout << render_factorization(f, fmt) << "\n";
        std::cout << (expand_chebyshev_factorization(f) == target ? "verified: product matches"
                                                                  : "verification FAILED")
                  << "\n";
        return expand_chebyshev_factorization(f) == target ? kOk : kVerifyFailure;
    }
    if (opt.factor_target == "phi-square") {
        const int j = parse_count(opt.factor_arg);
        f = phi_of_square(j);
        target = scale_arg(phi(j), BigInt(1));
        // Phi_j(x^2): spread the coefficients onto even powers
        std::vector<BigInt> spread(static_cast<size_t>(2 * target.degree()) + 1);
        for (int k = 0; k <= target.degree(); ++k) spread[static_cast<size_t>(2 * k)] = target.coeff(k);
        target = IntPoly::from_coeffs(std::move(spread));
    } else if (opt.factor_target == "xn+1") {
        const int n = parse_count(opt.factor_arg);
        f = factor_xn_plus_1(n);
        target = IntPoly::monomial(n) + IntPoly{1};
    } else if (opt.factor_target == "coxeter") {
        const DiagramType t = parse_diagram(opt.factor_arg);
        f = coxeter_factorization(t);
        target = coxeter_polynomial(t);
    } else if (opt.factor_target == "Q") {
        const DiagramType t = parse_diagram(opt.factor_arg);
        f = Q_factorization(t);
        target = associated_Q(t);
    } else if (opt.factor_target == "a") {
        const DiagramType t = parse_diagram(opt.factor_arg);
        f = a_factorization(t);
        target = a_poly(t);
    } else {
        throw SpecParseError("unknown factor target '" + opt.factor_target +
                             "'; expected chebyshev-u, chebyshev-t, phi-square, xn+1, coxeter, Q or a");
    }
    std::cout << render_factorization(f, fmt) << "\n";
    const bool ok = expand(f) == target;
    std::cout << (ok ? "verified: product matches" : "verification FAILED") << "\n";
    return ok ? kOk : kVerifyFailure;
}

int cmd_verify(const Options& opt) {
    const Suite suite = parse_suite(opt.suite);
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = run_verification(suite, opt.max_rank);
    size_t failures = 0;
    for (const auto& c : results) {
        if (c.pass) {
            std::cout << "PASS " << c.name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
        }
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    std::cout << results.size() - failures << "/" << results.size() << " checks passed in "
              << elapsed.count() << " ms\n";
    return failures == 0 ? kOk : kVerifyFailure;
}

int cmd_mahler(const Options& opt) {
    IntPoly p;
    if (!opt.coeffs.empty()) {
        p = poly_from_coeff_list(opt.coeffs);
    } else if (!opt.type_spec.empty()) {
        p = coxeter_polynomial(parse_diagram(opt.type_spec));
    } else {
        throw SpecParseError("mahler needs --coeffs or --type");
    }
    if (p.degree() < 1) throw SpecParseError("mahler: polynomial degree must be >= 1");
    const double m = mahler_measure(p);
    const bool salem = p.degree() >= 2 && salem_check(p);
    std::printf("mahler measure: %.9g\n", m);
    std::printf("salem: %s\n", salem ? "true" : "false");
    return kOk;
}

int cmd_spectrum(const Options& opt) {
    const DiagramType t = parse_diagram(opt.type_spec);
    const SpectralReport rep = spectrum_check(t);
    std::cout << "type: " << to_string(t) << "\n";
    std::cout << "eigenvalues:";
    for (const auto& z : rep.eigenvalues) {
        if (std::abs(z.imag()) < 1e-12)
            std::printf(" %.10g", z.real());
        else
            std::printf(" %.10g%+.10gi", z.real(), z.imag());
    }
    std::cout << "\n";
    if (!rep.predicted.empty()) {
        std::cout << "predicted 2cos(m_i pi/h):";
        for (double v : rep.predicted) std::printf(" %.10g", v);
        std::printf("\nmax residual: %.3e\n", rep.max_residual);
    }
    std::printf("cartan pairing residual: %.3e\n", rep.cartan_pairing_residual);
    std::printf("spectral radius: %.10g\n", rep.spectral_radius);
    const char* cls = rep.classification == Classification::Spherical  ? "spherical"
                      : rep.classification == Classification::Affine  ? "affine"
                                                                       : "hyperbolic";
    std::cout << "classification: " << cls << "\n";
    if (is_simple_finite(t)) {
        const SineCheck s = sine_formula_check(t);
        std::printf("sine formula: lhs %.12g, det %lld, residual %.3e\n", s.lhs, s.det, s.residual);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polynomial toolkit for Dynkin diagram spectra"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format: text, json or latex")
        ->capture_default_str();

    auto* matrix = app.add_subcommand("matrix", "print a Cartan/adjacency/extended matrix");
    matrix->add_option("type", opt.type_spec, "diagram, e.g. A5, GenE10, A3~")->required();
    matrix->add_option("--which", opt.matrix_which, "cartan|adjacency|extended")
        ->capture_default_str();

    auto* poly = app.add_subcommand("poly", "print a characteristic/Coxeter polynomial");
    poly->add_option("type", opt.type_spec, "diagram, e.g. A5, GenE10, A3~")->required();
    poly->add_option("--which", opt.poly_which, "p|a|q|Q|f")->capture_default_str();

    auto* factor = app.add_subcommand("factor", "print an irreducible factorization");
    factor->add_option("target", opt.factor_target,
                       "chebyshev-u|chebyshev-t|phi-square|xn+1|coxeter|Q|a")
        ->required();
    factor->add_option("arg", opt.factor_arg, "index n or diagram type")->required();

    auto* verify = app.add_subcommand("verify", "run the identity verification suites");
    verify->add_option("--suite", opt.suite, "tables|sine|spectra|odes|all")->capture_default_str();
    verify->add_option("--max-rank", opt.max_rank, "largest classical rank to check")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* mahler = app.add_subcommand("mahler", "Mahler measure and Salem verdict");
    mahler->add_option("--coeffs", opt.coeffs, "comma-separated coefficients, low to high");
    mahler->add_option("--type", opt.type_spec, "diagram whose Coxeter polynomial is measured");

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues vs closed-form predictions");
    spectrum->add_option("type", opt.type_spec, "diagram, e.g. E8")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (app.got_subcommand(matrix)) return cmd_matrix(opt);
        if (app.got_subcommand(poly)) return cmd_poly(opt);
        if (app.got_subcommand(factor)) return cmd_factor(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(mahler)) return cmd_mahler(opt);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(opt);
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const UnsupportedType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailure;
    }
    return kUsageError;
}
