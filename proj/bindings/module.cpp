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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liecheb/cartan.hpp"
#include "liecheb/chebyshev.hpp"
#include "liecheb/coxeter.hpp"
#include "liecheb/cyclotomic.hpp"
#include "liecheb/errors.hpp"
#include "liecheb/render.hpp"
#include "liecheb/spectral.hpp"
#include "liecheb/verify.hpp"

namespace py = pybind11;
using namespace liecheb;

namespace {

py::object to_py_int(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

BigInt from_py_int(const py::handle& obj) {
    return BigInt(py::str(obj).cast<std::string>());
}

py::list poly_to_list(const IntPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_py_int(c));
    return out;
}

IntPoly poly_from_list(const py::sequence& seq) {
    std::vector<BigInt> coeffs;
    for (const auto& item : seq) coeffs.push_back(from_py_int(item));
    return IntPoly::from_coeffs(std::move(coeffs));
}

py::list matrix_to_list(const IntMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.size(); ++i) {
        py::list row;
        for (int j = 0; j < m.size(); ++j) row.append(to_py_int(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::dict factorization_to_dict(const Factorization& f) {
    py::dict out;
    out["scalar"] = py::make_tuple(to_py_int(f.scalar.num), to_py_int(f.scalar.den));
    py::list factors;
    for (const auto& factor : f.factors) {
        py::dict d;
        switch (factor.kind) {
            case FactorRef::Kind::Phi: d["kind"] = "phi"; d["index"] = factor.index; break;
            case FactorRef::Kind::Psi: d["kind"] = "psi"; d["index"] = factor.index; break;
            case FactorRef::Kind::Literal:
                d["kind"] = "literal";
                d["coeffs"] = poly_to_list(factor.literal);
                break;
        }
        d["multiplicity"] = factor.multiplicity;
        factors.append(d);
    }
    out["factors"] = factors;
    return out;
}

CartanBundle bundle_for(const std::string& spec) {
    const DiagramType t = parse_diagram(spec);
    return is_affine_classical(t) ? build_affine(t) : build(t);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact polynomial toolkit for Dynkin diagram spectra";

    py::register_exception<UnsupportedType>(m, "UnsupportedTypeError", PyExc_ValueError);
    py::register_exception<SpecParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NonIntegralResult>(m, "NonIntegralError", PyExc_ArithmeticError);
    py::register_exception<InexactDivision>(m, "InexactDivisionError", PyExc_ArithmeticError);

    m.def("cartan_matrix", [](const std::string& spec) { return matrix_to_list(bundle_for(spec).cartan); },
          py::arg("type"), "Cartan (or extended Cartan) matrix as nested lists of ints.");
    m.def("adjacency_matrix",
          [](const std::string& spec) { return matrix_to_list(bundle_for(spec).adjacency); },
          py::arg("type"));

    m.def("q_poly", [](const std::string& s) { return poly_to_list(q_poly(parse_diagram(s))); },
          py::arg("type"), "det(2xI + A) coefficients, low to high.");
    m.def("a_poly", [](const std::string& s) { return poly_to_list(a_poly(parse_diagram(s))); },
          py::arg("type"));
    m.def("p_poly", [](const std::string& s) { return poly_to_list(p_poly(parse_diagram(s))); },
          py::arg("type"));
    m.def("associated_q", [](const std::string& s) { return poly_to_list(associated_Q(parse_diagram(s))); },
          py::arg("type"));
    m.def("coxeter_polynomial",
          [](const std::string& s) { return poly_to_list(coxeter_polynomial(parse_diagram(s))); },
          py::arg("type"));

    m.def("char_poly", [](const py::sequence& rows) {
        const int n = static_cast<int>(py::len(rows));
        IntMatrix mat(n);
        for (int i = 0; i < n; ++i) {
            py::sequence row = rows[i].cast<py::sequence>();
            if (static_cast<int>(py::len(row)) != n)
                throw std::invalid_argument("char_poly: matrix must be square");
            for (int j = 0; j < n; ++j) mat.at(i, j) = from_py_int(row[j]);
        }
        return poly_to_list(char_poly(mat));
    }, py::arg("matrix"), "Characteristic polynomial of a square integer matrix.");

    m.def("cheb_t", [](int n) { return poly_to_list(cheb(ChebKind::First, n)); }, py::arg("n"));
    m.def("cheb_u", [](int n) { return poly_to_list(cheb(ChebKind::Second, n)); }, py::arg("n"));
    m.def("phi", [](int n) { return poly_to_list(phi(n)); }, py::arg("n"),
          "n-th cyclotomic polynomial coefficients, low to high.");
    m.def("psi", [](int n) { return poly_to_list(psi(n)); }, py::arg("n"),
          "Minimal polynomial of 2cos(2pi/n).");

    m.def("factor_u", [](int n) { return factorization_to_dict(factor_U(n)); }, py::arg("n"));
    m.def("factor_t", [](int n) { return factorization_to_dict(factor_T(n)); }, py::arg("n"));
    m.def("q_factorization",
          [](const std::string& s) { return factorization_to_dict(Q_factorization(parse_diagram(s))); },
          py::arg("type"));
    m.def("a_factorization",
          [](const std::string& s) { return factorization_to_dict(a_factorization(parse_diagram(s))); },
          py::arg("type"));
    m.def("coxeter_factorization",
          [](const std::string& s) {
              return factorization_to_dict(coxeter_factorization(parse_diagram(s)));
          },
          py::arg("type"));

    m.def("root_system_data", [](const std::string& s) {
        const RootSystemData d = root_system_data(parse_diagram(s));
        py::dict out;
        out["exponents"] = d.exponents;
        out["coxeter_number"] = d.coxeter_number;
        out["det_cartan"] = d.det_cartan;
        out["num_positive_roots"] = d.num_positive_roots;
        out["weyl_order"] = to_py_int(d.weyl_order);
        return out;
    }, py::arg("type"));

    m.def("roots", [](const py::sequence& coeffs) { return roots(poly_from_list(coeffs)); },
          py::arg("coeffs"), "Complex roots, Aberth-Ehrlich iteration.");
    m.def("mahler_measure",
          [](const py::sequence& coeffs) { return mahler_measure(poly_from_list(coeffs)); },
          py::arg("coeffs"));
    m.def("salem_check", [](const py::sequence& coeffs) { return salem_check(poly_from_list(coeffs)); },
          py::arg("coeffs"));

    m.def("spectrum", [](const std::string& s) {
        const SpectralReport rep = spectrum_check(parse_diagram(s));
        py::dict out;
        out["eigenvalues"] = rep.eigenvalues;
        out["predicted"] = rep.predicted;
        out["max_residual"] = rep.max_residual;
        out["cartan_pairing_residual"] = rep.cartan_pairing_residual;
        out["spectral_radius"] = rep.spectral_radius;
        out["classification"] = rep.classification == Classification::Spherical  ? "spherical"
                                : rep.classification == Classification::Affine  ? "affine"
                                                                                 : "hyperbolic";
        return out;
    }, py::arg("type"));

    m.def("sine_formula", [](const std::string& s) {
        const SineCheck c = sine_formula_check(parse_diagram(s));
        return py::make_tuple(c.lhs, c.det, c.residual);
    }, py::arg("type"));

    m.def("verify", [](const std::string& suite, int max_rank) {
        py::list failures;
        for (const auto& c : run_verification(parse_suite(suite), max_rank))
            if (!c.pass) failures.append(py::make_tuple(c.name, c.detail));
        return failures;
    }, py::arg("suite") = "all", py::arg("max_rank") = 10,
       "Run a verification suite; returns the list of failed checks.");
}
