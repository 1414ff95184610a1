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

#include "liecheb/render.hpp"

#include <json.hpp>

#include <sstream>

#include "liecheb/errors.hpp"

namespace liecheb {

using nlohmann::json;

OutputFormat parse_format(std::string_view s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "latex") return OutputFormat::Latex;
    throw SpecParseError("unknown format '" + std::string(s) + "'; expected text, json or latex");
}

namespace {

// one term of a descending-power rendering; latex only changes the exponent syntax
void append_term(std::ostream& os, const BigInt& c, int k, bool first, bool latex) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag.str();
    if (k >= 1) {
        os << "x";
        if (k > 1) {
            if (latex)
                os << "^{" << k << "}";
            else
                os << "^" << k;
        }
    }
}

std::string poly_text(const IntPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        if (p.coeff(k) == 0) continue;
        append_term(os, p.coeff(k), k, first, latex);
        first = false;
    }
    return os.str();
}

json poly_json(const IntPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"variable", "x"}, {"coeffs", coeffs}};
}

}  // namespace

std::string render_poly(const IntPoly& p, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Text: return poly_text(p, false);
        case OutputFormat::Latex: return poly_text(p, true);
        case OutputFormat::Json: return poly_json(p).dump();
    }
    return {};
}

IntPoly poly_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SpecParseError(std::string("bad polynomial json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw SpecParseError("bad polynomial json: missing coeffs array");
    std::vector<BigInt> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw SpecParseError("bad polynomial json: coefficients must be strings");
        try {
            coeffs.emplace_back(c.get<std::string>());
        } catch (const std::exception&) {
            throw SpecParseError("bad polynomial json: non-integer coefficient");
        }
    }
    return IntPoly::from_coeffs(std::move(coeffs));
}

std::string render_matrix(const IntMatrix& m, OutputFormat fmt) {
    const int n = m.size();
    if (fmt == OutputFormat::Json) {
        json rows = json::array();
        for (int i = 0; i < n; ++i) {
            json row = json::array();
            for (int j = 0; j < n; ++j) row.push_back(m.at(i, j).str());
            rows.push_back(row);
        }
        return json{{"n", n}, {"entries", rows}}.dump();
    }
    std::ostringstream os;
    if (fmt == OutputFormat::Latex) {
        os << "\\begin{pmatrix} ";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                os << m.at(i, j).str();
                if (j + 1 < n) os << " & ";
            }
            if (i + 1 < n) os << " \\\\ ";
        }
        os << " \\end{pmatrix}";
        return os.str();
    }
    os << "[";
    for (int i = 0; i < n; ++i) {
        os << "[";
        for (int j = 0; j < n; ++j) {
            os << m.at(i, j).str();
            if (j + 1 < n) os << ", ";
        }
        os << "]";
        if (i + 1 < n) os << ", ";
    }
    os << "]";
    return os.str();
}

std::string render_factorization(const Factorization& f, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        json factors = json::array();
        for (const auto& factor : f.factors) {
            json jf;
            switch (factor.kind) {
                case FactorRef::Kind::Phi: jf["kind"] = "phi"; jf["index"] = factor.index; break;
                case FactorRef::Kind::Psi: jf["kind"] = "psi"; jf["index"] = factor.index; break;
                case FactorRef::Kind::Literal: {
                    jf["kind"] = "literal";
                    json coeffs = json::array();
                    for (const auto& c : factor.literal.coeffs()) coeffs.push_back(c.str());
                    jf["coeffs"] = coeffs;
                    break;
                }
            }
            jf["multiplicity"] = factor.multiplicity;
            factors.push_back(jf);
        }
        return json{{"scalar", {f.scalar.num.str(), f.scalar.den.str()}}, {"factors", factors}}.dump();
    }

    const bool latex = fmt == OutputFormat::Latex;
    std::ostringstream os;
    bool first = true;
    if (!f.scalar.is_one()) {
        if (latex)
            os << "\\tfrac{" << f.scalar.num.str() << "}{" << f.scalar.den.str() << "}";
        else
            os << "(" << f.scalar.num.str() << "/" << f.scalar.den.str() << ")";
        first = false;
    }
    if (f.factors.empty() && first) return "1";
    for (const auto& factor : f.factors) {
        if (!first) os << (latex ? " " : " * ");
        first = false;
        switch (factor.kind) {
            case FactorRef::Kind::Phi:
                os << (latex ? "\\Phi_{" + std::to_string(factor.index) + "}"
                             : "Phi_" + std::to_string(factor.index));
                break;
            case FactorRef::Kind::Psi:
                os << (latex ? "\\psi_{" + std::to_string(factor.index) + "}"
                             : "psi_" + std::to_string(factor.index));
                break;
            case FactorRef::Kind::Literal:
                os << "(" << poly_text(factor.literal, latex) << ")";
                break;
        }
        if (factor.multiplicity > 1) {
            if (latex)
                os << "^{" << factor.multiplicity << "}";
            else
                os << "^" << factor.multiplicity;
        }
    }
    return os.str();
}

IntPoly poly_from_coeff_list(const std::string& csv) {
    std::vector<BigInt> coeffs;
    std::string token;
    std::istringstream is(csv);
    while (std::getline(is, token, ',')) {
        // trim surrounding spaces
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw SpecParseError("empty coefficient in list '" + csv + "'");
        token = token.substr(b, e - b + 1);
        try {
            coeffs.emplace_back(token);
        } catch (const std::exception&) {
            throw SpecParseError("bad coefficient '" + token + "' in list");
        }
    }
    if (coeffs.empty()) throw SpecParseError("empty coefficient list");
    return IntPoly::from_coeffs(std::move(coeffs));
}

}  // namespace liecheb
