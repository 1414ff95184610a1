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

#ifndef LIECHEB_RENDER_HPP
#define LIECHEB_RENDER_HPP

#include <string>
#include <string_view>

#include "liecheb/factorization.hpp"
#include "liecheb/matrix.hpp"
#include "liecheb/poly.hpp"

namespace liecheb {

enum class OutputFormat { Text, Json, Latex };

OutputFormat parse_format(std::string_view s);

/// Text and LaTeX print descending powers; JSON is
/// {"variable":"x","coeffs":["c0","c1",...]} with decimal-string
/// coefficients low-to-high (strings, so consumers never overflow).
std::string render_poly(const IntPoly& p, OutputFormat fmt);

/// Inverse of render_poly(Json); throws SpecParseError on bad input.
IntPoly poly_from_json(const std::string& json_text);

std::string render_matrix(const IntMatrix& m, OutputFormat fmt);

/// JSON schema: {"scalar":["num","den"],"factors":[{"kind":"phi"|"psi"|
/// "literal","index":n,"multiplicity":m},...]}.
std::string render_factorization(const Factorization& f, OutputFormat fmt);

/// Comma-separated coefficient list "c0,c1,..." low-to-high.
IntPoly poly_from_coeff_list(const std::string& csv);

}  // namespace liecheb

#endif
