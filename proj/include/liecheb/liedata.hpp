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

#ifndef LIECHEB_LIEDATA_HPP
#define LIECHEB_LIEDATA_HPP

#include <string>
#include <string_view>
#include <vector>

#include "liecheb/bigint.hpp"

namespace liecheb {

enum class Family {
    A, B, C, D, E, F, G,
    AffineA, AffineB, AffineC, AffineD,
    GenE, GenG,
};

/// A diagram family plus rank. For affine families the rank is that of
/// the underlying finite diagram (the matrix gains one extra node).
struct DiagramType {
    Family family;
    int rank;

    friend bool operator==(const DiagramType&, const DiagramType&) = default;
};

bool is_simple_finite(DiagramType t);
bool is_affine_classical(DiagramType t);

/// Throws UnsupportedType unless the family/rank combination is valid:
/// A n>=1, B n>=2, C n>=2, D n>=3, E in {6,7,8}, F n=4, G n=2,
/// GenE n>=4, GenG n>=2, affine A n>=1, B n>=3, C n>=2, D n>=4.
void validate(DiagramType t);

/// Grammar: family letter + rank, optional trailing "~" for affine
/// classical types. Examples: "A5", "D7", "E8", "GenE10", "A3~".
DiagramType parse_diagram(std::string_view spec);

std::string to_string(DiagramType t);

struct RootSystemData {
    std::vector<int> exponents;  // sorted, length = rank
    int coxeter_number = 0;
    long long det_cartan = 0;
    long long num_positive_roots = 0;  // h * rank / 2
    BigInt weyl_order;                 // prod (m_i + 1)
};

/// Classification data for the simple finite types.
RootSystemData root_system_data(DiagramType t);

}  // namespace liecheb

#endif
