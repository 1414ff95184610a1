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

#include "liecheb/liedata.hpp"

#include <algorithm>
#include <cctype>

#include "liecheb/errors.hpp"

namespace liecheb {

bool is_simple_finite(DiagramType t) {
    switch (t.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::E:
        case Family::F:
        case Family::G: return true;
        default: return false;
    }
}

bool is_affine_classical(DiagramType t) {
    switch (t.family) {
        case Family::AffineA:
        case Family::AffineB:
        case Family::AffineC:
        case Family::AffineD: return true;
        default: return false;
    }
}

void validate(DiagramType t) {
    const int n = t.rank;
    auto fail = [&](const char* req) {
        throw UnsupportedType("invalid rank " + std::to_string(n) + " for family (" +
                              std::string(req) + ")");
    };
    switch (t.family) {
        case Family::A:
            if (n < 1) fail("A requires n >= 1");
            break;
        case Family::B:
            if (n < 2) fail("B requires n >= 2");
            break;
        case Family::C:
            if (n < 2) fail("C requires n >= 2");
            break;
        case Family::D:
            if (n < 3) fail("D requires n >= 3");
            break;
        case Family::E:
            if (n < 6 || n > 8) fail("E requires n in {6,7,8}; use GenE for other ranks");
            break;
        case Family::F:
            if (n != 4) fail("F requires n = 4");
            break;
        case Family::G:
            if (n != 2) fail("G requires n = 2; use GenG for other ranks");
            break;
        case Family::GenE:
            if (n < 4) fail("GenE requires n >= 4");
            break;
        case Family::GenG:
            if (n < 2) fail("GenG requires n >= 2");
            break;
        case Family::AffineA:
            if (n < 1) fail("affine A requires underlying rank >= 1");
            break;
        case Family::AffineB:
            if (n < 3) fail("affine B requires underlying rank >= 3");
            break;
        case Family::AffineC:
            if (n < 2) fail("affine C requires underlying rank >= 2");
            break;
        case Family::AffineD:
            if (n < 4) fail("affine D requires underlying rank >= 4");
            break;
    }
}

DiagramType parse_diagram(std::string_view spec) {
    const char* grammar = "expected: family letter (A-G, GenE, GenG) + rank + optional '~', e.g. A5, GenE10, A3~";
    std::string_view rest = spec;
    Family fam;
    bool gen = false;
    if (rest.starts_with("GenE")) {
        fam = Family::GenE;
        gen = true;
        rest.remove_prefix(4);
    } else if (rest.starts_with("GenG")) {
        fam = Family::GenG;
        gen = true;
        rest.remove_prefix(4);
    } else if (!rest.empty()) {
        switch (rest.front()) {
            case 'A': fam = Family::A; break;
            case 'B': fam = Family::B; break;
            case 'C': fam = Family::C; break;
            case 'D': fam = Family::D; break;
            case 'E': fam = Family::E; break;
            case 'F': fam = Family::F; break;
            case 'G': fam = Family::G; break;
            default:
                throw SpecParseError("unknown family in '" + std::string(spec) + "'; " + grammar);
        }
        rest.remove_prefix(1);
    } else {
        throw SpecParseError(std::string("empty type-spec; ") + grammar);
    }

    bool affine = false;
    if (!rest.empty() && rest.back() == '~') {
        affine = true;
        rest.remove_suffix(1);
    }
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(),
                                     [](unsigned char c) { return std::isdigit(c); }))
        throw SpecParseError("bad rank in '" + std::string(spec) + "'; " + grammar);
    int rank = 0;
    for (char c : rest) {
        rank = rank * 10 + (c - '0');
        if (rank > 100000) throw SpecParseError("rank out of range in '" + std::string(spec) + "'");
    }

    if (affine) {
        if (gen) throw UnsupportedType("affine form is not available for generalized families");
        switch (fam) {
            case Family::A: fam = Family::AffineA; break;
            case Family::B: fam = Family::AffineB; break;
            case Family::C: fam = Family::AffineC; break;
            case Family::D: fam = Family::AffineD; break;
            default:
                throw UnsupportedType("affine form is only available for families A, B, C, D");
        }
    }
    DiagramType t{fam, rank};
    validate(t);
    return t;
}

std::string to_string(DiagramType t) {
    switch (t.family) {
        case Family::A: return "A" + std::to_string(t.rank);
        case Family::B: return "B" + std::to_string(t.rank);
        case Family::C: return "C" + std::to_string(t.rank);
        case Family::D: return "D" + std::to_string(t.rank);
        case Family::E: return "E" + std::to_string(t.rank);
        case Family::F: return "F" + std::to_string(t.rank);
        case Family::G: return "G" + std::to_string(t.rank);
        case Family::AffineA: return "A" + std::to_string(t.rank) + "~";
        case Family::AffineB: return "B" + std::to_string(t.rank) + "~";
        case Family::AffineC: return "C" + std::to_string(t.rank) + "~";
        case Family::AffineD: return "D" + std::to_string(t.rank) + "~";
        case Family::GenE: return "GenE" + std::to_string(t.rank);
        case Family::GenG: return "GenG" + std::to_string(t.rank);
    }
    return "?";
}

RootSystemData root_system_data(DiagramType t) {
    validate(t);
    if (!is_simple_finite(t))
        throw UnsupportedType("root_system_data: classification data exists for simple finite types only");
    if (t.family == Family::D && t.rank < 3)
        throw UnsupportedType("root_system_data: D requires rank >= 3");

    RootSystemData d;
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
            for (int i = 1; i <= n; ++i) d.exponents.push_back(i);
            d.coxeter_number = n + 1;
            d.det_cartan = n + 1;
            break;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= 2 * n - 1; i += 2) d.exponents.push_back(i);
            d.coxeter_number = 2 * n;
            d.det_cartan = 2;
            break;
        case Family::D:
            for (int i = 1; i <= 2 * n - 3; i += 2) d.exponents.push_back(i);
            d.exponents.push_back(n - 1);
            d.coxeter_number = 2 * n - 2;
            d.det_cartan = 4;
            break;
        case Family::E:
            if (n == 6) {
                d.exponents = {1, 4, 5, 7, 8, 11};
                d.coxeter_number = 12;
                d.det_cartan = 3;
            } else if (n == 7) {
                d.exponents = {1, 5, 7, 9, 11, 13, 17};
                d.coxeter_number = 18;
                d.det_cartan = 2;
            } else {
                d.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
                d.coxeter_number = 30;
                d.det_cartan = 1;
            }
            break;
        case Family::F:
            d.exponents = {1, 5, 7, 11};
            d.coxeter_number = 12;
            d.det_cartan = 1;
            break;
        case Family::G:
            d.exponents = {1, 5};
            d.coxeter_number = 6;
            d.det_cartan = 1;
            break;
        default: break;  // unreachable
    }
    std::sort(d.exponents.begin(), d.exponents.end());
    d.num_positive_roots = static_cast<long long>(d.coxeter_number) * n / 2;
    d.weyl_order = 1;
    for (int m : d.exponents) d.weyl_order *= m + 1;
    return d;
}

}  // namespace liecheb
