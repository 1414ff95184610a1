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

#ifndef LIECHEB_VERIFY_HPP
#define LIECHEB_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "liecheb/liedata.hpp"

namespace liecheb {

enum class Suite { Tables, Sine, Spectra, Odes, All };

Suite parse_suite(std::string_view s);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // expected vs actual on failure
};

/// Batch verification driver. Checks are pure and reported in a fixed
/// (type, check) order regardless of execution.
std::vector<CheckResult> run_verification(Suite suite, int max_rank);

/// All simple finite types with rank <= max_rank, in report order.
std::vector<DiagramType> simple_types_up_to(int max_rank);

}  // namespace liecheb

#endif
