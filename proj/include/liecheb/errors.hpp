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

#ifndef LIECHEB_ERRORS_HPP
#define LIECHEB_ERRORS_HPP

#include <stdexcept>

namespace liecheb {

/// A rescaling or scalar division produced a non-integer coefficient.
struct NonIntegralResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Polynomial division left a nonzero remainder.
struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input polynomial is not palindromic.
struct NotReciprocal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input polynomial has odd degree where an even one is required.
struct OddDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input polynomial has a nonzero odd-power coefficient.
struct NotEven : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix dimension exceeds what the cofactor oracle accepts.
struct DimensionTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Diagram family/rank combination is not supported by the operation.
struct UnsupportedType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Node ordering passed to coxeter_element is not a permutation.
struct InvalidPermutation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Root iteration did not reach the residual target within the cap.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A type-spec or coefficient list could not be parsed.
struct SpecParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace liecheb

#endif
