/*
   Copyright 2026 The fqgeom authors

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

#include "fqgeom/error.hpp"

namespace fqgeom {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::degree_zero: return "DegreeZero";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::q_not_square: return "QNotSquare";
        case errc::syntax_error: return "SyntaxError";
        case errc::not_homogeneous: return "NotHomogeneous";
        case errc::zero_form: return "ZeroForm";
        case errc::identically_zero_on_plane: return "IdenticallyZeroOnPlane";
        case errc::plane_component: return "PlaneComponent";
        case errc::component_present: return "ComponentPresent";
        case errc::not_alternating: return "NotAlternating";
        case errc::zero_matrix: return "ZeroMatrix";
        case errc::not_bijective: return "NotBijective";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::config_error: return "ConfigError";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

} // namespace fqgeom
