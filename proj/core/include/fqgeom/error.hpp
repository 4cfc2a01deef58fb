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

#ifndef FQGEOM_ERROR_HPP
#define FQGEOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fqgeom {

/// Error codes shared by all modules. Every throwing operation documents
/// which codes it can raise.
enum class errc {
    not_prime,
    degree_zero,
    budget_exceeded,
    division_by_zero,
    field_mismatch,
    q_not_square,
    syntax_error,
    not_homogeneous,
    zero_form,
    identically_zero_on_plane,
    plane_component,
    component_present,
    not_alternating,
    zero_matrix,
    not_bijective,
    precondition_violated,
    config_error,
    internal,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what_arg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace fqgeom

#endif // FQGEOM_ERROR_HPP
