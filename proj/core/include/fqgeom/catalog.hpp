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

#ifndef FQGEOM_CATALOG_HPP
#define FQGEOM_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "fqgeom/poly.hpp"

namespace fqgeom {

enum class CatalogId { Hyperbolic, Hermitian, FullSpace };

/// CLI names: hyperbolic, hermitian, fullspace.
const char* catalog_name(CatalogId id) noexcept;
std::optional<CatalogId> catalog_from_name(std::string_view name) noexcept;

/// X0*X1 - X2*X3, the degree-2 surface with (q+1)^2 rational points.
HomogeneousForm hyperbolic(const FieldCtx& F);

/// sum X_i^{sqrt(q)+1}, degree sqrt(q)+1; requires square q.
HomogeneousForm hermitian(const FieldCtx& F);

/// X0*X1^q - X0^q*X1 + X2*X3^q - X2^q*X3, degree q+1, vanishing on every
/// rational point of P^3.
HomogeneousForm full_space(const FieldCtx& F);

HomogeneousForm catalog_surface(CatalogId id, const FieldCtx& F);

/// Degree of the catalog surface over F_q without constructing it.
unsigned catalog_degree(CatalogId id, unsigned q);

/// (d-1)q^2 + dq + 1, the surface bound for degree-d surfaces in P^3 without
/// rational plane components.
unsigned long long elementary_bound(unsigned d, unsigned long long q);

/// (d-1)q + 1, the plane-curve bound for curves without rational line
/// components (one exceptional quartic over F_4 aside).
unsigned long long sziklai_bound(unsigned d, unsigned long long q);

struct HasseWeilBound {
    double real_value;              // q + 1 + (d-1)(d-2)sqrt(q)
    unsigned long long floor_value; // exact floor, integer arithmetic only
};

HasseWeilBound hasse_weil_bound(unsigned d, unsigned long long q);

/// floor(sqrt(n)) by integer arithmetic.
unsigned long long isqrt(unsigned long long n) noexcept;

/// sqrt(q) when q is a perfect square.
std::optional<unsigned> exact_sqrt(unsigned long long q) noexcept;

/// Degrees at which the surface bound can be attained: {2, q+1}, plus
/// sqrt(q)+1 when q is a square. Sorted ascending.
std::vector<unsigned> admissible_degrees(unsigned long long q);

} // namespace fqgeom

#endif // FQGEOM_CATALOG_HPP
