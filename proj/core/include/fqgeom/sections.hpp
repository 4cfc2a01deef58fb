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

#ifndef FQGEOM_SECTIONS_HPP
#define FQGEOM_SECTIONS_HPP

#include <map>
#include <set>
#include <span>
#include <utility>

#include "fqgeom/catalog.hpp"
#include "fqgeom/poly.hpp"
#include "fqgeom/projgeom.hpp"

namespace fqgeom {

/// Exact number of rational zeros of f in P^{nvars-1}(F_q).
unsigned long long count_points(const HomogeneousForm& f, const Budget& budget = Budget{});

/// What a plane section of a surface looks like. A pencil is a full split of
/// the restricted form into rational lines through a common point; an
/// extremal curve has no rational line component and exactly (d-1)q+1 points;
/// everything else is Other.
struct SectionClass {
    enum class Kind { PlanarPencil, ExtremalCurve, Other };

    Kind kind;
    unsigned long long count = 0; // rational points of the section

    // PlanarPencil
    std::optional<ProjPoint> vertex;      // common point, in P^3 coordinates
    std::vector<ProjLine> lines;          // the distinct lines, in P^3
    std::vector<HomogeneousForm> factors; // ternary linear factors, multiplicity kept
    bool repeated = false;                // some factor occurs more than once

    // Other
    std::vector<HomogeneousForm> line_components;
};

/// Classifies S cap H. Throws plane_component when H divides S.
SectionClass classify_section(const HomogeneousForm& S, const ProjPlane& H, const Budget& budget = Budget{});

struct SectionCensus {
    unsigned long long nu1 = 0;  // pencil planes
    unsigned long long nu2 = 0;  // extremal-curve planes
    unsigned long long other = 0;
};

/// Tally of classify_section over all theta_q(3) planes. Throws
/// plane_component when S has a rational plane component.
SectionCensus section_census(const HomogeneousForm& S, const Budget& budget = Budget{});

/// The same tally over an arbitrary subset of planes; summing the censuses of
/// any partition of the full plane set reproduces section_census.
SectionCensus section_census_over(const HomogeneousForm& S, std::span<const ProjPlane> planes,
                                  const Budget& budget = Budget{});

/// The vertex map: every pencil plane of S paired with its vertex. Verifies
/// the map is injective and lands bijectively on S(F_q); throws not_bijective
/// otherwise.
std::vector<std::pair<ProjPlane, ProjPoint>> pencil_vertex_bijection(const HomogeneousForm& S,
                                                                     const Budget& budget = Budget{});

struct LineAudit {
    unsigned alpha = 0; // #(l cap S(F_q))
    unsigned beta = 0;  // #{H through l : S cap H is a pencil}
};

LineAudit line_audit(const HomogeneousForm& S, const ProjLine& l, const Budget& budget = Budget{});

/// All attained values of #(l cap S(F_q)) over every line of P^3.
std::set<unsigned> line_spectrum(const HomogeneousForm& S, const Budget& budget = Budget{});

/// Line tallies of a plane curve by intersection size: x0, x1, xd count the
/// lines meeting C in 0, 1, d rational points; sizes outside {0,1,d} land in
/// `other` (reported, not rejected; the {0,1,d} restriction needs ambient
/// hypotheses a standalone curve cannot certify).
struct TangencyCensus {
    unsigned d = 0;
    unsigned long long x0 = 0, x1 = 0, xd = 0;
    std::map<unsigned, unsigned long long> other;
};

/// Requires a curve without rational line components and with exactly
/// (d-1)q+1 points; throws precondition_violated otherwise.
TangencyCensus tangency_census(const HomogeneousForm& C, const Budget& budget = Budget{});

/// Closed forms for the tallies of such a curve, as exact reduced rationals:
/// x1 = (d-1)q+1, xd = q((d-1)q+1)/d, x0 = q(q-(d-1)^2)/d. x0 is nonnegative
/// exactly when (d-1)^2 <= q.
struct TangencyExpected {
    unsigned long long x1;
    long long xd_num, xd_den;
    long long x0_num, x0_den;
};

TangencyExpected tangency_expected(unsigned d, unsigned long long q);

/// The dual coordinates of a line of P^2 (cross product of the spanning
/// pair), as a normalized point of the dual plane.
ProjPoint line_dual(const ProjLine& l);

/// The degree-4 plane curve (U+V+W)^4 + (UV+VW+WU)^2 + UVW(U+V+W) over F_4,
/// the unique curve exceeding the plane-curve bound. Requires the F_4
/// context.
HomogeneousForm exceptional_quartic(const FieldCtx& F);

/// Lines meeting C in exactly 2 rational points, both with contact of
/// multiplicity >= 2 (repeated root of the restricted binary form).
std::vector<ProjLine> bitangents(const HomogeneousForm& C, const Budget& budget = Budget{});

struct BoundReport {
    unsigned d = 0;
    unsigned long long N = 0;
    unsigned long long bound = 0; // surface bound for 4 variables, curve bound for 3
    bool attains = false;
    std::optional<HasseWeilBound> hasse_weil; // curves only
};

/// Throws component_present when a rational plane (resp. line) component
/// makes the bound inapplicable.
BoundReport bound_check(const HomogeneousForm& S, const Budget& budget = Budget{});

/// The counting argument that shuts out the 14-point quartic as a surface
/// section: (q+1)(n-2)+2 with n = 14, q = 4 stays below the degree-4 surface
/// bound.
struct ExclusionReport {
    unsigned long long curve_points = 0;      // 14
    unsigned planes_through_line = 0;         // q+1
    unsigned long long section_ceiling = 0;   // (q+1)(n-2)+2
    unsigned long long surface_bound = 0;     // degree-4 surface bound
    bool excluded = false;                    // ceiling < bound
};

ExclusionReport exceptional_exclusion(const FieldCtx& F);

} // namespace fqgeom

#endif // FQGEOM_SECTIONS_HPP
