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

#ifndef FQGEOM_POLY_HPP
#define FQGEOM_POLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqgeom/gf.hpp"
#include "fqgeom/linalg.hpp"
#include "fqgeom/projgeom.hpp"

namespace fqgeom {

/// Exponent vector of a monomial; entries beyond nvars stay zero. Ordered
/// lexicographically (std::array's operator<), which on equal total degree is
/// the graded lexicographic term order.
using Expo = std::array<uint8_t, 4>;

/// A nonzero homogeneous polynomial in 3 (U,V,W) or 4 (X0..X3) variables over
/// F_q, stored sparsely. Degree 0 (a nonzero constant) is permitted so that
/// repeated exact division stays closed; parsing and geometry use degree >= 1.
class HomogeneousForm {
  public:
    static HomogeneousForm from_terms(const FieldCtx& F, unsigned nvars,
                                      const std::vector<std::pair<Expo, FieldElement>>& terms);

    const FieldCtx& ctx() const noexcept { return *F_; }
    unsigned nvars() const noexcept { return nvars_; }
    unsigned degree() const noexcept { return deg_; }
    const std::map<Expo, FieldElement>& terms() const noexcept { return terms_; }

    /// Coefficient of the given monomial (zero if absent).
    FieldElement coeff(const Expo& e) const;

    FieldElement evaluate(const std::vector<FieldElement>& affine) const;
    FieldElement evaluate(const ProjPoint& P) const;

    /// Scalar-class representative: the graded-lex-least term gets
    /// coefficient 1.
    HomogeneousForm canonical_scaled() const;
    bool proportional_to(const HomogeneousForm& o) const;

    HomogeneousForm operator+(const HomogeneousForm& o) const;
    HomogeneousForm operator-(const HomogeneousForm& o) const;
    HomogeneousForm operator*(const HomogeneousForm& o) const;
    HomogeneousForm operator-() const;
    HomogeneousForm scaled(const FieldElement& c) const;
    HomogeneousForm pow(unsigned k) const;

    std::string render() const;

    bool operator==(const HomogeneousForm& o) const;
    bool operator!=(const HomogeneousForm& o) const { return !(*this == o); }
    bool operator<(const HomogeneousForm& o) const; // total order for set keys

  private:
    HomogeneousForm(const FieldCtx& F, unsigned nvars, unsigned deg, std::map<Expo, FieldElement> t)
        : F_(&F), nvars_(nvars), deg_(deg), terms_(std::move(t)) {}

    const FieldCtx* F_;
    unsigned nvars_, deg_;
    std::map<Expo, FieldElement> terms_;

    friend class FormBuilder;
};

/// Parses `[±]c*X0^a0*X1^a1*...` terms joined by +/-; U,V,W name the three
/// ternary variables; exponent 1 and coefficient 1 may be omitted;
/// coefficients use the field element syntax.
HomogeneousForm parse_form(const FieldCtx& F, std::string_view text);

FieldElement evaluate(const HomogeneousForm& f, const ProjPoint& P);

/// Restriction of a 4-variable form to the plane H: the ternary form
/// g(u,v,w) = f(u*P0 + v*P1 + w*P2) over the canonical frame P0,P1,P2 of H.
/// Throws identically_zero_on_plane when H divides f.
HomogeneousForm restrict_to_plane(const HomogeneousForm& f, const ProjPlane& H);

struct LinearDivision {
    std::optional<HomogeneousForm> quotient; // set iff exact
    bool exact = false;
};

/// Exact division test by a nonzero linear form.
LinearDivision divide_by_linear(const HomogeneousForm& f, const HomogeneousForm& linear);

/// All F_q-rational linear factors of f, multiplicity respected, found by
/// trial division against the theta_q(nvars-1) normalized linear forms
/// (first nonzero coefficient 1), in dual point enumeration order.
std::vector<HomogeneousForm> fq_linear_components(const HomogeneousForm& f, const Budget& budget = Budget{});

/// The linear form whose coefficient vector is the dual point's coordinates.
HomogeneousForm linear_form_from_dual(const ProjPoint& dual);

/// Variable substitution X_i -> sum_j G(i,j) X_j for a square nvars x nvars
/// matrix G. Throws zero_form when a singular G annihilates f.
HomogeneousForm substitute_linear(const HomogeneousForm& f, const Mat& G);

} // namespace fqgeom

#endif // FQGEOM_POLY_HPP
