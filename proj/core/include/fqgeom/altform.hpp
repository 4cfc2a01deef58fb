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

#ifndef FQGEOM_ALTFORM_HPP
#define FQGEOM_ALTFORM_HPP

#include <array>
#include <string>
#include <string_view>

#include "fqgeom/linalg.hpp"
#include "fqgeom/poly.hpp"

namespace fqgeom {

/// A 4x4 alternating matrix over F_q: transpose equals the negative, zero
/// diagonal (the diagonal condition is independent in characteristic 2, where
/// alternating means symmetric with zero diagonal). The strictly upper
/// triangle [a01,a02,a03,a12,a13,a23] is the canonical serialization.
class AlternatingMatrix {
  public:
    AlternatingMatrix(const FieldCtx& F, const std::array<FieldElement, 6>& upper);

    /// Validates the alternating shape of a full matrix.
    static AlternatingMatrix from_matrix(const Mat& m);

    /// Parses `[a01,a02,a03,a12,a13,a23]` in field element syntax.
    static AlternatingMatrix parse(const FieldCtx& F, std::string_view text);

    const FieldCtx& ctx() const noexcept { return *F_; }
    FieldElement at(unsigned i, unsigned j) const;
    FieldElement upper(unsigned k) const { return {F_, u_[k]}; }
    bool is_zero() const noexcept;

    Mat to_matrix() const;
    std::string render() const;

    bool operator==(const AlternatingMatrix& o) const { return u_ == o.u_ && F_->same_field(*o.F_); }
    bool operator!=(const AlternatingMatrix& o) const { return !(*this == o); }

  private:
    const FieldCtx* F_;
    std::array<uint16_t, 6> u_;
};

/// The degree-(q+1) form sum_{i<j} a_ij (X_i X_j^q - X_i^q X_j), which
/// vanishes at every rational point of P^3.
HomogeneousForm surface_from_alternating(const AlternatingMatrix& A);

struct SymplecticNormalForm {
    Mat G;                       // invertible; transpose(G) * A * G = canonical
    AlternatingMatrix canonical; // one hyperbolic block (rank 2) or two (rank 4)
    unsigned rank;               // 2 or 4
};

/// Constructive congruence to the block normal form. Pivots are chosen at
/// the first nonzero entry in row-major order, so G is deterministic.
SymplecticNormalForm symplectic_normal_form(const AlternatingMatrix& A);

enum class AltRankClass { Rank2Split, Rank4Extremal };

const char* alt_rank_class_name(AltRankClass c) noexcept;

/// Rank 2: the surface splits into q+1 rational linear factors. Rank 4: the
/// surface is plane-free with all theta_q(3) points.
AltRankClass rank_classify(const AlternatingMatrix& A);

/// True iff raising every entry to the p^k power fixes the matrix, i.e. all
/// entries lie in the p^k-element subfield.
bool frobenius_matrix_check(const Mat& G, unsigned subfield_degree);

/// transpose(G) * A * G as an AlternatingMatrix.
AlternatingMatrix alt_congruence(const AlternatingMatrix& A, const Mat& G);

} // namespace fqgeom

#endif // FQGEOM_ALTFORM_HPP
