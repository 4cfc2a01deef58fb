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

#ifndef FQGEOM_PROJGEOM_HPP
#define FQGEOM_PROJGEOM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fqgeom/gf.hpp"
#include "fqgeom/linalg.hpp"

namespace fqgeom {

/// A point of P^r(F_q), r in {1,2,3}, stored as the canonical representative
/// with first nonzero coordinate equal to 1.
class ProjPoint {
  public:
    ProjPoint(const FieldCtx& F, std::vector<FieldElement> coords);

    static ProjPoint parse(const FieldCtx& F, std::string_view text);

    const FieldCtx& ctx() const noexcept { return *F_; }
    const std::vector<FieldElement>& coords() const noexcept { return c_; }
    unsigned dim() const noexcept { return static_cast<unsigned>(c_.size()) - 1; }

    /// Strictly monotone in lexicographic coordinate-index order; doubles as
    /// a hash/set key.
    uint32_t key() const noexcept;

    std::string render() const;

    bool operator==(const ProjPoint& o) const { return c_.size() == o.c_.size() && key() == o.key(); }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const { return key() < o.key(); }

  private:
    const FieldCtx* F_;
    std::vector<FieldElement> c_;
};

/// A plane of P^3(F_q) given by its dual coordinates: a0X0+a1X1+a2X2+a3X3=0,
/// normalized like a point.
class ProjPlane {
  public:
    explicit ProjPlane(ProjPoint dual);
    static ProjPlane parse(const FieldCtx& F, std::string_view text);

    const ProjPoint& dual() const noexcept { return d_; }
    const FieldCtx& ctx() const noexcept { return d_.ctx(); }
    std::string render() const { return d_.render(); }

    bool operator==(const ProjPlane& o) const { return d_ == o.d_; }
    bool operator!=(const ProjPlane& o) const { return !(*this == o); }
    bool operator<(const ProjPlane& o) const { return d_ < o.d_; }

  private:
    ProjPoint d_;
};

/// A line of P^2 or P^3, canonicalized: the stored spanning pair is the two
/// lexicographically least of the q+1 points of the line, in order. Two
/// ProjLine values are equal iff the underlying point sets are equal.
class ProjLine {
  public:
    ProjLine(const ProjPoint& a, const ProjPoint& b);

    const ProjPoint& p0() const noexcept { return a_; }
    const ProjPoint& p1() const noexcept { return b_; }
    const FieldCtx& ctx() const noexcept { return a_.ctx(); }

    std::string render() const { return a_.render() + " ; " + b_.render(); }

    bool operator==(const ProjLine& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const ProjLine& o) const { return !(*this == o); }
    bool operator<(const ProjLine& o) const {
        return a_ < o.a_ || (a_ == o.a_ && b_ < o.b_);
    }

  private:
    ProjPoint a_, b_;
};

/// theta_q(r) = (q^{r+1} - 1)/(q - 1), the point count of P^r(F_q).
unsigned long long theta(unsigned long long q, unsigned r);

/// All theta_q(r) points, normalized, in the canonical order: grouped by the
/// position of the leading 1 (ascending), then ascending lexicographically in
/// the remaining coordinates. P^1(F_3) comes out (1:0),(1:1),(1:2),(0:1).
std::vector<ProjPoint> enumerate_points(const FieldCtx& F, unsigned r, const Budget& budget = Budget{});

std::vector<ProjPlane> enumerate_planes(const FieldCtx& F, const Budget& budget = Budget{});

bool incident(const ProjPoint& P, const ProjPlane& H);

/// The q+1 points of the line, in canonical enumeration order of P^1
/// parameters over the stored spanning pair.
std::vector<ProjPoint> line_points(const ProjLine& l);

bool plane_contains_line(const ProjPlane& H, const ProjLine& l);

/// The q+1 planes containing l, in plane enumeration order.
std::vector<ProjPlane> planes_through_line(const ProjLine& l, const Budget& budget = Budget{});

/// Three independent points spanning H, giving the parametrization
/// (u:v:w) -> u*P0 + v*P1 + w*P2 of H as a P^2. Deterministic: the canonical
/// null-space basis of the dual vector (one basis point per free coordinate,
/// ascending). H: X3=0 yields (1:0:0:0),(0:1:0:0),(0:0:1:0).
std::array<ProjPoint, 3> plane_coordinate_frame(const ProjPlane& H);

/// All (q^2+1)(q^2+q+1) lines of P^3(F_q), canonicalized and deduplicated,
/// in ascending order of the canonical spanning pair.
std::vector<ProjLine> enumerate_lines(const FieldCtx& F, const Budget& budget = Budget{});

} // namespace fqgeom

#endif // FQGEOM_PROJGEOM_HPP
