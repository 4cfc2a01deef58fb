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

#include "fqgeom/projgeom.hpp"

#include <algorithm>

namespace fqgeom {

namespace {

void check_space_budget(const FieldCtx& F, unsigned r, const Budget& budget) {
    unsigned cap = r >= 3 ? budget.max_q_space : budget.max_q_field;
    if (F.q() > cap)
        raise(errc::budget_exceeded,
              "q = " + std::to_string(F.q()) + " exceeds the enumeration cap " + std::to_string(cap) +
                  " for r = " + std::to_string(r));
}

} // namespace

ProjPoint::ProjPoint(const FieldCtx& F, std::vector<FieldElement> coords) : F_(&F), c_(std::move(coords)) {
    if (c_.size() < 2 || c_.size() > 4)
        raise(errc::precondition_violated, "projective point needs 2..4 coordinates");
    size_t lead = c_.size();
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!F_->same_field(c_[i].ctx())) raise(errc::field_mismatch, "coordinate from a different field");
        if (lead == c_.size() && !c_[i].is_zero()) lead = i;
    }
    if (lead == c_.size()) raise(errc::precondition_violated, "zero vector is not a projective point");
    FieldElement scale = c_[lead].inv();
    for (auto& x : c_) x = x * scale;
}

uint32_t ProjPoint::key() const noexcept {
    uint32_t k = 0;
    for (const auto& x : c_) k = (k << 8) | x.index();
    return k;
}

std::string ProjPoint::render() const {
    std::string out = "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ":";
        out += c_[i].render();
    }
    out += ")";
    return out;
}

ProjPoint ProjPoint::parse(const FieldCtx& F, std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        raise(errc::syntax_error, "point text must be parenthesized, got '" + std::string(text) + "'");
    std::string_view inner = text.substr(1, text.size() - 2);

    // split on ':' at parenthesis depth 0 (coordinates may be '(t+1)')
    std::vector<FieldElement> coords;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= inner.size(); ++i) {
        if (i < inner.size() && inner[i] == '(') ++depth;
        if (i < inner.size() && inner[i] == ')') --depth;
        if (i == inner.size() || (inner[i] == ':' && depth == 0)) {
            coords.push_back(F.parse_element(inner.substr(start, i - start)));
            start = i + 1;
        }
    }
    return ProjPoint(F, std::move(coords));
}

ProjPlane::ProjPlane(ProjPoint dual) : d_(std::move(dual)) {
    if (d_.dim() != 3) raise(errc::precondition_violated, "plane dual coordinates must have 4 entries");
}

ProjPlane ProjPlane::parse(const FieldCtx& F, std::string_view text) {
    return ProjPlane(ProjPoint::parse(F, text));
}

ProjLine::ProjLine(const ProjPoint& a, const ProjPoint& b) : a_(a), b_(b) {
    if (a.dim() != b.dim() || !a.ctx().same_field(b.ctx()))
        raise(errc::field_mismatch, "line spanning points live in different spaces");
    if (a == b) raise(errc::precondition_violated, "a line needs two distinct points");
    const FieldCtx& F = a.ctx();
    // reduce to the two lexicographically least points of the line
    std::vector<ProjPoint> pts;
    pts.reserve(F.q() + 1);
    pts.push_back(a);
    for (unsigned u = 0; u < F.q(); ++u) {
        std::vector<FieldElement> c;
        c.reserve(a.coords().size());
        FieldElement lambda = F.from_index(u);
        for (size_t i = 0; i < a.coords().size(); ++i) c.push_back(a.coords()[i] * lambda + b.coords()[i]);
        pts.emplace_back(F, std::move(c));
    }
    std::sort(pts.begin(), pts.end());
    a_ = pts[0];
    b_ = pts[1];
}

unsigned long long theta(unsigned long long q, unsigned r) {
    unsigned long long num = 1;
    for (unsigned i = 0; i <= r; ++i) num *= q;
    return (num - 1) / (q - 1);
}

std::vector<ProjPoint> enumerate_points(const FieldCtx& F, unsigned r, const Budget& budget) {
    if (r < 1 || r > 3) raise(errc::precondition_violated, "supported dimensions are 1..3");
    check_space_budget(F, r, budget);
    const unsigned q = F.q();
    std::vector<ProjPoint> pts;
    pts.reserve(theta(q, r));
    for (unsigned lead = 0; lead <= r; ++lead) {
        unsigned tail = r - lead;
        unsigned long long total = 1;
        for (unsigned i = 0; i < tail; ++i) total *= q;
        for (unsigned long long v = 0; v < total; ++v) {
            std::vector<FieldElement> c(r + 1, F.zero());
            c[lead] = F.one();
            unsigned long long rem = v;
            for (unsigned i = tail; i-- > 0;) {
                c[lead + 1 + i] = F.from_index(static_cast<unsigned>(rem % q));
                rem /= q;
            }
            pts.emplace_back(F, std::move(c));
        }
    }
    return pts;
}

std::vector<ProjPlane> enumerate_planes(const FieldCtx& F, const Budget& budget) {
    std::vector<ProjPlane> planes;
    for (auto& P : enumerate_points(F, 3, budget)) planes.emplace_back(std::move(P));
    return planes;
}

bool incident(const ProjPoint& P, const ProjPlane& H) {
    const FieldCtx& F = P.ctx();
    if (!F.same_field(H.ctx())) raise(errc::field_mismatch, "point and plane over different fields");
    if (P.dim() != 3) raise(errc::precondition_violated, "incidence is defined in P^3");
    FieldElement s = F.zero();
    for (size_t i = 0; i < 4; ++i) s = s + P.coords()[i] * H.dual().coords()[i];
    return s.is_zero();
}

std::vector<ProjPoint> line_points(const ProjLine& l) {
    const FieldCtx& F = l.ctx();
    std::vector<ProjPoint> pts;
    pts.reserve(F.q() + 1);
    pts.push_back(l.p0());
    for (unsigned u = 0; u < F.q(); ++u) {
        std::vector<FieldElement> c;
        FieldElement lambda = F.from_index(u);
        for (size_t i = 0; i < l.p0().coords().size(); ++i)
            c.push_back(l.p0().coords()[i] * lambda + l.p1().coords()[i]);
        pts.emplace_back(F, std::move(c));
    }
    return pts;
}

bool plane_contains_line(const ProjPlane& H, const ProjLine& l) {
    return incident(l.p0(), H) && incident(l.p1(), H);
}

std::vector<ProjPlane> planes_through_line(const ProjLine& l, const Budget& budget) {
    std::vector<ProjPlane> out;
    for (const auto& H : enumerate_planes(l.ctx(), budget))
        if (plane_contains_line(H, l)) out.push_back(H);
    return out;
}

std::array<ProjPoint, 3> plane_coordinate_frame(const ProjPlane& H) {
    const FieldCtx& F = H.ctx();
    Mat dual(F, 1, 4);
    for (unsigned j = 0; j < 4; ++j) dual.set(0, j, H.dual().coords()[j]);
    auto basis = dual.kernel_basis();
    if (basis.size() != 3) raise(errc::internal, "plane null space is not 3-dimensional");
    return {ProjPoint(F, basis[0]), ProjPoint(F, basis[1]), ProjPoint(F, basis[2])};
}

std::vector<ProjLine> enumerate_lines(const FieldCtx& F, const Budget& budget) {
    auto pts = enumerate_points(F, 3, budget);
    std::vector<ProjLine> lines;
    const unsigned long long q = F.q();
    lines.reserve((q * q + 1) * (q * q + q + 1));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            ProjLine l(pts[i], pts[j]);
            // each unordered pair is visited once; keep the line exactly when
            // this pair is its canonical spanning pair
            bool canonical = (l.p0() == pts[i] && l.p1() == pts[j]) ||
                             (l.p0() == pts[j] && l.p1() == pts[i]);
            if (canonical) lines.push_back(std::move(l));
        }
    std::sort(lines.begin(), lines.end());
    return lines;
}

} // namespace fqgeom
