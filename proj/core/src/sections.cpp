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

#include "fqgeom/sections.hpp"

#include <algorithm>
#include <numeric>

namespace fqgeom {

namespace {

// maps a ternary point (u:v:w) into P^3 through the frame of H
ProjPoint lift_to_plane(const ProjPoint& uvw, const std::array<ProjPoint, 3>& frame) {
    const FieldCtx& F = uvw.ctx();
    std::vector<FieldElement> c(4, F.zero());
    for (unsigned k = 0; k < 3; ++k)
        for (unsigned j = 0; j < 4; ++j) c[j] = c[j] + uvw.coords()[k] * frame[k].coords()[j];
    return ProjPoint(F, std::move(c));
}

// the two ternary points spanning the zero line of a ternary linear form
std::pair<ProjPoint, ProjPoint> ternary_line_span(const HomogeneousForm& ell) {
    const FieldCtx& F = ell.ctx();
    Mat row(F, 1, 3);
    for (const auto& [e, c] : ell.terms())
        for (unsigned i = 0; i < 3; ++i)
            if (e[i]) row.set(0, i, c);
    auto kb = row.kernel_basis();
    if (kb.size() != 2) raise(errc::internal, "ternary line has a bad kernel");
    return {ProjPoint(F, kb[0]), ProjPoint(F, kb[1])};
}

// cross product of the dual vectors of two distinct ternary lines: their
// intersection point
ProjPoint ternary_lines_meet(const HomogeneousForm& l1, const HomogeneousForm& l2) {
    const FieldCtx& F = l1.ctx();
    std::array<FieldElement, 3> a{F.zero(), F.zero(), F.zero()};
    std::array<FieldElement, 3> b{F.zero(), F.zero(), F.zero()};
    for (const auto& [e, c] : l1.terms())
        for (unsigned i = 0; i < 3; ++i)
            if (e[i]) a[i] = c;
    for (const auto& [e, c] : l2.terms())
        for (unsigned i = 0; i < 3; ++i)
            if (e[i]) b[i] = c;
    std::vector<FieldElement> x{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                a[0] * b[1] - a[1] * b[0]};
    return ProjPoint(F, std::move(x));
}

long long llgcd(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

} // namespace

unsigned long long count_points(const HomogeneousForm& f, const Budget& budget) {
    if (f.degree() < 1) raise(errc::precondition_violated, "counting needs degree >= 1");
    unsigned long long n = 0;
    for (const auto& P : enumerate_points(f.ctx(), f.nvars() - 1, budget))
        if (f.evaluate(P).is_zero()) ++n;
    return n;
}

SectionClass classify_section(const HomogeneousForm& S, const ProjPlane& H, const Budget& budget) {
    if (S.nvars() != 4) raise(errc::precondition_violated, "sections are cut from 4-variable forms");
    const FieldCtx& F = S.ctx();

    HomogeneousForm g = [&] {
        try {
            return restrict_to_plane(S, H);
        } catch (const Error& e) {
            if (e.code() == errc::identically_zero_on_plane)
                raise(errc::plane_component, "the plane divides the surface");
            throw;
        }
    }();

    SectionClass out{SectionClass::Kind::Other, count_points(g, budget), std::nullopt, {}, {}, false, {}};

    std::vector<HomogeneousForm> comps = fq_linear_components(g, budget);
    unsigned d = g.degree();

    if (comps.size() == d) {
        // full split; collect the distinct factors
        std::vector<HomogeneousForm> distinct;
        for (const auto& c : comps) {
            bool seen = false;
            for (const auto& u : distinct)
                if (u == c) seen = true;
            if (!seen) distinct.push_back(c);
        }
        bool repeated = distinct.size() != comps.size();

        std::optional<ProjPoint> vertex_uvw;
        bool concurrent = true;
        if (distinct.size() == 1) {
            // a single repeated line; every point is common, pick the least
            auto span = ternary_line_span(distinct[0]);
            ProjLine l(span.first, span.second);
            vertex_uvw = l.p0();
        } else {
            vertex_uvw = ternary_lines_meet(distinct[0], distinct[1]);
            for (size_t i = 2; i < distinct.size() && concurrent; ++i)
                if (!distinct[i].evaluate(*vertex_uvw).is_zero()) concurrent = false;
        }

        if (concurrent) {
            auto frame = plane_coordinate_frame(H);
            out.kind = SectionClass::Kind::PlanarPencil;
            out.vertex = lift_to_plane(*vertex_uvw, frame);
            out.factors = comps;
            out.repeated = repeated;
            for (const auto& u : distinct) {
                auto span = ternary_line_span(u);
                out.lines.emplace_back(lift_to_plane(span.first, frame), lift_to_plane(span.second, frame));
            }
            return out;
        }
        out.line_components = comps;
        return out;
    }

    if (comps.empty() && out.count == sziklai_bound(d, F.q())) {
        out.kind = SectionClass::Kind::ExtremalCurve;
        return out;
    }

    out.line_components = comps;
    return out;
}

SectionCensus section_census_over(const HomogeneousForm& S, std::span<const ProjPlane> planes,
                                  const Budget& budget) {
    SectionCensus c;
    for (const auto& H : planes) {
        SectionClass sc = classify_section(S, H, budget);
        switch (sc.kind) {
            case SectionClass::Kind::PlanarPencil: ++c.nu1; break;
            case SectionClass::Kind::ExtremalCurve: ++c.nu2; break;
            case SectionClass::Kind::Other: ++c.other; break;
        }
    }
    return c;
}

SectionCensus section_census(const HomogeneousForm& S, const Budget& budget) {
    if (!fq_linear_components(S, budget).empty())
        raise(errc::plane_component, "the surface has a rational plane component");
    auto planes = enumerate_planes(S.ctx(), budget);
    return section_census_over(S, planes, budget);
}

std::vector<std::pair<ProjPlane, ProjPoint>> pencil_vertex_bijection(const HomogeneousForm& S,
                                                                     const Budget& budget) {
    const FieldCtx& F = S.ctx();
    std::vector<std::pair<ProjPlane, ProjPoint>> pairs;
    std::set<uint32_t> seen;
    for (const auto& H : enumerate_planes(F, budget)) {
        SectionClass sc = classify_section(S, H, budget);
        if (sc.kind != SectionClass::Kind::PlanarPencil) continue;
        if (!seen.insert(sc.vertex->key()).second)
            raise(errc::not_bijective, "two pencil planes share a vertex");
        pairs.emplace_back(H, *sc.vertex);
    }
    unsigned long long on_surface = 0;
    for (const auto& P : enumerate_points(F, 3, budget)) {
        if (!S.evaluate(P).is_zero()) continue;
        ++on_surface;
        if (!seen.count(P.key()))
            raise(errc::not_bijective, "surface point " + P.render() + " is not a pencil vertex");
    }
    if (on_surface != pairs.size())
        raise(errc::not_bijective, "vertex map does not land in the surface");
    return pairs;
}

LineAudit line_audit(const HomogeneousForm& S, const ProjLine& l, const Budget& budget) {
    LineAudit a;
    for (const auto& P : line_points(l))
        if (S.evaluate(P).is_zero()) ++a.alpha;
    for (const auto& H : planes_through_line(l, budget))
        if (classify_section(S, H, budget).kind == SectionClass::Kind::PlanarPencil) ++a.beta;
    return a;
}

std::set<unsigned> line_spectrum(const HomogeneousForm& S, const Budget& budget) {
    std::set<unsigned> spectrum;
    for (const auto& l : enumerate_lines(S.ctx(), budget)) {
        unsigned alpha = 0;
        for (const auto& P : line_points(l))
            if (S.evaluate(P).is_zero()) ++alpha;
        spectrum.insert(alpha);
    }
    return spectrum;
}

ProjPoint line_dual(const ProjLine& l) {
    if (l.p0().dim() != 2) raise(errc::precondition_violated, "line duals live in the projective plane");
    const FieldCtx& F = l.ctx();
    const auto& a = l.p0().coords();
    const auto& b = l.p1().coords();
    std::vector<FieldElement> d{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                a[0] * b[1] - a[1] * b[0]};
    return ProjPoint(F, std::move(d));
}

TangencyCensus tangency_census(const HomogeneousForm& C, const Budget& budget) {
    if (C.nvars() != 3) raise(errc::precondition_violated, "tangency census takes a plane curve");
    const FieldCtx& F = C.ctx();
    unsigned d = C.degree();
    if (!fq_linear_components(C, budget).empty())
        raise(errc::precondition_violated, "curve has a rational line component");
    if (count_points(C, budget) != sziklai_bound(d, F.q()))
        raise(errc::precondition_violated, "curve does not attain the plane-curve bound");

    TangencyCensus t;
    t.d = d;
    for (const auto& D : enumerate_points(F, 2, budget)) {
        HomogeneousForm ell = linear_form_from_dual(D);
        auto span = ternary_line_span(ell);
        ProjLine l(span.first, span.second);
        unsigned hits = 0;
        for (const auto& P : line_points(l))
            if (C.evaluate(P).is_zero()) ++hits;
        if (hits == 0)
            ++t.x0;
        else if (hits == 1)
            ++t.x1;
        else if (hits == d)
            ++t.xd;
        else
            ++t.other[hits];
    }
    return t;
}

TangencyExpected tangency_expected(unsigned d, unsigned long long q) {
    if (d < 1) raise(errc::precondition_violated, "degree must be positive");
    TangencyExpected e{};
    e.x1 = sziklai_bound(d, q);
    long long qd = static_cast<long long>(q);
    long long dd = static_cast<long long>(d);
    e.xd_num = qd * static_cast<long long>(e.x1);
    e.xd_den = dd;
    long long g = llgcd(e.xd_num, e.xd_den);
    e.xd_num /= g;
    e.xd_den /= g;
    e.x0_num = qd * (qd - (dd - 1) * (dd - 1));
    e.x0_den = dd;
    g = llgcd(e.x0_num, e.x0_den);
    if (g) {
        e.x0_num /= g;
        e.x0_den /= g;
    }
    if (e.x0_den < 0) {
        e.x0_den = -e.x0_den;
        e.x0_num = -e.x0_num;
    }
    return e;
}

HomogeneousForm exceptional_quartic(const FieldCtx& F) {
    if (F.p() != 2 || F.e() != 2) raise(errc::precondition_violated, "the exceptional quartic lives over F_4");
    auto lin = [&](unsigned i) {
        Expo e{};
        e[i] = 1;
        return HomogeneousForm::from_terms(F, 3, {{e, F.one()}});
    };
    HomogeneousForm U = lin(0), V = lin(1), W = lin(2);
    HomogeneousForm l = U + V + W;
    HomogeneousForm m = U * V + V * W + W * U;
    HomogeneousForm n = U * V * W;
    return l.pow(4) + m.pow(2) + n * l;
}

namespace {

// binary form b(s,t) = C(s*A + t*B) as the coefficient vector of
// s^d, s^{d-1} t, ..., t^d
std::vector<FieldElement> restrict_to_span(const HomogeneousForm& C, const ProjPoint& A, const ProjPoint& B) {
    const FieldCtx& F = C.ctx();
    unsigned d = C.degree();
    std::vector<FieldElement> out(d + 1, F.zero());
    for (const auto& [e, c] : C.terms()) {
        std::vector<FieldElement> term{c};
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned rep = 0; rep < e[i]; ++rep) {
                std::vector<FieldElement> next(term.size() + 1, F.zero());
                for (size_t k = 0; k < term.size(); ++k) {
                    next[k] = next[k] + term[k] * A.coords()[i];
                    next[k + 1] = next[k + 1] + term[k] * B.coords()[i];
                }
                term = std::move(next);
            }
        for (size_t k = 0; k < term.size(); ++k) out[k] = out[k] + term[k];
    }
    return out;
}

bool binary_is_zero(const std::vector<FieldElement>& b) {
    return std::all_of(b.begin(), b.end(), [](const FieldElement& c) { return c.is_zero(); });
}

// divides b by alpha*s + beta*t by synthetic division; returns the quotient
// when the division is exact
std::optional<std::vector<FieldElement>> binary_divide(const std::vector<FieldElement>& b, const FieldElement& alpha,
                                                       const FieldElement& beta) {
    const FieldCtx& F = alpha.ctx();
    if (b.size() < 2) return std::nullopt;
    std::vector<FieldElement> q(b.size() - 1, F.zero());
    if (alpha.is_zero()) {
        // divisor is beta*t; exact iff the s^d coefficient vanishes
        if (!b[0].is_zero()) return std::nullopt;
        for (size_t k = 1; k < b.size(); ++k) q[k - 1] = b[k] / beta;
        return q;
    }
    q[0] = b[0] / alpha;
    for (size_t k = 1; k + 1 < b.size(); ++k) q[k] = (b[k] - beta * q[k - 1]) / alpha;
    FieldElement rem = b.back() - beta * q.back();
    if (!rem.is_zero()) return std::nullopt;
    return q;
}

} // namespace

std::vector<ProjLine> bitangents(const HomogeneousForm& C, const Budget& budget) {
    if (C.nvars() != 3) raise(errc::precondition_violated, "bitangents are for plane curves");
    const FieldCtx& F = C.ctx();
    std::vector<ProjLine> out;
    for (const auto& D : enumerate_points(F, 2, budget)) {
        HomogeneousForm ell = linear_form_from_dual(D);
        auto span = ternary_line_span(ell);
        ProjLine l(span.first, span.second);
        const ProjPoint& A = l.p0();
        const ProjPoint& B = l.p1();
        std::vector<FieldElement> b = restrict_to_span(C, A, B);
        if (binary_is_zero(b)) continue; // line component, not a bitangent

        // rational roots (s0:t0) and their multiplicities
        unsigned roots = 0;
        bool all_tangent = true;
        for (const auto& par : enumerate_points(F, 1, budget)) {
            FieldElement s0 = par.coords()[0], t0 = par.coords()[1];
            // evaluate b at (s0, t0)
            FieldElement val = F.zero();
            std::vector<FieldElement> tp(b.size(), F.one());
            for (size_t k = 1; k < b.size(); ++k) tp[k] = tp[k - 1] * t0;
            std::vector<FieldElement> sp(b.size(), F.one());
            for (size_t k = 1; k < b.size(); ++k) sp[k] = sp[k - 1] * s0;
            for (size_t k = 0; k < b.size(); ++k) val = val + b[k] * sp[b.size() - 1 - k] * tp[k];
            if (!val.is_zero()) continue;
            ++roots;
            // multiplicity of the factor t0*s - s0*t
            unsigned mult = 0;
            std::vector<FieldElement> cur = b;
            while (cur.size() >= 2) {
                auto quo = binary_divide(cur, t0, -s0);
                if (!quo) break;
                ++mult;
                cur = *quo;
            }
            if (mult < 2) all_tangent = false;
        }
        if (roots == 2 && all_tangent) out.push_back(l);
    }
    return out;
}

BoundReport bound_check(const HomogeneousForm& S, const Budget& budget) {
    const FieldCtx& F = S.ctx();
    BoundReport r;
    r.d = S.degree();
    if (!fq_linear_components(S, budget).empty())
        raise(errc::component_present, S.nvars() == 4 ? "surface has a rational plane component"
                                                      : "curve has a rational line component");
    r.N = count_points(S, budget);
    if (S.nvars() == 4) {
        r.bound = elementary_bound(r.d, F.q());
    } else {
        r.bound = sziklai_bound(r.d, F.q());
        r.hasse_weil = hasse_weil_bound(r.d, F.q());
    }
    r.attains = r.N == r.bound;
    return r;
}

ExclusionReport exceptional_exclusion(const FieldCtx& F) {
    HomogeneousForm C = exceptional_quartic(F);
    ExclusionReport r;
    r.curve_points = count_points(C);
    r.planes_through_line = F.q() + 1;
    r.section_ceiling = static_cast<unsigned long long>(r.planes_through_line) * (r.curve_points - 2) + 2;
    r.surface_bound = elementary_bound(4, F.q());
    r.excluded = r.section_ceiling < r.surface_bound;
    return r;
}

} // namespace fqgeom
