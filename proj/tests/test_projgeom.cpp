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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "fqgeom/linalg.hpp"
#include "fqgeom/projgeom.hpp"
#include "support/oracles.hpp"

using namespace fqgeom;

namespace {

Mat span_matrix(const std::vector<ProjPoint>& pts) {
    const FieldCtx& F = pts.front().ctx();
    Mat m(F, static_cast<unsigned>(pts.size()), pts.front().dim() + 1);
    for (unsigned i = 0; i < pts.size(); ++i)
        for (unsigned j = 0; j <= pts.front().dim(); ++j) m.set(i, j, pts[i].coords()[j]);
    return m;
}

} // namespace

TEST_CASE("theta matches the geometric series") {
    CHECK(theta(2, 3) == 15);
    CHECK(theta(3, 3) == 40);
    CHECK(theta(4, 3) == 85);
    CHECK(theta(9, 3) == 820);
    CHECK(theta(4, 2) == 21);
    CHECK(theta(9, 2) == 91);
    for (unsigned long long q : {2, 3, 4, 5, 7, 8, 9, 16})
        for (unsigned r = 1; r <= 3; ++r) CHECK(theta(q, r) == oracles::theta_closed(q, r));
}

TEST_CASE("P^1(F_3) enumerates in the pinned order") {
    const FieldCtx F = field_create(3, 1);
    const auto pts = enumerate_points(F, 1);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].render() == "(1:0)");
    CHECK(pts[1].render() == "(1:1)");
    CHECK(pts[2].render() == "(1:2)");
    CHECK(pts[3].render() == "(0:1)");
}

TEST_CASE("point enumeration is complete, normalized and duplicate-free") {
    for (const unsigned q : {2u, 3u, 4u, 5u}) {
        unsigned p = 0, e = 0;
        REQUIRE(prime_power_decompose(q, p, e));
        const FieldCtx F = field_create(p, e);
        for (unsigned r = 1; r <= 3; ++r) {
            const auto pts = enumerate_points(F, r);
            CHECK(pts.size() == theta(q, r));
            std::set<uint32_t> keys;
            for (const auto& P : pts) {
                keys.insert(P.key());
                unsigned lead = 0;
                while (P.coords()[lead].is_zero()) ++lead;
                CHECK(P.coords()[lead].is_one());
            }
            CHECK(keys.size() == pts.size());
        }
    }
}

TEST_CASE("normalization scales by the inverse of the first nonzero coordinate") {
    const FieldCtx F = field_create(3, 1);
    const ProjPoint P(F, {F.from_index(2), F.from_index(1)});
    CHECK(P.render() == "(1:2)");
    const ProjPoint Q(F, {F.zero(), F.from_index(2), F.from_index(2)});
    CHECK(Q.render() == "(0:1:1)");
    CHECK_THROWS_AS(ProjPoint(F, {F.zero(), F.zero()}), Error);
}

TEST_CASE("key order is coordinate-lex order") {
    const FieldCtx F = field_create(3, 1);
    auto pts = enumerate_points(F, 2);
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto &a = pts[i].coords(), &b = pts[i + 1].coords();
        bool lex_less = false;
        for (size_t j = 0; j < a.size(); ++j) {
            if (a[j].index() != b[j].index()) {
                lex_less = a[j].index() < b[j].index();
                break;
            }
        }
        CHECK(lex_less);
    }
}

TEST_CASE("point parse and render round trip") {
    const FieldCtx F = field_create(2, 2);
    for (const auto& P : enumerate_points(F, 3)) CHECK(ProjPoint::parse(F, P.render()) == P);
    const ProjPoint sample = ProjPoint::parse(F, "(1:0:(t+1):1)");
    CHECK(sample.coords()[2] == F.element({1, 1}));
    CHECK(sample.render() == "(1:0:(t+1):1)");
    CHECK_THROWS_AS(ProjPoint::parse(F, "(1:0)x"), Error);
    CHECK_THROWS_AS(ProjPoint::parse(F, "(0:0:0:0)"), Error);
    CHECK_THROWS_AS(ProjPoint::parse(F, "(1)"), Error);
    CHECK_THROWS_AS(ProjPoint::parse(F, "(1:1:1:1:1)"), Error);
}

TEST_CASE("lines canonicalize independently of the spanning pair") {
    const FieldCtx F = field_create(3, 1);
    const auto pts = enumerate_points(F, 3);
    const ProjLine l(pts[0], pts[1]);
    const auto on_l = line_points(l);
    REQUIRE(on_l.size() == 4);
    for (size_t i = 0; i < on_l.size(); ++i)
        for (size_t j = 0; j < on_l.size(); ++j) {
            if (i == j) continue;
            CHECK(ProjLine(on_l[i], on_l[j]) == l);
        }
    CHECK(l.p0() < l.p1());
    auto sorted = on_l;
    std::sort(sorted.begin(), sorted.end());
    CHECK(l.p0() == sorted[0]);
    CHECK(l.p1() == sorted[1]);
}

TEST_CASE("line points are exactly the rank-2 combinations") {
    const FieldCtx F = field_create(2, 2);
    const auto pts = enumerate_points(F, 3);
    const ProjLine l(pts[3], pts[11]);
    const auto on_l = line_points(l);
    CHECK(on_l.size() == F.q() + 1);
    std::set<uint32_t> keys;
    for (const auto& P : on_l) {
        keys.insert(P.key());
        Mat m = span_matrix({l.p0(), l.p1(), P});
        CHECK(m.rank() == 2);
    }
    CHECK(keys.size() == on_l.size());
}

TEST_CASE("incidence is the dual pairing") {
    const FieldCtx F = field_create(3, 1);
    const ProjPlane H = ProjPlane::parse(F, "(1:0:0:2)"); // x0 + 2 x3 = 0
    CHECK(incident(ProjPoint::parse(F, "(1:0:0:1)"), H));
    CHECK_FALSE(incident(ProjPoint::parse(F, "(1:0:0:2)"), H));
    unsigned on = 0;
    for (const auto& P : enumerate_points(F, 3))
        if (incident(P, H)) ++on;
    CHECK(on == theta(3, 2));
}

TEST_CASE("plane enumeration covers the dual space") {
    for (const unsigned q : {2u, 3u, 4u}) {
        unsigned p = 0, e = 0;
        REQUIRE(prime_power_decompose(q, p, e));
        const FieldCtx F = field_create(p, e);
        const auto planes = enumerate_planes(F);
        CHECK(planes.size() == theta(q, 3));
        std::set<uint32_t> keys;
        for (const auto& H : planes) keys.insert(H.dual().key());
        CHECK(keys.size() == planes.size());
    }
}

TEST_CASE("plane coordinate frame is the canonical kernel basis") {
    const FieldCtx F = field_create(2, 1);
    const auto f3 = plane_coordinate_frame(ProjPlane::parse(F, "(0:0:0:1)")); // X3 = 0
    CHECK(f3[0].render() == "(1:0:0:0)");
    CHECK(f3[1].render() == "(0:1:0:0)");
    CHECK(f3[2].render() == "(0:0:1:0)");
    const auto f0 = plane_coordinate_frame(ProjPlane::parse(F, "(1:0:0:0)")); // X0 = 0
    CHECK(f0[0].render() == "(0:1:0:0)");
    CHECK(f0[1].render() == "(0:0:1:0)");
    CHECK(f0[2].render() == "(0:0:0:1)");
}

TEST_CASE("every plane frame spans its plane") {
    const FieldCtx F = field_create(2, 2);
    for (const auto& H : enumerate_planes(F)) {
        const auto frame = plane_coordinate_frame(H);
        Mat m = span_matrix({frame[0], frame[1], frame[2]});
        CHECK(m.rank() == 3);
        for (const auto& P : frame) CHECK(incident(P, H));
    }
}

TEST_CASE("planes through a line") {
    const FieldCtx F = field_create(3, 1);
    const auto pts = enumerate_points(F, 3);
    const auto planes = enumerate_planes(F);
    const ProjLine l(pts[0], pts[7]);
    const auto pencil = planes_through_line(l);
    CHECK(pencil.size() == F.q() + 1);
    std::set<uint32_t> in_pencil;
    for (const auto& H : pencil) {
        CHECK(plane_contains_line(H, l));
        in_pencil.insert(H.dual().key());
    }
    for (const auto& H : planes)
        CHECK(plane_contains_line(H, l) == (in_pencil.count(H.dual().key()) != 0));
}

TEST_CASE("line enumeration is complete and canonical") {
    for (const unsigned q : {2u, 3u, 4u}) {
        unsigned p = 0, e = 0;
        REQUIRE(prime_power_decompose(q, p, e));
        const FieldCtx F = field_create(p, e);
        const auto lines = enumerate_lines(F);
        CHECK(lines.size() == oracles::line_count_closed(q));
        CHECK(std::is_sorted(lines.begin(), lines.end()));
        CHECK(std::adjacent_find(lines.begin(), lines.end()) == lines.end());
    }
    // every spanning pair lands on an enumerated line
    const FieldCtx F = field_create(2, 1);
    const auto pts = enumerate_points(F, 3);
    const auto lines = enumerate_lines(F);
    const std::set<ProjLine> all(lines.begin(), lines.end());
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) CHECK(all.count(ProjLine(pts[i], pts[j])) == 1);
}

TEST_CASE("space enumeration respects the budget") {
    const FieldCtx F = field_create(17, 1);
    CHECK(enumerate_points(F, 2).size() == theta(17, 2));
    CHECK_THROWS_WITH_AS(enumerate_points(F, 3), doctest::Contains("BudgetExceeded"), Error);
    CHECK_THROWS_WITH_AS(enumerate_planes(F), doctest::Contains("BudgetExceeded"), Error);
    Budget wide;
    wide.max_q_space = 17;
    CHECK(enumerate_points(F, 3, wide).size() == theta(17, 3));
}
