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

#include <cstdio>
#include <fstream>

#include "fqgeom/audit.hpp"
#include "fqgeom/catalog.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

using namespace fqgeom;
using nlohmann::json;

TEST_CASE("config parsing: explicit fields") {
    const auto cfg = audit_config_from_json(R"({
        "q_list": [2, 9],
        "surfaces": ["hyperbolic", "X0*X1 - X2*X3"],
        "checks": ["bounds", "lines"],
        "budget": {"max_q_space": 11},
        "output_path": "/tmp/report.json"
    })");
    CHECK(cfg.q_list == std::vector<unsigned>{2, 9});
    CHECK(cfg.surfaces == std::vector<std::string>{"hyperbolic", "X0*X1 - X2*X3"});
    CHECK(cfg.checks.bounds);
    CHECK(cfg.checks.lines);
    CHECK_FALSE(cfg.checks.sections);
    CHECK_FALSE(cfg.checks.tangency);
    CHECK_FALSE(cfg.checks.altform);
    CHECK_FALSE(cfg.checks.quadric_census);
    CHECK(cfg.budget.max_q_space == 11);
    CHECK(cfg.budget.max_q_field == Budget{}.max_q_field);
    CHECK(cfg.output_path == "/tmp/report.json");
}

TEST_CASE("config parsing: defaults select every applicable check") {
    const auto small = audit_config_from_json(R"({"q_list": [2, 3], "surfaces": ["fullspace"]})");
    CHECK(small.checks.bounds);
    CHECK(small.checks.sections);
    CHECK(small.checks.lines);
    CHECK(small.checks.tangency);
    CHECK(small.checks.altform);
    CHECK(small.checks.quadric_census);

    const auto big = audit_config_from_json(R"({"q_list": [2, 5], "surfaces": ["hyperbolic"]})");
    CHECK(big.checks.bounds);
    CHECK(big.checks.altform);
    CHECK_FALSE(big.checks.quadric_census);
}

TEST_CASE("config parsing: rejections") {
    const auto reject = [](const char* text) {
        CHECK_THROWS_WITH_AS(audit_config_from_json(text), doctest::Contains("ConfigError"), Error);
    };
    reject("{");
    reject(R"({"surfaces": ["hyperbolic"]})");
    reject(R"({"q_list": [], "surfaces": ["hyperbolic"]})");
    reject(R"({"q_list": [6], "surfaces": ["hyperbolic"]})");
    reject(R"({"q_list": [0], "surfaces": ["hyperbolic"]})");
    reject(R"({"q_list": [2], "surfaces": ["hyperbolic"], "checks": ["spectra"]})");
    reject(R"({"q_list": [4], "surfaces": [], "checks": ["quadric_census"]})");
    reject(R"({"q_list": [128], "surfaces": ["hyperbolic"]})");
    reject(R"({"q_list": [2], "surfaces": [17]})");
    reject(R"({"q_list": "2", "surfaces": ["hyperbolic"]})");
}

TEST_CASE("config file round trip") {
    const char* path = "/tmp/fqgeom_test_cfg.json";
    {
        std::ofstream out(path);
        out << R"({"q_list": [3], "surfaces": ["hermitian"], "checks": ["bounds"]})";
    }
    const auto cfg = audit_config_from_file(path);
    CHECK(cfg.q_list == std::vector<unsigned>{3});
    CHECK(cfg.surfaces == std::vector<std::string>{"hermitian"});
    std::remove(path);
    CHECK_THROWS_WITH_AS(audit_config_from_file("/tmp/does_not_exist_fqgeom.json"),
                         doctest::Contains("ConfigError"), Error);
}

TEST_CASE("audit reports are deterministic") {
    const auto cfg = audit_config_from_json(
        R"({"q_list": [2, 3], "surfaces": ["hyperbolic", "fullspace"], "checks": ["bounds", "sections"]})");
    const auto a = run_audit(cfg);
    const auto b = run_audit(cfg);
    CHECK(a.pass);
    CHECK(a.json == b.json);
}

TEST_CASE("audit of the attaining surfaces") {
    const auto cfg = audit_config_from_json(
        R"({"q_list": [2, 3], "surfaces": ["hyperbolic"], "checks": ["bounds", "sections"]})");
    const auto out = run_audit(cfg);
    REQUIRE(out.pass);
    const json doc = json::parse(out.json);
    CHECK(doc.at("pass") == true);
    const auto& rows = doc.at("surfaces");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].at("q") == 2);
    CHECK(rows[0].at("N") == 9);
    CHECK(rows[0].at("bound") == 9);
    CHECK(rows[0].at("attains") == true);
    CHECK(rows[0].at("census").at("nu1") == 9);
    CHECK(rows[0].at("census").at("nu2") == 6);
    CHECK(rows[0].at("census").at("other") == 0);
    CHECK(rows[0].at("identities_ok") == true);
    CHECK(rows[0].at("vertex_bijection_ok") == true);
    CHECK(rows[1].at("q") == 3);
    CHECK(rows[1].at("N") == 16);
    CHECK(rows[1].at("census").at("nu2") == 24);
    CHECK(rows[1].at("form") == "X0*X1 + 2*X2*X3");

    const auto& gate = doc.at("degree_gate");
    REQUIRE(gate.size() == 2);
    CHECK(gate[0].at("q") == 2);
    CHECK(gate[0].at("entries")[1].at("x0_num") == -4);
    CHECK(gate[0].at("entries")[1].at("x0_den") == 3);
    CHECK(gate[0].at("sign_matches_gate") == true);
    CHECK(gate[0].at("pass") == true);
}

TEST_CASE("a failing surface becomes an error record, not an exception") {
    const auto cfg =
        audit_config_from_json(R"({"q_list": [5], "surfaces": ["hermitian"], "checks": ["bounds"]})");
    const auto out = run_audit(cfg);
    CHECK_FALSE(out.pass);
    const json doc = json::parse(out.json);
    CHECK(doc.at("pass") == false);
    CHECK(doc.at("surfaces")[0].at("error") == "QNotSquare");
    CHECK(doc.at("surfaces")[0].at("pass") == false);
    CHECK(doc.at("degree_gate")[0].at("pass") == true);
}

TEST_CASE("full q=2 audit with altform and census checks") {
    const auto cfg = audit_config_from_json(R"({"q_list": [2], "surfaces": ["hyperbolic"]})");
    const auto out = run_audit(cfg);
    REQUIRE(out.pass);
    const json doc = json::parse(out.json);
    const auto& alt = doc.at("altform")[0];
    CHECK(alt.at("q") == 2);
    CHECK(alt.at("cases") == 63);
    CHECK(alt.at("exhaustive") == true);
    CHECK(alt.at("congruence_ok") == true);
    CHECK(alt.at("rank_class_ok") == true);
    CHECK(alt.at("surfaces_ok") == true);
    CHECK(alt.at("rank2_cases").get<unsigned>() + alt.at("rank4_cases").get<unsigned>() == 63);
    CHECK(alt.at("pass") == true);

    const auto& census = doc.at("quadric_census")[0];
    CHECK(census.at("total_forms") == 1023);
    CHECK(census.at("plane_free") == 903);
    CHECK(census.at("with_plane_component") == oracles::split_quadric_count(2));
    CHECK(census.at("max_count") == 9);
    CHECK(census.at("achievers") == oracles::hyperbolic_class_count(2));
    CHECK(census.at("all_achievers_hyperbolic") == true);
    CHECK(census.at("equivalence_method") == "pgl-orbit");
    CHECK(census.at("pass") == true);
}

TEST_CASE("quadric census records match the independent class counts") {
    const FieldCtx F2 = field_create(2, 1);
    const auto c2 = quadric_census(F2);
    CHECK(c2.total_forms == 1023);
    CHECK(c2.plane_free == 1023 - oracles::split_quadric_count(2));
    CHECK(c2.with_plane_component == oracles::split_quadric_count(2));
    CHECK(c2.max_count == 9);
    CHECK(c2.achievers == oracles::hyperbolic_class_count(2));
    CHECK(c2.all_achievers_hyperbolic);
    CHECK(c2.pass);

    const FieldCtx F3 = field_create(3, 1);
    const auto c3 = quadric_census(F3);
    CHECK(c3.total_forms == 29524);
    CHECK(c3.plane_free == 29524 - oracles::split_quadric_count(3));
    CHECK(c3.with_plane_component == oracles::split_quadric_count(3));
    CHECK(c3.max_count == 16);
    CHECK(c3.achievers == oracles::hyperbolic_class_count(3));
    CHECK(c3.all_achievers_hyperbolic);
    CHECK(c3.equivalence_method == "gram-rank-and-count");
    CHECK(c3.pass);

    const FieldCtx F5 = field_create(5, 1);
    CHECK_THROWS_WITH_AS(quadric_census(F5), doctest::Contains("PreconditionViolated"), Error);
}

TEST_CASE("degree gate check across the small fields") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const auto rec = degree_gate_check(q);
        CHECK(rec.q == q);
        CHECK(rec.entries.size() == q);
        CHECK(rec.sign_matches_gate);
        CHECK(rec.catalog_degrees_admissible);
        CHECK(rec.pass);
        CHECK(rec.admissible == admissible_degrees(q));
        for (const auto& e : rec.entries) CHECK(e.nonneg == ((e.d - 1) * (e.d - 1) <= q));
    }
    const auto r9 = degree_gate_check(9);
    CHECK(r9.entries[0].x0_num == 36);
    CHECK(r9.entries[0].x0_den == 1);
    CHECK(r9.entries[2].d == 4);
    CHECK(r9.entries[2].x0_num == 0);
    CHECK(r9.entries[2].x0_den == 1);
}

TEST_CASE("run_audit enforces the budget on hand-built configs") {
    AuditConfig cfg;
    cfg.q_list = {17};
    cfg.surfaces = {"hyperbolic"};
    cfg.checks.bounds = true;
    CHECK_THROWS_WITH_AS(run_audit(cfg), doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("single-shot count backend") {
    const auto out = audit_count(4, "X0*X1 - X2*X3");
    CHECK(out.pass);
    const json doc = json::parse(out.json);
    CHECK(doc.at("count") == 25);
    CHECK(doc.at("bound") == 25);
    CHECK(doc.at("attains") == true);
    CHECK(doc.at("degree") == 2);

    const json conic = json::parse(audit_count(3, "U^2 + V*W").json);
    CHECK(conic.at("count") == 4);
    CHECK(conic.at("hasse_weil_floor") == 4);
    CHECK(conic.at("nvars") == 3);

    const json split = json::parse(audit_count(2, "X0^2*X1 + X0*X1^2").json);
    CHECK(split.at("linear_components").size() == 3);
    CHECK_FALSE(split.contains("bound"));
}

TEST_CASE("single-shot sections backend") {
    const auto out = audit_sections(2, "X0*X1 - X2^2");
    CHECK(out.pass);
    const json doc = json::parse(out.json);
    CHECK(doc.at("N") == 7);
    CHECK(doc.at("attains") == false);
    CHECK(doc.at("census").at("nu1") == 6);
    CHECK(doc.at("census").at("nu2") == 8);
    CHECK(doc.at("census").at("other") == 1);
}

TEST_CASE("single-shot census and normalform backends") {
    CHECK_THROWS_WITH_AS(audit_census(5), doctest::Contains("ConfigError"), Error);
    const json c = json::parse(audit_census(2).json);
    CHECK(c.at("achievers") == 280);

    const json nf = json::parse(audit_normalform(3, "[1,0,0,0,0,1]").json);
    CHECK(nf.at("rank") == 4);
    CHECK(nf.at("class") == "Rank4Extremal");
    CHECK(nf.at("canonical") == "[1,0,0,0,0,1]");
    CHECK(nf.at("congruence_ok") == true);
    CHECK(nf.at("surface_ok") == true);
    CHECK(nf.at("count") == 40);

    const json r2 = json::parse(audit_normalform(2, "[0,1,0,0,0,0]").json);
    CHECK(r2.at("rank") == 2);
    CHECK(r2.at("class") == "Rank2Split");
    CHECK(r2.at("linear_components").size() == 3);

    CHECK_THROWS_WITH_AS(audit_normalform(3, "[0,0,0,0,0,0]"), doctest::Contains("ZeroMatrix"), Error);
}
