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

#include "fqgeom/audit.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fqgeom/altform.hpp"
#include "fqgeom/catalog.hpp"
#include "fqgeom/poly.hpp"
#include "fqgeom/projgeom.hpp"
#include "fqgeom/sections.hpp"

namespace fqgeom {
namespace {

using json = nlohmann::json; // std::map-backed: keys serialize sorted

FieldCtx make_field(unsigned q, const Budget& budget) {
    unsigned p = 0, e = 0;
    if (!prime_power_decompose(q, p, e))
        raise(errc::config_error, "q = " + std::to_string(q) + " is not a prime power");
    return FieldCtx(p, e, budget);
}

const std::array<std::pair<const char*, bool AuditCheckSet::*>, 6> kChecks{{
    {"bounds", &AuditCheckSet::bounds},
    {"sections", &AuditCheckSet::sections},
    {"lines", &AuditCheckSet::lines},
    {"tangency", &AuditCheckSet::tangency},
    {"altform", &AuditCheckSet::altform},
    {"quadric_census", &AuditCheckSet::quadric_census},
}};

void validate_config(const AuditConfig& cfg, errc over_budget) {
    if (cfg.q_list.empty()) raise(errc::config_error, "q_list is empty");
    for (unsigned q : cfg.q_list) {
        unsigned p = 0, e = 0;
        if (!prime_power_decompose(q, p, e))
            raise(errc::config_error, "q = " + std::to_string(q) + " is not a prime power");
        if (cfg.checks.quadric_census && q != 2 && q != 3)
            raise(errc::config_error, "quadric_census runs only at q = 2 or q = 3");
        if (q > cfg.budget.max_q_field || q > cfg.budget.max_q_space)
            raise(over_budget, "q = " + std::to_string(q) + " exceeds the configured budget");
    }
}

json render_all(const std::vector<HomogeneousForm>& forms) {
    json arr = json::array();
    for (const auto& f : forms) arr.push_back(f.render());
    return arr;
}

/// One surface record of the report. Failures that belong to the surface
/// rather than the run (q_not_square, components, parse errors) land in the
/// record's error fields; `all_pass` picks up the verdict either way.
json surface_record(const FieldCtx& F, const std::string& surface_spec, const AuditCheckSet& checks,
                    const Budget& budget, bool& all_pass) {
    json rec;
    rec["q"] = F.q();
    rec["surface"] = surface_spec;

    std::optional<HomogeneousForm> parsed;
    try {
        if (auto id = catalog_from_name(surface_spec)) {
            parsed = catalog_surface(*id, F);
        } else {
            parsed = parse_form(F, surface_spec);
            if (parsed->nvars() != 4)
                raise(errc::config_error, "inline surfaces take the four variables X0..X3");
        }
    } catch (const Error& e) {
        rec["error"] = errc_name(e.code());
        rec["error_detail"] = e.what();
        rec["pass"] = false;
        all_pass = false;
        return rec;
    }
    const HomogeneousForm& S = *parsed;

    rec["form"] = S.render();
    rec["d"] = S.degree();
    const unsigned long long N = count_points(S, budget);
    const unsigned long long bound = elementary_bound(S.degree(), F.q());
    const bool attains = N == bound;
    rec["N"] = N;
    rec["bound"] = bound;
    rec["attains"] = attains;

    const auto comps = fq_linear_components(S, budget);
    rec["linear_components"] = render_all(comps);
    if (!comps.empty()) {
        rec["error"] = errc_name(errc::component_present);
        rec["error_detail"] = "rational plane components make the bound and section checks inapplicable";
        rec["pass"] = false;
        all_pass = false;
        return rec;
    }

    bool ok = true;
    if (checks.bounds) ok = ok && N <= bound;

    if (checks.sections) {
        const SectionCensus c = section_census(S, budget);
        rec["census"] = {{"nu1", c.nu1}, {"nu2", c.nu2}, {"other", c.other}};
        const unsigned long long th = theta(F.q(), 3);
        bool ids = c.nu1 + c.nu2 + c.other == th;
        if (attains) ids = ids && c.nu1 == N && c.nu2 == th - N && c.other == 0;
        rec["identities_ok"] = ids;
        ok = ok && ids;

        if (attains) {
            bool vb = true;
            try {
                vb = pencil_vertex_bijection(S, budget).size() == N;
            } catch (const Error&) {
                vb = false;
            }
            rec["vertex_bijection_ok"] = vb;
            ok = ok && vb;
        }
    }

    // lines and tangency both walk every plane, so classify each plane once
    std::vector<ProjPlane> planes;
    std::vector<SectionClass> cls;
    if (checks.lines || checks.tangency) {
        planes = enumerate_planes(F, budget);
        cls.reserve(planes.size());
        for (const auto& H : planes) cls.push_back(classify_section(S, H, budget));
    }

    if (checks.lines) {
        std::set<unsigned> spectrum;
        bool ab_ok = true;
        for (const auto& l : enumerate_lines(F, budget)) {
            unsigned alpha = 0;
            for (const auto& P : line_points(l))
                if (S.evaluate(P).is_zero()) ++alpha;
            spectrum.insert(alpha);
            unsigned beta = 0;
            for (size_t i = 0; i < planes.size(); ++i)
                if (cls[i].kind == SectionClass::Kind::PlanarPencil &&
                    plane_contains_line(planes[i], l))
                    ++beta;
            if (alpha != beta) ab_ok = false;
        }
        const std::set<unsigned> allowed{0u, 1u, S.degree(), F.q() + 1};
        const bool spec_ok =
            std::includes(allowed.begin(), allowed.end(), spectrum.begin(), spectrum.end());
        rec["spectrum"] = spectrum;
        rec["spectrum_ok"] = spec_ok;
        rec["alpha_beta_ok"] = ab_ok;
        if (attains) ok = ok && spec_ok && ab_ok;
    }

    if (checks.tangency) {
        const TangencyExpected want = tangency_expected(S.degree(), F.q());
        const unsigned long long th2 = theta(F.q(), 2);
        unsigned long long examined = 0;
        bool t_ok = true;
        for (size_t i = 0; i < planes.size(); ++i) {
            if (cls[i].kind != SectionClass::Kind::ExtremalCurve) continue;
            ++examined;
            const TangencyCensus t = tangency_census(restrict_to_plane(S, planes[i]), budget);
            const bool match = t.other.empty() && t.x1 == want.x1 &&
                               static_cast<long long>(t.xd) * want.xd_den == want.xd_num &&
                               static_cast<long long>(t.x0) * want.x0_den == want.x0_num &&
                               t.x0 + t.x1 + t.xd == th2;
            if (!match) t_ok = false;
        }
        rec["tangency"] = {{"extremal_sections", examined}, {"ok", t_ok}};
        if (attains) ok = ok && t_ok;
    }

    rec["pass"] = ok;
    all_pass = all_pass && ok;
    return rec;
}

json altform_record(const FieldCtx& F, const Budget& budget, bool& all_pass) {
    const unsigned q = F.q();
    std::vector<std::array<uint16_t, 6>> uppers;
    if (q == 2) {
        for (unsigned code = 1; code < 64; ++code) {
            std::array<uint16_t, 6> u{};
            for (unsigned k = 0; k < 6; ++k) u[k] = (code >> k) & 1u;
            uppers.push_back(u);
        }
    } else {
        std::mt19937 rng(1000003u * q + 17u);
        while (uppers.size() < 200) {
            std::array<uint16_t, 6> u{};
            bool nonzero = false;
            for (auto& x : u) {
                x = static_cast<uint16_t>(rng() % q);
                nonzero = nonzero || x != 0;
            }
            if (nonzero) uppers.push_back(u);
        }
    }

    unsigned long long rank2 = 0, rank4 = 0;
    bool congruence_ok = true, class_ok = true, surfaces_ok = true;
    for (const auto& u : uppers) {
        const AlternatingMatrix A(F, {F.from_index(u[0]), F.from_index(u[1]), F.from_index(u[2]),
                                      F.from_index(u[3]), F.from_index(u[4]), F.from_index(u[5])});
        const SymplecticNormalForm nf = symplectic_normal_form(A);
        if (!nf.G.invertible() || alt_congruence(A, nf.G) != nf.canonical) congruence_ok = false;
        if ((rank_classify(A) == AltRankClass::Rank2Split) != (nf.rank == 2)) class_ok = false;

        const HomogeneousForm Sf = surface_from_alternating(A);
        const auto comps = fq_linear_components(Sf, budget);
        if (nf.rank == 2) {
            ++rank2;
            if (comps.size() != q + 1) surfaces_ok = false;
        } else {
            ++rank4;
            if (!comps.empty() || count_points(Sf, budget) != theta(q, 3)) surfaces_ok = false;
        }
    }

    json r;
    r["q"] = q;
    r["cases"] = uppers.size();
    r["exhaustive"] = q == 2;
    r["rank2_cases"] = rank2;
    r["rank4_cases"] = rank4;
    r["congruence_ok"] = congruence_ok;
    r["rank_class_ok"] = class_ok;
    r["surfaces_ok"] = surfaces_ok;
    const bool ok = congruence_ok && class_ok && surfaces_ok;
    r["pass"] = ok;
    all_pass = all_pass && ok;
    return r;
}

// The 10 quadric monomials X_i X_j (i <= j) with their index pairs, sorted by
// exponent vector so positions agree with HomogeneousForm term order.
using QuadricBasis = std::vector<std::pair<Expo, std::pair<unsigned, unsigned>>>;

QuadricBasis quadric_basis() {
    QuadricBasis b;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = i; j < 4; ++j) {
            Expo ex{};
            ex[i] = static_cast<uint8_t>(ex[i] + 1);
            ex[j] = static_cast<uint8_t>(ex[j] + 1);
            b.emplace_back(ex, std::make_pair(i, j));
        }
    std::sort(b.begin(), b.end());
    return b;
}

uint64_t encode_quadric(const HomogeneousForm& f, const QuadricBasis& basis, unsigned q) {
    uint64_t code = 0, w = 1;
    for (const auto& [ex, ij] : basis) {
        code += static_cast<uint64_t>(f.coeff(ex).index()) * w;
        w *= q;
    }
    return code;
}

/// No point of the quadric over F_q or F_{q^2} kills f and all four partials.
/// Char-2 only; square terms drop out of the partials there.
bool quadric_nonsingular_char2(const std::vector<uint16_t>& c, const QuadricBasis& basis,
                               const FieldCtx& F) {
    const FieldCtx F2(F.p(), 2 * F.e(), Budget{});
    for (const auto& P : enumerate_points(F2, 3, Budget{})) {
        const auto& x = P.coords();
        FieldElement f = F2.zero();
        std::array<FieldElement, 4> part{F2.zero(), F2.zero(), F2.zero(), F2.zero()};
        for (size_t m = 0; m < basis.size(); ++m) {
            if (c[m] == 0) continue;
            const auto [i, j] = basis[m].second;
            const FieldElement cm = F2.from_index(c[m]); // prime-subfield lift
            f = f + cm * x[i] * x[j];
            if (i != j) {
                part[i] = part[i] + cm * x[j];
                part[j] = part[j] + cm * x[i];
            }
        }
        if (f.is_zero() && part[0].is_zero() && part[1].is_zero() && part[2].is_zero() &&
            part[3].is_zero())
            return false;
    }
    return true;
}

json census_json(const QuadricCensusRecord& r) {
    json j;
    j["q"] = r.q;
    j["total_forms"] = r.total_forms;
    j["plane_free"] = r.plane_free;
    j["with_plane_component"] = r.with_plane_component;
    j["max_count"] = r.max_count;
    j["achievers"] = r.achievers;
    j["all_achievers_hyperbolic"] = r.all_achievers_hyperbolic;
    j["equivalence_method"] = r.equivalence_method;
    j["pass"] = r.pass;
    return j;
}

json degree_gate_json(const DegreeGateRecord& r) {
    json j;
    j["q"] = r.q;
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"d", e.d},
                           {"x0_num", e.x0_num},
                           {"x0_den", e.x0_den},
                           {"nonneg", e.nonneg},
                           {"admissible", e.admissible}});
    j["entries"] = entries;
    j["admissible_degrees"] = r.admissible;
    j["sign_matches_gate"] = r.sign_matches_gate;
    j["catalog_degrees_admissible"] = r.catalog_degrees_admissible;
    j["pass"] = r.pass;
    return j;
}

json config_echo(const AuditConfig& cfg) {
    json j;
    j["q_list"] = cfg.q_list;
    j["surfaces"] = cfg.surfaces;
    json names = json::array();
    for (const auto& [name, member] : kChecks)
        if (cfg.checks.*member) names.push_back(name);
    j["checks"] = names;
    j["budget"] = {{"max_q_field", cfg.budget.max_q_field}, {"max_q_space", cfg.budget.max_q_space}};
    if (!cfg.output_path.empty()) j["output_path"] = cfg.output_path;
    return j;
}

AuditOutcome finish(bool pass, const json& report) {
    AuditOutcome out;
    out.pass = pass;
    out.json = report.dump(2) + "\n";
    return out;
}

} // namespace

AuditConfig audit_config_from_json(std::string_view text) {
    const json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object())
        raise(errc::config_error, "config must be a JSON object");

    AuditConfig cfg;
    if (!j.contains("q_list") || !j["q_list"].is_array() || j["q_list"].empty())
        raise(errc::config_error, "q_list must be a nonempty array of prime powers");
    for (const auto& v : j["q_list"]) {
        if (!v.is_number_unsigned())
            raise(errc::config_error, "q_list entries must be positive integers");
        cfg.q_list.push_back(v.get<unsigned>());
    }

    if (j.contains("surfaces")) {
        if (!j["surfaces"].is_array())
            raise(errc::config_error, "surfaces must be an array of names or form text");
        for (const auto& v : j["surfaces"]) {
            if (!v.is_string())
                raise(errc::config_error, "surfaces must be an array of names or form text");
            cfg.surfaces.push_back(v.get<std::string>());
        }
    }

    if (j.contains("budget")) {
        const auto& b = j["budget"];
        if (!b.is_object()) raise(errc::config_error, "budget must be an object");
        if (b.contains("max_q_field")) {
            if (!b["max_q_field"].is_number_unsigned())
                raise(errc::config_error, "budget.max_q_field must be a positive integer");
            cfg.budget.max_q_field = b["max_q_field"].get<unsigned>();
        }
        if (b.contains("max_q_space")) {
            if (!b["max_q_space"].is_number_unsigned())
                raise(errc::config_error, "budget.max_q_space must be a positive integer");
            cfg.budget.max_q_space = b["max_q_space"].get<unsigned>();
        }
    }

    if (j.contains("output_path")) {
        if (!j["output_path"].is_string())
            raise(errc::config_error, "output_path must be a string");
        cfg.output_path = j["output_path"].get<std::string>();
    }

    if (j.contains("checks")) {
        if (!j["checks"].is_array()) raise(errc::config_error, "checks must be an array of names");
        for (const auto& v : j["checks"]) {
            const auto it =
                std::find_if(kChecks.begin(), kChecks.end(), [&](const auto& entry) {
                    return v.is_string() && v.get<std::string>() == entry.first;
                });
            if (it == kChecks.end())
                raise(errc::config_error, "unknown check " + v.dump());
            cfg.checks.*(it->second) = true;
        }
    } else {
        cfg.checks.bounds = cfg.checks.sections = cfg.checks.lines = cfg.checks.tangency =
            cfg.checks.altform = true;
        cfg.checks.quadric_census = std::all_of(cfg.q_list.begin(), cfg.q_list.end(),
                                                [](unsigned q) { return q == 2 || q == 3; });
    }

    validate_config(cfg, errc::config_error);
    return cfg;
}

AuditConfig audit_config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::config_error, "cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return audit_config_from_json(buf.str());
}

DegreeGateRecord degree_gate_check(unsigned q) {
    DegreeGateRecord r;
    r.q = q;
    r.admissible = admissible_degrees(q);
    const auto admitted = [&](unsigned d) {
        return std::find(r.admissible.begin(), r.admissible.end(), d) != r.admissible.end();
    };

    bool sign_ok = true;
    for (unsigned d = 2; d <= q + 1; ++d) {
        DegreeGateEntry e;
        e.d = d;
        const long long dm1 = static_cast<long long>(d) - 1;
        e.x0_num = static_cast<long long>(q) * (static_cast<long long>(q) - dm1 * dm1);
        e.x0_den = d;
        const long long g = std::gcd(e.x0_num < 0 ? -e.x0_num : e.x0_num, e.x0_den);
        if (g > 1) {
            e.x0_num /= g;
            e.x0_den /= g;
        }
        e.nonneg = e.x0_num >= 0;
        e.admissible = admitted(d);
        if (e.nonneg != (dm1 * dm1 <= static_cast<long long>(q))) sign_ok = false;
        r.entries.push_back(e);
    }
    r.sign_matches_gate = sign_ok;

    bool cat_ok = admitted(2) && admitted(q + 1);
    if (const auto root = exact_sqrt(q)) cat_ok = cat_ok && admitted(*root + 1);
    r.catalog_degrees_admissible = cat_ok;
    r.pass = sign_ok && cat_ok;
    return r;
}

QuadricCensusRecord quadric_census(const FieldCtx& F, const Budget& budget) {
    const unsigned q = F.q();
    if (q != 2 && q != 3)
        raise(errc::precondition_violated, "the quadric census runs at q = 2 or q = 3");

    const QuadricBasis basis = quadric_basis();
    const auto pts = enumerate_points(F, 3, budget);
    const auto planes = enumerate_planes(F, budget);
    const size_t n = pts.size();

    std::vector<std::vector<uint16_t>> vals(basis.size(), std::vector<uint16_t>(n));
    for (size_t m = 0; m < basis.size(); ++m) {
        const auto [i, j] = basis[m].second;
        for (size_t t = 0; t < n; ++t)
            vals[m][t] = F.tbl_mul(pts[t].coords()[i].index(), pts[t].coords()[j].index());
    }
    std::vector<std::vector<uint32_t>> on_plane(planes.size());
    for (size_t h = 0; h < planes.size(); ++h)
        for (size_t t = 0; t < n; ++t)
            if (incident(pts[t], planes[h])) on_plane[h].push_back(static_cast<uint32_t>(t));

    uint64_t code_count = 1;
    for (int m = 0; m < 10; ++m) code_count *= q;

    QuadricCensusRecord rec;
    rec.q = q;
    std::vector<uint64_t> achievers;
    std::vector<uint16_t> c(basis.size());
    std::vector<uint8_t> zero(n);
    for (uint64_t code = 1; code < code_count; ++code) {
        uint64_t rest = code;
        int first_nz = -1;
        for (size_t m = 0; m < basis.size(); ++m) {
            c[m] = static_cast<uint16_t>(rest % q);
            rest /= q;
            if (first_nz < 0 && c[m] != 0) first_nz = static_cast<int>(m);
        }
        if (c[static_cast<size_t>(first_nz)] != 1) continue; // one representative per scalar class
        ++rec.total_forms;

        unsigned long long cnt = 0;
        for (size_t t = 0; t < n; ++t) {
            uint16_t s = 0;
            for (size_t m = 0; m < basis.size(); ++m)
                if (c[m] != 0) s = F.tbl_add(s, F.tbl_mul(c[m], vals[m][t]));
            zero[t] = s == 0;
            cnt += zero[t];
        }

        bool has_plane = false;
        for (size_t h = 0; h < planes.size() && !has_plane; ++h) {
            bool all = true;
            for (const uint32_t t : on_plane[h])
                if (!zero[t]) {
                    all = false;
                    break;
                }
            has_plane = all;
        }
        if (has_plane) {
            ++rec.with_plane_component;
            continue;
        }
        ++rec.plane_free;
        if (cnt > rec.max_count) {
            rec.max_count = cnt;
            achievers.clear();
        }
        if (cnt == rec.max_count) achievers.push_back(code);
    }
    rec.achievers = achievers.size();

    const bool max_ok = rec.max_count == static_cast<unsigned long long>(q + 1) * (q + 1);
    bool equiv_ok = true;
    if (q == 2) {
        rec.equivalence_method = "pgl-orbit";
        const HomogeneousForm hyp = hyperbolic(F);
        std::set<uint64_t> orbit;
        for (unsigned bits = 0; bits < 65536; ++bits) {
            Mat G(F, 4, 4);
            for (unsigned i = 0; i < 4; ++i)
                for (unsigned j = 0; j < 4; ++j)
                    if ((bits >> (4 * i + j)) & 1u) G.set(i, j, F.one());
            if (!G.invertible()) continue;
            orbit.insert(encode_quadric(substitute_linear(hyp, G).canonical_scaled(), basis, q));
        }
        const std::set<uint64_t> got(achievers.begin(), achievers.end());
        equiv_ok = orbit == got;
        for (const uint64_t code : achievers) {
            uint64_t rest = code;
            for (size_t m = 0; m < basis.size(); ++m) {
                c[m] = static_cast<uint16_t>(rest % q);
                rest /= q;
            }
            if (!quadric_nonsingular_char2(c, basis, F)) equiv_ok = false;
        }
    } else {
        rec.equivalence_method = "gram-rank-and-count";
        const FieldElement inv2 = (F.one() + F.one()).inv();
        for (const uint64_t code : achievers) {
            uint64_t rest = code;
            for (size_t m = 0; m < basis.size(); ++m) {
                c[m] = static_cast<uint16_t>(rest % q);
                rest /= q;
            }
            Mat B(F, 4, 4);
            for (size_t m = 0; m < basis.size(); ++m) {
                const auto [i, j] = basis[m].second;
                const FieldElement cm = F.from_index(c[m]);
                if (i == j) {
                    B.set(i, i, cm);
                } else {
                    const FieldElement half = cm * inv2;
                    B.set(i, j, half);
                    B.set(j, i, half);
                }
            }
            if (B.rank() != 4) equiv_ok = false;
        }
    }
    rec.all_achievers_hyperbolic = equiv_ok;
    rec.pass = max_ok && equiv_ok && rec.plane_free + rec.with_plane_component == rec.total_forms;
    return rec;
}

AuditOutcome run_audit(const AuditConfig& cfg) {
    validate_config(cfg, errc::budget_exceeded);

    json report;
    report["config"] = config_echo(cfg);
    bool pass = true;

    json surfaces = json::array();
    json gates = json::array();
    json altforms = json::array();
    json censuses = json::array();
    for (const unsigned q : cfg.q_list) {
        const FieldCtx F = make_field(q, cfg.budget);
        if (cfg.checks.bounds) {
            const DegreeGateRecord g = degree_gate_check(q);
            gates.push_back(degree_gate_json(g));
            pass = pass && g.pass;
        }
        for (const auto& s : cfg.surfaces)
            surfaces.push_back(surface_record(F, s, cfg.checks, cfg.budget, pass));
        if (cfg.checks.altform) altforms.push_back(altform_record(F, cfg.budget, pass));
        if (cfg.checks.quadric_census) {
            const QuadricCensusRecord c = quadric_census(F, cfg.budget);
            censuses.push_back(census_json(c));
            pass = pass && c.pass;
        }
    }

    report["surfaces"] = surfaces;
    if (cfg.checks.bounds) report["degree_gate"] = gates;
    if (cfg.checks.altform) report["altform"] = altforms;
    if (cfg.checks.quadric_census) report["quadric_census"] = censuses;
    report["pass"] = pass;
    return finish(pass, report);
}

AuditOutcome audit_count(unsigned q, const std::string& poly_text, const Budget& budget) {
    const FieldCtx F = make_field(q, budget);
    const HomogeneousForm f = parse_form(F, poly_text);

    json r;
    r["q"] = q;
    r["form"] = f.render();
    r["nvars"] = f.nvars();
    r["degree"] = f.degree();
    r["count"] = count_points(f, budget);
    const auto comps = fq_linear_components(f, budget);
    r["linear_components"] = render_all(comps);
    if (comps.empty()) {
        const BoundReport b = bound_check(f, budget);
        r["bound"] = b.bound;
        r["attains"] = b.attains;
        if (b.hasse_weil) r["hasse_weil_floor"] = b.hasse_weil->floor_value;
    }
    return finish(true, r);
}

AuditOutcome audit_sections(unsigned q, const std::string& surface_text, const Budget& budget) {
    const FieldCtx F = make_field(q, budget);
    AuditCheckSet checks;
    checks.bounds = checks.sections = true;
    bool pass = true;
    const json rec = surface_record(F, surface_text, checks, budget, pass);
    return finish(pass, rec);
}

AuditOutcome audit_census(unsigned q, const Budget& budget) {
    if (q != 2 && q != 3) raise(errc::config_error, "census takes q = 2 or q = 3");
    const FieldCtx F = make_field(q, budget);
    const QuadricCensusRecord rec = quadric_census(F, budget);
    return finish(rec.pass, census_json(rec));
}

AuditOutcome audit_normalform(unsigned q, const std::string& alt_text, const Budget& budget) {
    const FieldCtx F = make_field(q, budget);
    const AlternatingMatrix A = AlternatingMatrix::parse(F, alt_text);
    const SymplecticNormalForm nf = symplectic_normal_form(A);
    const bool congruence_ok = nf.G.invertible() && alt_congruence(A, nf.G) == nf.canonical;
    const AltRankClass cls = rank_classify(A);

    json r;
    r["q"] = q;
    r["alt"] = A.render();
    r["rank"] = nf.rank;
    r["class"] = alt_rank_class_name(cls);
    r["canonical"] = nf.canonical.render();
    json rows = json::array();
    for (unsigned i = 0; i < 4; ++i) {
        json row = json::array();
        for (unsigned j = 0; j < 4; ++j) row.push_back(nf.G.at(i, j).render());
        rows.push_back(row);
    }
    r["transform"] = rows;
    r["congruence_ok"] = congruence_ok;

    const HomogeneousForm S = surface_from_alternating(A);
    r["surface"] = S.render();
    bool ok = congruence_ok && (cls == AltRankClass::Rank2Split) == (nf.rank == 2);
    if (q <= budget.max_q_space) {
        const auto comps = fq_linear_components(S, budget);
        const unsigned long long N = count_points(S, budget);
        r["count"] = N;
        r["linear_components"] = render_all(comps);
        const bool surface_ok = nf.rank == 2 ? comps.size() == q + 1
                                             : comps.empty() && N == theta(q, 3);
        r["surface_ok"] = surface_ok;
        ok = ok && surface_ok;
    } else {
        r["surface_checked"] = false;
    }
    r["pass"] = ok;
    return finish(ok, r);
}

} // namespace fqgeom
