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

#ifndef FQGEOM_AUDIT_HPP
#define FQGEOM_AUDIT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fqgeom/gf.hpp"

namespace fqgeom {

struct AuditCheckSet {
    bool bounds = false;
    bool sections = false;
    bool lines = false;
    bool tangency = false;
    bool altform = false;
    bool quadric_census = false;
};

/// Run description. `surfaces` entries are either catalog names (hyperbolic,
/// hermitian, fullspace) or inline form text in X0..X3. When the config JSON
/// has no "checks" key, every check applicable to the q_list is selected
/// (quadric_census only when all q are 2 or 3).
struct AuditConfig {
    std::vector<unsigned> q_list;
    std::vector<std::string> surfaces;
    AuditCheckSet checks;
    Budget budget;
    std::string output_path; // empty = stdout (handled by the CLI, not here)
};

/// Errors: config_error on malformed JSON, non-prime-power q, unknown
/// surface-check or catalog token, or quadric_census at q outside {2,3}.
AuditConfig audit_config_from_json(std::string_view text);
AuditConfig audit_config_from_file(const std::string& path);

/// `json` is the full report, pretty-printed with sorted keys, so identical
/// inputs give byte-identical output. `pass` mirrors the report's top-level
/// pass flag; the CLI turns it into the exit status.
struct AuditOutcome {
    bool pass = false;
    std::string json;
};

/// Errors: config_error, budget_exceeded. Per-surface failures (q_not_square
/// and friends) become error records inside the report, not exceptions.
AuditOutcome run_audit(const AuditConfig& cfg);

// Single-shot backends of the CLI subcommands.
AuditOutcome audit_count(unsigned q, const std::string& poly_text, const Budget& budget = Budget{});
AuditOutcome audit_sections(unsigned q, const std::string& surface_text, const Budget& budget = Budget{});
AuditOutcome audit_census(unsigned q, const Budget& budget = Budget{});
AuditOutcome audit_normalform(unsigned q, const std::string& alt_text, const Budget& budget = Budget{});

/// Exhaustive sweep of the (q^10 - 1)/(q - 1) quadric forms up to scalar:
/// 1023 at q = 2, 29524 at q = 3. Projective equivalence of the achievers to
/// the hyperbolic quadric is decided by explicit PGL(4,2)-orbit computation
/// at q = 2 and by nonsingularity (exact Gram rank) plus the point count,
/// which separates hyperbolic (q+1)^2 from elliptic q^2+1, at q = 3.
struct QuadricCensusRecord {
    unsigned q = 0;
    unsigned long long total_forms = 0;
    unsigned long long plane_free = 0;
    unsigned long long with_plane_component = 0;
    unsigned long long max_count = 0;
    unsigned long long achievers = 0;
    bool all_achievers_hyperbolic = false;
    std::string equivalence_method;
    bool pass = false;
};

/// Errors: precondition_violated unless q is 2 or 3, budget_exceeded.
QuadricCensusRecord quadric_census(const FieldCtx& F, const Budget& budget = Budget{});

/// One row per degree d = 2..q+1: the witness x0 = q(q - (d-1)^2)/d as an
/// exact reduced fraction, whether it is nonnegative, and whether d is an
/// admissible degree. sign_matches_gate records that x0 >= 0 happens exactly
/// for (d-1)^2 <= q.
struct DegreeGateEntry {
    unsigned d = 0;
    long long x0_num = 0;
    long long x0_den = 1;
    bool nonneg = false;
    bool admissible = false;
};

struct DegreeGateRecord {
    unsigned q = 0;
    std::vector<DegreeGateEntry> entries;
    std::vector<unsigned> admissible;
    bool sign_matches_gate = false;
    bool catalog_degrees_admissible = false;
    bool pass = false;
};

DegreeGateRecord degree_gate_check(unsigned q);

} // namespace fqgeom

#endif // FQGEOM_AUDIT_HPP
