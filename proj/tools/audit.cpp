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

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fqgeom/audit.hpp"
#include "fqgeom/error.hpp"

namespace {

int emit(const fqgeom::AuditOutcome& out, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << out.json;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << out.json;
    }
    return out.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification audit for extremal surfaces in P^3(F_q)"};
    app.require_subcommand(1);

    std::string config_path, out_path, poly, surface, alt;
    unsigned q = 0;

    auto* run = app.add_subcommand("run", "run the checks described by a JSON config");
    run->add_option("--config", config_path, "config file path")->required();
    run->add_option("--out", out_path, "write the report here instead of stdout");

    auto* count = app.add_subcommand("count", "count the rational points of a form");
    count->add_option("--q", q, "field size, a prime power")->required();
    count->add_option("--poly", poly, "form text, e.g. \"X0*X1 - X2*X3\"")->required();
    count->add_option("--out", out_path, "write the report here instead of stdout");

    auto* sections = app.add_subcommand("sections", "plane-section census of a surface");
    sections->add_option("--q", q, "field size, a prime power")->required();
    sections->add_option("--surface", surface, "catalog name or form text")->required();
    sections->add_option("--out", out_path, "write the report here instead of stdout");

    auto* census = app.add_subcommand("census", "exhaustive quadric census");
    census->add_option("--q", q, "2 or 3")->required();
    census->add_option("--out", out_path, "write the report here instead of stdout");

    auto* normalform =
        app.add_subcommand("normalform", "symplectic normal form of an alternating matrix");
    normalform->add_option("--q", q, "field size, a prime power")->required();
    normalform->add_option("--alt", alt, "upper triangle [a01,a02,a03,a12,a13,a23]")->required();
    normalform->add_option("--out", out_path, "write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        fqgeom::AuditOutcome out;
        if (run->parsed()) {
            const fqgeom::AuditConfig cfg = fqgeom::audit_config_from_file(config_path);
            out = fqgeom::run_audit(cfg);
            if (out_path.empty()) out_path = cfg.output_path;
        } else if (count->parsed()) {
            out = fqgeom::audit_count(q, poly);
        } else if (sections->parsed()) {
            out = fqgeom::audit_sections(q, surface);
        } else if (census->parsed()) {
            out = fqgeom::audit_census(q);
        } else {
            out = fqgeom::audit_normalform(q, alt);
        }
        return emit(out, out_path);
    } catch (const fqgeom::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
