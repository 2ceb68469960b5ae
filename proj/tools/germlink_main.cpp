// germlink: exact invariants of finitely determined map germs (C^2,0) -> (C^3,0)
// and a verifier for the local intersection sign computations behind L = C - 3T.

#include "germlink/catalog.hpp"
#include "germlink/invariants.hpp"
#include "germlink/membrane.hpp"
#include "germlink/report_json.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace germlink;

struct ResolvedGerm {
    MapGerm germ;
    std::string name;
    std::string provenance;
};

ResolvedGerm resolve_germ(const std::string& arg) {
    if (const GermSource* gs = find_catalog(arg))
        return {gs->germ(), gs->name, provenance_str(gs->provenance)};
    std::filesystem::path p(arg);
    std::error_code ec;
    if (std::filesystem::is_regular_file(p, ec)) {
        std::ifstream in(p);
        if (!in) throw error("cannot open '" + arg + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        MapGerm g = parse_germ(buf.str());
        g.label = p.stem().string();
        return {std::move(g), p.stem().string(), "user"};
    }
    throw error("'" + arg + "' is neither a catalog germ nor a readable file");
}

std::vector<SignTable> run_scenarios(const std::string& scenario, const VerifyOptions& opts) {
    std::vector<SignTable> tables;
    if (scenario == "umbrella-l1" || scenario == "all")
        tables.push_back(verify_lemma_umbrella_L1(opts));
    if (scenario == "triple-l1" || scenario == "all")
        tables.push_back(verify_lemma_triple_L1(opts));
    if (scenario == "umbrella-l2" || scenario == "all")
        tables.push_back(verify_umbrella_L2(opts));
    if (tables.empty())
        throw error("unknown scenario '" + scenario +
                    "' (expected umbrella-l1, triple-l1, umbrella-l2 or all)");
    return tables;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants C, T, d and L = C - 3T of map germs (C^2,0) -> (C^3,0)"};
    app.require_subcommand(1);

    std::string germ_arg, scenario;
    bool json = false, no_oracle = false, delta_check = false;
    unsigned degree_cap = 12;

    auto add_common = [&](CLI::App* sub, bool takes_germ) {
        if (takes_germ)
            sub->add_option("germ", germ_arg, "catalog name or germ file")->required();
        sub->add_flag("--json", json, "emit the JSON report document");
    };
    auto add_oracle_opts = [&](CLI::App* sub) {
        sub->add_option("--degree-cap", degree_cap, "truncation cap for the codimension oracle")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--no-oracle", no_oracle, "skip the truncated-ring cross-checks");
    };

    CLI::App* inv = app.add_subcommand("invariants", "full invariant report for a germ");
    add_common(inv, true);
    add_oracle_opts(inv);

    CLI::App* chk = app.add_subcommand("check", "finite determinacy verdict with evidence");
    add_common(chk, true);
    add_oracle_opts(chk);

    CLI::App* pres = app.add_subcommand("presentation",
                                        "presentation matrix and Fitting ideals F0..F2");
    add_common(pres, true);

    CLI::App* ver = app.add_subcommand("verify-local",
                                       "re-execute the local intersection sign computations");
    ver->add_option("scenario", scenario,
                    "umbrella-l1, triple-l1, umbrella-l2 or all")->required();
    ver->add_flag("--json", json, "emit the JSON report document");
    ver->add_flag("--delta-check", delta_check,
                  "re-run each table with a second formal shift symbol");

    CLI::App* cat = app.add_subcommand("catalog", "list the built-in germs");
    cat->add_flag("--json", json, "emit the JSON report document");

    CLI::App* orc = app.add_subcommand("oracle",
                                       "cross-check every codimension against the truncated ring");
    add_common(orc, true);
    orc->add_option("--degree-cap", degree_cap, "truncation cap for the codimension oracle")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const ReportFormat fmt = json ? ReportFormat::json : ReportFormat::text;

    try {
        if (app.got_subcommand(cat)) {
            std::cout << serialize_catalog(fmt);
            return 0;
        }
        if (app.got_subcommand(ver)) {
            VerifyOptions opts;
            opts.shift_check = delta_check;
            std::cout << serialize_tables(run_scenarios(scenario, opts), fmt);
            return 0;
        }

        ResolvedGerm rg = resolve_germ(germ_arg);
        ReportOptions opts;
        opts.oracle_cap = degree_cap;

        if (app.got_subcommand(inv)) {
            opts.use_oracle = !no_oracle;
            std::cout << serialize_report(full_report(rg.germ, opts), fmt, rg.name,
                                          rg.provenance);
        } else if (app.got_subcommand(chk)) {
            opts.use_oracle = !no_oracle;
            opts.with_presentation = true; // T needs the Fitting route
            std::cout << serialize_check(full_report(rg.germ, opts), fmt, rg.name,
                                         rg.provenance);
        } else if (app.got_subcommand(pres)) {
            opts.use_oracle = false;
            std::cout << serialize_presentation(full_report(rg.germ, opts), fmt, rg.name,
                                                rg.provenance);
        } else if (app.got_subcommand(orc)) {
            opts.use_oracle = true;
            std::cout << serialize_oracle(full_report(rg.germ, opts), fmt, rg.name,
                                          rg.provenance);
        }
        return 0;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
