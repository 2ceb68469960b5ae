#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germlink/catalog.hpp"
#include "germlink/report_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace germlink;

// run the built tool and capture stdout plus the exit status
static std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(GERMLINK_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

static std::string golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TEST_CASE("catalog lookup") {
    REQUIRE(catalog().size() == 7);
    const GermSource* u = find_catalog("umbrella");
    REQUIRE(u != nullptr);
    CHECK(u->name == "umbrella");
    CHECK(u->text() == "Phi(s,t) = (s^2, s*t, t)");
    CHECK(provenance_str(u->provenance) == "normal-form");
    CHECK(find_catalog("no-such-germ") == nullptr);

    // every entry parses and carries its name as the label
    for (const GermSource& gs : catalog()) {
        MapGerm g = gs.germ();
        CHECK(g.label == gs.name);
        CHECK_FALSE(g.branches.empty());
    }
}

TEST_CASE("catalog serialization matches the golden bytes") {
    CHECK(serialize_catalog(ReportFormat::text) == golden("catalog.txt"));
    CHECK(serialize_catalog(ReportFormat::json) == golden("catalog.json"));
}

TEST_CASE("cli: invariants against goldens") {
    auto [code, out] = run_cli("invariants umbrella");
    CHECK(code == 0);
    CHECK(out == golden("umbrella.txt"));

    auto [jcode, jout] = run_cli("invariants umbrella --json");
    CHECK(jcode == 0);
    CHECK(jout == golden("umbrella.json"));

    auto [tcode, tout] = run_cli("invariants triple");
    CHECK(tcode == 0);
    CHECK(tout == golden("triple.txt"));
}

TEST_CASE("cli: corank 2 report against goldens") {
    auto [code, out] = run_cli("invariants double-cover");
    CHECK(code == 0);
    CHECK(out == golden("double-cover.txt"));

    auto [jcode, jout] = run_cli("invariants double-cover --json");
    CHECK(jcode == 0);
    CHECK(jout == golden("double-cover.json"));
}

TEST_CASE("cli: catalog and verifier outputs") {
    auto [ccode, cout_] = run_cli("catalog");
    CHECK(ccode == 0);
    CHECK(cout_ == golden("catalog.txt"));

    auto [vcode, vout] = run_cli("verify-local all");
    CHECK(vcode == 0);
    CHECK(vout == golden("verify_all.txt"));

    auto [jcode, jout] = run_cli("verify-local all --json");
    CHECK(jcode == 0);
    CHECK(jout == golden("verify_all.json"));
}

TEST_CASE("cli: output is byte deterministic") {
    auto first = run_cli("invariants family-2 --json");
    auto second = run_cli("invariants family-2 --json");
    CHECK(first.first == 0);
    CHECK(first == second);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("invariants does-not-exist").first == 1);
    CHECK(run_cli("verify-local no-such-lemma").first == 1);
    CHECK(run_cli("frobnicate").first == 1);
    CHECK(run_cli("invariants").first == 1);        // missing argument
    CHECK(run_cli("--help").first == 0);
    CHECK(run_cli("invariants umbrella --degree-cap 0").first == 1);
}

TEST_CASE("cli: germ files are accepted") {
    std::string path = "/tmp/germlink_test_input.germ";
    {
        std::ofstream out(path);
        out << "G(a,b) = (a, b^2, b^3 + a^2*b)\n";
    }
    auto [code, out] = run_cli("check " + path);
    CHECK(code == 0);
    CHECK(out.find("name: germlink_test_input") != std::string::npos);
    CHECK(out.find("verdict: yes") != std::string::npos);
    CHECK(out.find("L: 2") != std::string::npos);
    std::remove(path.c_str());

    // unparseable content is an input error
    {
        std::ofstream bad("/tmp/germlink_test_bad.germ");
        bad << "this is not a germ\n";
    }
    CHECK(run_cli("invariants /tmp/germlink_test_bad.germ").first == 1);
    std::remove("/tmp/germlink_test_bad.germ");
}

TEST_CASE("cli: flags reach the report") {
    auto [code, out] = run_cli("invariants family-1 --no-oracle");
    CHECK(code == 0);
    CHECK(out.find("oracle") == std::string::npos);

    auto [ocode, oout] = run_cli("oracle family-1 --degree-cap 9");
    CHECK(ocode == 0);
    CHECK(oout.find("all truncation checks consistent") != std::string::npos);

    auto [dcode, dout] = run_cli("verify-local umbrella-l1 --delta-check");
    CHECK(dcode == 0);
    CHECK(dout.find("second shift symbol reproduces the table") != std::string::npos);
}

TEST_CASE("cli: presentation subcommand") {
    auto [code, out] = run_cli("presentation umbrella");
    CHECK(code == 0);
    CHECK(out.find("generators: 1, s") != std::string::npos);
    CHECK(out.find("det: -x*z^2 + y^2") != std::string::npos);
    CHECK(out.find("F2: 1") != std::string::npos);
}
