#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polysphere/cli.hpp"

using namespace polysphere;

namespace {

const std::filesystem::path kSource = POLYSPHERE_SOURCE_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string src(const char* rel) { return (kSource / rel).string(); }

}  // namespace

TEST_CASE("check-t hex holds with a table of 2s") {
    const Run r = run({"check-t", "hex"});
    CHECK(r.code == kExitHolds);
    CHECK(r.out.find("x1 = (3/4, 1/2)") != std::string::npos);
    CHECK(r.out.find("  (1, 0)\t2\t2\t2\t2\t2\t2\n") != std::string::npos);
    CHECK(r.out.find("verdict: holds") != std::string::npos);
}

TEST_CASE("check-t with insufficient candidates is not established") {
    const auto path = std::filesystem::temp_directory_path() / "polysphere_two_candidates.txt";
    std::ofstream(path) << "0 1\n0 -1\n";
    const Run r = run({"check-t", "hex", "--candidates", path.string()});
    CHECK(r.code == kExitNotEstablished);
    CHECK(r.out.find("not established") != std::string::npos);
}

TEST_CASE("check-cl") {
    const Run hex = run({"check-cl", "hex"});
    CHECK(hex.code == kExitFails);
    CHECK(hex.out.find("counterexample: vertex") != std::string::npos);
    CHECK(run({"check-cl", "linf:2"}).code == kExitHolds);
    const Run dec = run({"check-cl", "linf:2", "--decompose", "1,0"});
    CHECK(dec.code == kExitHolds);
    CHECK(dec.out.find("lambda = 1/2") != std::string::npos);
}

TEST_CASE("star exit codes") {
    CHECK(run({"star", "hex", "--", "-3/4", "1/2"}).code == kExitHolds);
    CHECK(run({"star", "linf:3", "1", "1", "1"}).code == kExitFails);
    CHECK(run({"star", "hex", "1", "1"}).code == kExitUsage);
    CHECK(run({"star", "hex", "1"}).code == kExitUsage);
}

TEST_CASE("verify-iso and extend") {
    const Run id = run({"extend", src("maps/identity_hex.map")});
    CHECK(id.code == kExitHolds);
    CHECK(id.out.find("[1 0]\n  [0 1]") != std::string::npos);
    CHECK(run({"verify-iso", src("maps/linf3_signed_perm.map")}).code == kExitHolds);
    const Run swap = run({"verify-iso", src("maps/hex_swap.map")});
    CHECK(swap.code == kExitFails);
    CHECK(swap.out.find("counterexample") != std::string::npos);
    CHECK(run({"extend", src("maps/l1_2_inconsistent.map")}).code == kExitFails);
    const Run neg = run({"extend", src("maps/hex_negation.map")});
    CHECK(neg.out.find("[-1 0]\n  [0 -1]") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 64") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"facets", "hexx"}).code == kExitUsage);
    CHECK(run({"facets", src("data/decimal.space")}).code == kExitUsage);
    CHECK(run({"facets", src("data/decimal.space")}).err.find("line 5") != std::string::npos);
    CHECK(run({"facets", "linf:4", "--max-dim", "3"}).code == kExitUsage);
    CHECK(run({"facets", "hex", "--max-dim", "9"}).code == kExitUsage);
    CHECK(run({"sum", "l2", "hex", "hex"}).code == kExitUsage);
    CHECK(run({"verify-iso", "no/such.map"}).code == kExitUsage);
}

TEST_CASE("sum and catalog") {
    const Run s = run({"sum", "l1", "linf:2", "linf:1"});
    CHECK(s.code == kExitHolds);
    CHECK(s.out.find("name l1sum(linf:2,linf:1)") != std::string::npos);
    const Run c = run({"catalog"});
    CHECK(c.code == kExitHolds);
    CHECK(c.out.find("hex") != std::string::npos);
    CHECK(run({"catalog", "hex", "--kind", "V"}).out.find("kind V") != std::string::npos);
}

TEST_CASE("reports and SVG are deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"check-t", "hex"}, {"render", "hex"}, {"render", "linf:3"}, {"verify-iso", src("maps/hex_rotation.map")}}) {
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.code == kExitHolds);
        CHECK(a.out == b.out);
    }
    const Run svg = run({"render", "hex"});
    CHECK(svg.out.rfind("<svg", 0) == 0);
    CHECK(svg.out.find("class=\"candidate\"") != std::string::npos);
    CHECK(svg.out.find("class=\"witness\"") != std::string::npos);
    CHECK(run({"render", "linf:3"}).out.find("class=\"ridge\"") != std::string::npos);
}
