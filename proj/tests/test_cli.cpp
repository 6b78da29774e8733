// Drives the installed binary end to end; argv[1] is its path.
#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("support emits the six cyclic pairs of P(7,3)") {
    auto r = run_cli("support --family cyclic --n 7 --m 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[\n      1,\n      4\n    ]") != std::string::npos);
    CHECK(r.out.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("byte-identical output for identical flags and seed") {
    for (std::string cmd :
         {std::string("check-frobenius --family random --n 5 --m 2 --seed 42"),
          std::string("rmatrix --family cyclic --n 5 --m 2 --method peel --format json"),
          std::string("sweep --suite meander --max-n 8 --format json")}) {
        auto a = run_cli(cmd);
        auto b = run_cli(cmd);
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("principal element of the cyclic functional on P(7,3)") {
    auto r = run_cli("principal --family cyclic --n 7 --m 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "diag(-1/7, 13/7, 6/7, -8/7, 6/7, -1/7, -15/7)\n");
    auto dk = run_cli("principal --family dk --n 7 --m 3");
    CHECK(dk.out == "diag(-1/7, 13/7, 6/7, -15/7, -1/7, 6/7, -8/7)\n");
}

TEST_CASE("exit codes separate certification, negatives and usage errors") {
    CHECK(run_cli("check-frobenius --family cyclic --n 5 --m 2").exit_code == 0);
    CHECK(run_cli("check-frobenius --family random --n 4 --m 2 --seed 7").exit_code == 1);
    CHECK(run_cli("check-frobenius --family nosuch --n 4 --m 2").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("rmatrix --family subprime --n 8 --m 5 --method invert").exit_code == 1);
}

TEST_CASE("certificates re-validate through verify") {
    std::string dir = "/tmp/frobtk-test";
    int rc = std::system(("mkdir -p " + dir).c_str());
    REQUIRE(rc == 0);

    auto frob = run_cli("check-frobenius --family cyclic --n 6 --m 5 --out " + dir + "/f.json");
    CHECK(frob.exit_code == 0);
    auto v1 = run_cli("verify --in " + dir + "/f.json");
    CHECK(v1.exit_code == 0);
    CHECK(v1.out.find("\"valid\": true") != std::string::npos);

    auto rmx = run_cli(
        "rmatrix --family cyclic --n 5 --m 3 --method lagrangian --format json --out " + dir +
        "/r.json");
    CHECK(rmx.exit_code == 0);
    CHECK(run_cli("verify --in " + dir + "/r.json").exit_code == 0);

    auto mea = run_cli("meander --top 2,2 --bottom 4 --format json --out " + dir + "/m.json");
    CHECK(mea.exit_code == 0);
    CHECK(run_cli("verify --in " + dir + "/m.json").exit_code == 0);

    // a doctored certificate no longer validates
    std::ifstream in(dir + "/f.json");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("\"rank\": 30");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 10, "\"rank\": 28");
    std::ofstream outf(dir + "/bad.json");
    outf << text;
    outf.close();
    CHECK(run_cli("verify --in " + dir + "/bad.json").exit_code == 1);
}

TEST_CASE("meander subcommand") {
    auto r = run_cli("meander --parabolic 7,3 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "index 0 (0 loops, 1 chains, 0 isolated)\n");
    auto sw = run_cli("meander --top 2,2 --bottom 4 --format text");
    CHECK(sw.out.find("index 1 (1 loops") != std::string::npos);
    CHECK(run_cli("meander").exit_code == 2);
}

TEST_CASE("mcybe subcommands reproduce the reference progressions") {
    auto p52 = run_cli("mcybe progression --n 5 --m 2 --format text");
    CHECK(p52.out == "1 -> 3 -> 2 -> 4\n");
    auto d85 = run_cli("mcybe degenerate --n 8 --m 5 --format text");
    CHECK(d85.out.find("removed: 5->2 4->1") != std::string::npos);
    auto sep = run_cli("mcybe separating-h --n 8 --m 5 --keep 7-4,6-3");
    CHECK(sep.exit_code == 0);
    CHECK(sep.out.find("\"surviving\"") != std::string::npos);
}

TEST_CASE("localring subcommands") {
    auto dims = run_cli("localring dims --edges 1-2,2-3,3-4,4-1");
    CHECK(dims.out.find("\"radical_dims\": [\n    4,\n    2\n  ]") != std::string::npos);
    auto rec = run_cli("localring reconstruct --edges 1-2,2-3,3-4,4-1");
    CHECK(rec.exit_code == 0);
    CHECK(rec.out.find("\"isomorphic_to_input\": true") != std::string::npos);
    auto amb = run_cli("localring reconstruct --edges 1-2,2-3,3-1");
    CHECK(amb.exit_code == 1);
    CHECK(amb.out.find("AmbiguousR3") != std::string::npos);
    auto red = run_cli("localring reduced --edges '1>2,2>3,3>4,4>1'");
    CHECK(red.out.find("\"reduced_dims\": [\n    4,\n    1\n  ]") != std::string::npos);
}

TEST_CASE("dot outputs carry the generating command") {
    auto r = run_cli("gamma --family cyclic --n 5 --m 2 --format dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("// ", 0) == 0);
    CHECK(r.out.find("gamma --family cyclic --n 5 --m 2 --format dot") != std::string::npos);
    CHECK(r.out.find("digraph") != std::string::npos);
    auto big = run_cli("biggraph --family cyclic --n 4 --m 3 --format dot");
    CHECK(big.out.find("digraph formgraph") != std::string::npos);
}

TEST_CASE("sweeps aggregate honestly") {
    auto ok = run_cli("sweep --suite frobenius --max-n 6 --format json");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"all_pass\": true") != std::string::npos);
    CHECK(run_cli("sweep --suite root --max-n 9").exit_code == 0);
    CHECK(run_cli("sweep --suite nosuch").exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-binary>\n");
        return 2;
    }
    g_binary = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
