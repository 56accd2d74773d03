#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

// End-to-end checks of the command-line tool. The binary path comes from the
// build system.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LAMS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("parse prints the canonical form") {
    RunResult r = run_cli("parse \"\\\\x.  x   x\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "\\x.x x\n");
}

TEST_CASE("reduce traces the running example") {
    RunResult r = run_cli("reduce \"<(S k1. i (k1 i)) (S k2. w) (w w)>\" --trace");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Rshift") != std::string::npos);
    CHECK(r.out.find("value after 6 steps: \\x.x x") != std::string::npos);
}

TEST_CASE("reduce reports timeout with exit 3") {
    RunResult r = run_cli("reduce omega --fuel 50");
    CHECK(r.exit_code == 3);
}

TEST_CASE("eval classifies stuck terms") {
    RunResult r = run_cli("eval \"S k. k i\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("stuck") == 0);
}

TEST_CASE("lts shows transitions and accepted probes") {
    RunResult r = run_cli("lts \"<i (S k. w) (w w)>\" --json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["tau"] == "<\\x.x x>");
    CHECK(j["rules"] == nlohmann::json({"LTScaptreset", "LTScaptl", "LTScaptr", "LTSshift"}));
    CHECK(j["accepts"] == "none");

    nlohmann::json v = nlohmann::json::parse(run_cli("lts \"S k. w\" --json").out);
    CHECK(v["tau"].is_null());
    CHECK(v["accepts"] == "context-probes");
}

TEST_CASE("bisim exit codes carry the verdict") {
    CHECK(run_cli("bisim \"S k. k i\" i").exit_code == 1);
    CHECK(run_cli("bisim \"<i>\" i").exit_code == 0);
    CHECK(run_cli("bisim omega \"omega omega\"").exit_code == 0);
    CHECK(run_cli("bisim x i").exit_code == 2);  // open input
}

TEST_CASE("bisim reads probe pools from a file") {
    std::string path = "/tmp/lams_test_pool.json";
    {
        std::ofstream f(path);
        f << R"json({"values": ["i", "w"], "contexts": ["@", "i @", "@ (w w)"]})json";
    }
    RunResult r = run_cli("bisim \"S k. k i\" i --pool " + path + " --json");
    CHECK(r.exit_code == 1);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "distinguished");
    CHECK(j["trace"][0]["kind"] == "context");
    std::remove(path.c_str());
}

TEST_CASE("cps prints the first translation clause") {
    RunResult r = run_cli("cps x --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"term\":\"\\\\k1.\\\\k2.k1 x k2\"}\n");
}

TEST_CASE("cps-equiv exit codes") {
    CHECK(run_cli("cps-equiv \"<i>\" i").exit_code == 0);
    CHECK(run_cli("cps-equiv i w").exit_code == 1);
    CHECK(run_cli("cps-equiv omega \"omega omega\"").exit_code == 3);
}

TEST_CASE("prove prints numbered steps") {
    RunResult r = run_cli("prove \"S k. k i\" i");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1. () shift_elim L->R") == 0);
    CHECK(run_cli("prove i w --budget 500").exit_code == 3);
}

TEST_CASE("fuzz emits a clean machine-readable report") {
    RunResult r = run_cli("fuzz --n 40 --seed 5");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["failures"].empty());
    CHECK(j["rule_coverage"]["Rbeta"].get<int>() > 0);
}

TEST_CASE("identical invocations are byte-identical") {
    std::string a = run_cli("fuzz --n 30 --seed 12 --check lts").out;
    std::string b = run_cli("fuzz --n 30 --seed 12 --check lts").out;
    CHECK(a == b);
    CHECK(run_cli("reduce \"<i w>\" --json").out == run_cli("reduce \"<i w>\" --json").out);
}

TEST_CASE("bad input exits 2 with a grammar hint") {
    CHECK(run_cli("parse \"\\\\x.\"").exit_code == 2);
    CHECK(run_cli("eval \"y y\"").exit_code == 2);
    CHECK(run_cli("frobnicate x").exit_code == 2);
}
