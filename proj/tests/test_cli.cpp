#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "srk/format.hpp"

namespace {

std::string g_cli;
std::string g_data;

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs through the shell, stderr folded into stdout.
RunResult run(const std::string& args) {
    std::string cmd = "\"" + g_cli + "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunResult run_env(const std::string& env, const std::string& args) {
    std::string cmd = env + " \"" + g_cli + "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return "\"" + g_data + "/" + name + "\""; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("eval prints the value") {
    RunResult r = run("eval --fn " + data("golden_quotient.json") + " --at \"[0,0,1,0]\"");
    CHECK(r.exit_code == 0);
    srk::Quaternion v = srk::parse_quaternion(r.out.substr(0, r.out.find('\n')));
    CHECK(abs(v - srk::Quaternion::j()) <= 1e-9);
}

TEST_CASE("eval at a pole fails with the error name") {
    RunResult r = run("eval --fn " + data("golden_quotient.json") + " --at \"[0,2,0,0]\"");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("SingularPoint") != std::string::npos);
}

TEST_CASE("report subcommands pass on their golden inputs") {
    struct Case {
        const char* args;
        const char* expect;
    } cases[] = {
        {"report hopf --fn ", "\"theorem\": \"hopf\""},
        {"report lindelof --fn ", "\"theorem\": \"lindelof\""},
        {"report jc-ball --fn ", "\"theorem\": \"jc_ball\""},
    };
    for (const Case& c : cases) {
        RunResult r = run(std::string(c.args) + data("identity.json"));
        CHECK(r.exit_code == 0);
        CHECK(r.out.find(c.expect) != std::string::npos);
        CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
    }
}

TEST_CASE("corrected derivative appears in the boundary schwarz report") {
    RunResult r = run("report schwarz-boundary --fn " + data("golden_fixing.json") +
                      " --xi \"[0,0,1,0]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("corrected_derivative") != std::string::npos);
    CHECK(r.out.find("2.6666666666666665") != std::string::npos);
}

TEST_CASE("julia report estimates boundary data") {
    RunResult r = run("report julia --fn " + data("golden_quotient.json") + " --xi \"[0,0,1,0]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"alpha\"") != std::string::npos);
    CHECK(r.out.find("estimated from radial limits") != std::string::npos);
}

TEST_CASE("half-space report on the affine map") {
    RunResult r = run("report jc-halfspace --fn " + data("affine.json") + " --gamma 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"c\": 2") != std::string::npos);
}

TEST_CASE("rigidity report on the linear map") {
    RunResult r = run("report burns-krantz --fn " + data("one_plus_q.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("order_rigidity") != std::string::npos);
}

TEST_CASE("checker errors surface as failed reports") {
    // the affine map leaves the unit ball, so the ball-side checker refuses it
    RunResult r = run("report julia --fn " + data("affine.json"));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("PreconditionFailed") != std::string::npos);
    CHECK(r.out.find("\"verdict\": \"fail\"") != std::string::npos);
    // alpha = infinity on the shrinking cubic
    RunResult d = run("report julia --fn " + data("cubic_shrink.json"));
    CHECK(d.exit_code == 1);
    CHECK(d.out.find("Diverging") != std::string::npos);
}

TEST_CASE("usage and parse problems exit with code two") {
    CHECK(run("report bogus --fn " + data("identity.json")).exit_code == 2);
    CHECK(run("eval --fn " + data("identity.json")).exit_code == 2);
    CHECK(run("eval --fn " + data("identity.json") + " --at nonsense").exit_code == 2);
    CHECK(run("eval --fn /tmp/srk_no_such_file.json --at \"[0,0,0,0]\"").exit_code == 2);
    CHECK(run("report julia --fn " + data("identity.json") + " --xi \"[2,0,0,0]\"")
              .exit_code == 2);
    CHECK(run("report jc-halfspace --fn " + data("affine.json") + " --gamma 2")
              .exit_code == 2);
    std::ofstream("/tmp/srk_cli_bad.json") << "{\"kind\": ";
    RunResult r = run("eval --fn /tmp/srk_cli_bad.json --at \"[0,0,0,0]\"");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("ParseError") != std::string::npos);
}

TEST_CASE("sweep emits a byte-stable csv") {
    RunResult a = run("sweep --fn " + data("golden_quotient.json") +
                      " --xi \"[0,0,1,0]\" --out /tmp/srk_sweep_a.csv");
    RunResult b = run("sweep --fn " + data("golden_quotient.json") +
                      " --xi \"[0,0,1,0]\" --out /tmp/srk_sweep_b.csv");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    std::string ca = slurp("/tmp/srk_sweep_a.csv");
    std::string cb = slurp("/tmp/srk_sweep_b.csv");
    CHECK(ca == cb);
    CHECK(ca.substr(0, ca.find('\n')) ==
          "r,f_w,f_x,f_y,f_z,abs_f,julia_quotient,diff_quotient_abs");
    int rows = 0;
    for (char ch : ca)
        if (ch == '\n') ++rows;
    CHECK(rows == 34);  // header plus one row per ladder step
}

TEST_CASE("seed resolution") {
    std::string hopf = "report hopf --fn " + data("identity.json");
    CHECK(run(hopf + " --seed 9").out.find("\"seed\": 9") != std::string::npos);
    CHECK(run_env("SRK_SEED=123", hopf + " --seed 9").out.find("\"seed\": 123") !=
          std::string::npos);
    CHECK(run(hopf).out.find("\"seed\": 0") != std::string::npos);
    CHECK(run_env("SRK_SEED=zzz", hopf).exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <srk-binary> <data-dir>\n", argv[0]);
        return 1;
    }
    g_cli = argv[1];
    g_data = argv[2];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
