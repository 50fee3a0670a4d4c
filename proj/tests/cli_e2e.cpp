#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// End-to-end checks against the installed binary (path in FIBTEL_BIN):
// process exit codes and stdout, exactly as a shell user sees them.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_raw(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
        result.out += buffer.data();
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

RunResult run(const std::string& command_tail) {
    const char* bin = std::getenv("FIBTEL_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "FIBTEL_BIN must point at the fibtel binary");
    return run_raw(std::string(bin) + " " + command_tail);
}

}  // namespace

TEST_CASE("fib and lucas print plain integers") {
    const RunResult fib = run("fib 20");
    CHECK(fib.exit_code == 0);
    CHECK(fib.out == "6765\n");
    const RunResult lucas = run("lucas 0");
    CHECK(lucas.exit_code == 0);
    CHECK(lucas.out == "2\n");
}

TEST_CASE("usage errors exit 2 with no stdout") {
    const RunResult bad_parity = run("eval t6 --p 3 --m 1");
    CHECK(bad_parity.exit_code == 2);
    CHECK(bad_parity.out.empty());
    const RunResult bad_verb = run("frobnicate");
    CHECK(bad_verb.exit_code == 2);
    CHECK(bad_verb.out.empty());
}

TEST_CASE("certify exits 0 when certified, 1 when not") {
    const RunResult good = run("certify t1 --digits 50 --format json");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("\"certified\": true") != std::string::npos);
    const RunResult injected = run("certify t1 --digits 20 --inject-bad-target");
    CHECK(injected.exit_code == 1);
    CHECK(injected.out.find("certified false") != std::string::npos);
}

TEST_CASE("verify and crosscheck") {
    const RunResult verify = run("verify --lemma ratio --grid l=4,m=4");
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("32/32 ok") != std::string::npos);
    const RunResult crosscheck = run("crosscheck t8 --p 3 --digits 10");
    CHECK(crosscheck.exit_code == 0);
}

TEST_CASE("index bound environment override") {
    const char* bin = std::getenv("FIBTEL_BIN");
    REQUIRE(bin != nullptr);
    const RunResult blocked = run_raw("FIBTEL_INDEX_BOUND=100 " + std::string(bin) + " fib 200");
    CHECK(blocked.exit_code == 1);
    const RunResult allowed = run_raw("FIBTEL_INDEX_BOUND=200 " + std::string(bin) + " fib 200");
    CHECK(allowed.exit_code == 0);
    CHECK(allowed.out == "280571172992510140037611932413038677189525\n");
}

TEST_CASE("list names every family") {
    const RunResult listed = run("list");
    CHECK(listed.exit_code == 0);
    CHECK(listed.out.find("t9") != std::string::npos);
    CHECK(listed.out.find("r2") != std::string::npos);
}
