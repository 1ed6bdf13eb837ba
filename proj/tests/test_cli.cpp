#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef CHARVAR_BIN_PATH
#error "CHARVAR_BIN_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + CHARVAR_BIN_PATH " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("compute examples") {
    RunResult r = run_cli("compute --invariant ie --group sl2 --side betti --genus 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + 17*q^2 + 17*q^4 + q^6\n");

    r = run_cli("compute --invariant euler --group pgl2 --genus 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "6\n");

    r = run_cli("compute --invariant ip --group sl2 --genus 3 --truncate 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + t^2 + 6*t^3 + 2*t^4\n");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("compute --invariant ie --group sl2 --genus 2").exit_code == 2);
    CHECK(run_cli("compute --invariant ie --group sl2 --side betti --genus 1").exit_code == 2);
    CHECK(run_cli("compute --invariant bogus --group sl2 --genus 2").exit_code == 2);
    CHECK(run_cli("compute --invariant ie --group sl2 --side betti --genus 2 --format xml")
              .exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("verify --suite tables --genus-min 4 --genus-max 3").exit_code == 2);
    CHECK(run_cli("table --which ie-sl2").exit_code == 2);
    CHECK(run_cli("table --which ie-sl2 --paper --genus-range 2..3").exit_code == 2);
    CHECK(run_cli("table --which ie-sl2 --genus-range 3").exit_code == 2);
    CHECK(run_cli("table --which ie-sl2 --paper --format json").exit_code == 2);
}

TEST_CASE("unsupported combinations exit with code 3") {
    CHECK(run_cli("compute --invariant p --group gl2 --genus 2").exit_code == 3);
    CHECK(run_cli("compute --invariant p --group pgl2 --genus 2").exit_code == 3);
    CHECK(run_cli("compute --invariant euler --group gl2 --genus 2").exit_code == 3);
    CHECK(run_cli("compute --invariant e-t --group pgl2 --side betti --genus 2")
              .exit_code == 3);
    CHECK(run_cli("compute --invariant ie-var --group gl2 --side betti --genus 2")
              .exit_code == 3);
}

TEST_CASE("genus cap honors CHARVAR_MAX_GENUS") {
    CHECK(run_cli("compute --invariant euler --group sl2 --genus 17").exit_code == 2);
    RunResult r = run_cli("compute --invariant euler --group sl2 --genus 17",
                          "CHARVAR_MAX_GENUS=20 ");
    CHECK(r.exit_code == 0);
    CHECK(run_cli("verify --suite tables --genus-max 17").exit_code == 2);
    CHECK(run_cli("table --which euler --genus-range 2..17").exit_code == 2);
}

TEST_CASE("verify emits one line per check") {
    RunResult r = run_cli("verify --suite tables --genus-min 2 --genus-max 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS tables/ie-betti-low/g=2\n") != std::string::npos);
    CHECK(r.out.find("16/16 checks passed\n") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run_cli("verify --suite purity --genus-min 2 --genus-max 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("6/6 checks passed\n") != std::string::npos);
}

TEST_CASE("table rows") {
    RunResult r = run_cli("table --paper --which ie-sl2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, r.out.find('\n')) == "g=2: 1 + 17*q^2 + ...");
    CHECK(r.out.find("g=5: 1 - 8*q^2 + 28*q^4 - 56*q^6 + 1103*q^8 + 28672*q^10 "
                     "+ 71848*q^12 + ...\n") != std::string::npos);

    r = run_cli("table --which euler --genus-range 2..3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "g=2: 36\ng=3: 528\n");

    r = run_cli("table --paper --which ip-minus-p --format latex");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, r.out.find('\n')) == "g=2: & 16 t^{4} \\\\");
}

TEST_CASE("output is deterministic across invocations") {
    std::string args =
        "compute --invariant ie --group gl2 --side dolbeault --genus 3 --format json";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}
