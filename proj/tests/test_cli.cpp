// Golden-file style checks of the command-line surface.  The binary path
// arrives via APERYLAB_BIN (set by ctest); every number printed must come
// from the library, so these tests only pin shapes and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("APERYLAB_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "APERYLAB_BIN must point at the CLI binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("seq a2 csv golden") {
    const auto r = run_cli("seq --family a2 --n-max 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,value\n0,1/1\n1,3/1\n");
}

TEST_CASE("seq j json carries the weight-4 table") {
    const auto r = run_cli("seq --family j --k 4 --n-max 4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          R"({"family":"j","k":4,"n_max":4,"values":[)"
          R"({"unit":"0/1","hurwitz_half":{"4":"1/1"}},)"
          R"({"unit":"0/1","hurwitz_half":{"2":"3/16","4":"3/4"}},)"
          R"({"unit":"0/1","hurwitz_half":{"2":"269/1024","4":"41/64"}},)"
          R"({"unit":"0/1","hurwitz_half":{"2":"3745/12288","4":"147/256"}},)"
          R"({"unit":"0/1","hurwitz_half":{"2":"348045/1048576","4":"8649/16384"}}]})"
          "\n");
}

TEST_CASE("seq j csv shows the riemann-basis column") {
    const auto r = run_cli("seq --family j --k 2 --n-max 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,riemann_basis\n0,3*zeta(2)\n1,9/4*zeta(2)\n2,123/64*zeta(2)\n");
}

TEST_CASE("seq tj k=3 starts with the zero entry") {
    const auto r = run_cli("seq --family tj --k 3 --n-max 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,value\n0,0/1\n1,1/2\n");
}

TEST_CASE("eta lambda golden") {
    const auto r = run_cli("eta --which lambda --n-max 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,coefficient\n1,1\n2,0\n3,0\n4,0\n5,-6\n");
    const auto one = run_cli("eta --which lambda --n-max 1");
    CHECK(one.out == "n,coefficient\n1,1\n");
    const auto gamma = run_cli("eta --which gamma --n-max 1");
    CHECK(gamma.out == "n,coefficient\n1,1\n");
}

TEST_CASE("congruence json lines and csv summary") {
    const auto lines = run_cli("congruence --check SUM_TJ2 --p-max 7 --format json");
    CHECK(lines.exit_code == 0);
    CHECK(lines.out ==
          R"({"check":"SUM_TJ2","p":3,"r":2,"m":null,"k":null,"n":null,"modulus":9,"status":"HOLDS","lhs":0,"rhs":0,"witness":null,"note":""})"
          "\n"
          R"({"check":"SUM_TJ2","p":5,"r":2,"m":null,"k":null,"n":null,"modulus":25,"status":"HOLDS","lhs":0,"rhs":0,"witness":null,"note":""})"
          "\n"
          R"({"check":"SUM_TJ2","p":7,"r":2,"m":null,"k":null,"n":null,"modulus":49,"status":"HOLDS","lhs":0,"rhs":0,"witness":null,"note":""})"
          "\n");
    const auto summary = run_cli("congruence --check SUM_TJ2 --p-max 7");
    CHECK(summary.out == "check,points,holds,fails,not_p_integral\nSUM_TJ2,3,3,0,0\n");
}

TEST_CASE("verify exits zero on identity suites") {
    const auto r = run_cli("verify --suite recurrence --k-max 6 --n-max 24");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all identities hold") != std::string::npos);
}

TEST_CASE("zetaq degenerate value and rejection") {
    const auto ok = run_cli("zetaq --s 2 --alpha 2 --beta 2 --format json");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"value\":3.289868133696") != std::string::npos);

    const auto bad = run_cli("zetaq --s 2 --alpha 1 --beta 1");
    CHECK(bad.exit_code == 2);

    const auto bad_s = run_cli("zetaq --s 4 --alpha 3 --beta 3");
    CHECK(bad_s.exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("seq --family nope --n-max 3").exit_code == 2);
    CHECK(run_cli("seq --family j --n-max 3").exit_code == 2);        // missing --k
    CHECK(run_cli("congruence --check NO_SUCH --p-max 5").exit_code == 2);
    CHECK(run_cli("eta --which lambda --n-max 0").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("output to file") {
    const std::string path = "/tmp/aperylab_cli_test_out.csv";
    std::remove(path.c_str());
    const auto r = run_cli("seq --family a3 --n-max 2 --output " + path);
    CHECK(r.exit_code == 0);
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::array<char, 256> buf{};
    const std::size_t got = std::fread(buf.data(), 1, buf.size() - 1, f);
    std::fclose(f);
    std::remove(path.c_str());
    CHECK(std::string(buf.data(), got) == "n,value\n0,1/1\n1,5/1\n2,73/1\n");
}

TEST_CASE("jobs flag keeps output identical") {
    const std::string args = "congruence --check all --p-max 5 --r-max 1 --m-max 1 --n-max 20 --format json";
    const auto seq1 = run_cli(args + " --jobs 1");
    const auto par = run_cli(args + " --jobs 2");
    CHECK(seq1.exit_code == 0);
    CHECK(par.exit_code == 0);
    CHECK(seq1.out == par.out);
    CHECK(!seq1.out.empty());
}
