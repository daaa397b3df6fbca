/*
   Copyright 2026 The umbral project authors

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with stderr folded into stdout; exit code taken via the
// POSIX wait status popen/pclose report.
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(UMBRAL_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("expand: Euler polynomial in the Laguerre basis as JSON") {
    const CliResult r = run_cli("expand --family euler --n 1 --basis laguerre --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["family"] == "euler");
    CHECK(doc["n"] == 1);
    CHECK(doc["basis"] == "laguerre");
    CHECK(doc["coefficients"] == nlohmann::json::array({"1/2", "-1"}));
}

TEST_CASE("expand: plain output lines match the frozen examples") {
    CHECK(run_cli("expand --family monomial --n 2 --basis laguerre").out == "2 -4 2\n");
    CHECK(run_cli("expand --family laguerre --n 3 --basis monomial").out == "1 -3 3/2 -1/6\n");
    CHECK(run_cli("expand --family frobenius-euler --lambda 2 --n 1").out == "1 1\n");
    CHECK(run_cli("expand --family monomial --n 3 --basis falling-factorial").out ==
          "0 1 3 1\n");
}

TEST_CASE("expand: csv and md formats") {
    const CliResult csv = run_cli("expand --family euler --n 1 --basis laguerre --format csv");
    CHECK(csv.out == "index,coefficient\n0,1/2\n1,-1\n");
    const CliResult md = run_cli("expand --family euler --n 1 --basis laguerre --format md");
    CHECK(md.out.find("| 0 | 1/2 |") != std::string::npos);
}

TEST_CASE("table: stirling triangle and number rows") {
    const CliResult tri = run_cli("table --what stirling2 --rows 4");
    CHECK(tri.exit_code == 0);
    CHECK(tri.out.find("0 1 7 6 1\n") != std::string::npos);
    CHECK(run_cli("table --what bernoulli-numbers --rows 4").out == "1 -1/2 1/6 0 -1/30\n");
    CHECK(run_cli("table --what euler-numbers --rows 3").out == "1 -1/2 0 1/4\n");
    const CliResult fro = run_cli("table --what frobenius-numbers --rows 2 --lambda 2");
    CHECK(fro.out == "1 1 3\n"); // H_0..H_2 at lambda = 2, by expanding -1/(e^t - 2)
}

TEST_CASE("audit: exit code 0 on all-match, 1 on mismatch, expect-mismatch waives") {
    CHECK(run_cli("audit --identity eq26 --n-max 12 --format csv").exit_code == 0);
    CHECK(run_cli("audit --identity thm1 --n-max 4 --format csv").exit_code == 1);
    CHECK(run_cli("audit --identity thm1 --n-max 4 --expect-mismatch thm1 --format csv")
              .exit_code == 0);
    CHECK(run_cli("audit --identity thm1,eq26 --n-max 4 --expect-mismatch thm1 --format csv")
              .exit_code == 0);
}

TEST_CASE("audit: eq26 over n <= 12 yields 13 match records") {
    const CliResult r = run_cli("audit --identity eq26 --n-max 12 --format json");
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["reports"].size() == 13);
    for (const auto& rec : doc["reports"]) {
        CHECK(rec["status"] == "match");
    }
}

TEST_CASE("audit: lambda-certified markers appear for thm5") {
    const CliResult r =
        run_cli("audit --identity thm5 --n-max 6 --lambda -1,2,1/2,5/3,3,7/2,9");
    CHECK(r.exit_code == 0);
    for (int n = 0; n <= 6; ++n) {
        const std::string marker =
            "lambda-certification: thm5 n=" + std::to_string(n) + ": certified";
        CHECK(r.out.find(marker) != std::string::npos);
    }
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("audit --identity no-such-identity --n-max 2").exit_code == 2);
    CHECK(run_cli("audit --identity thm5 --n-max 2 --lambda 1").exit_code == 2);
    CHECK(run_cli("audit --identity thm5 --n-max 2 --lambda 0.5").exit_code == 2);
    CHECK(run_cli("audit --n-max 2 --binomial other").exit_code == 2);
    CHECK(run_cli("expand --family hermite --n 1").exit_code == 2);
    CHECK(run_cli("expand --family frobenius-euler --n 1").exit_code == 2);
    CHECK(run_cli("expand --family euler --n 1 --basis fourier").exit_code == 2);
    CHECK(run_cli("expand --family euler --n 1 --format yaml").exit_code == 2);
    CHECK(run_cli("table --what primes --rows 3").exit_code == 2);
    CHECK(run_cli("table --what frobenius-numbers --rows 3").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("expand --family euler").exit_code == 2); // --n is required
    CHECK(run_cli("audit --identity eq26 --n-max -3").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("audit --help").exit_code == 0);
}

TEST_CASE("consecutive audit runs emit byte-identical JSON") {
    const std::string args = "audit --identity all --n-max 6 --format json";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.exit_code == 1); // the registry contains honestly mismatching entries
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}
