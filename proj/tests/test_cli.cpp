#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Runs the binary with the given arguments, capturing both streams.
CliResult run_cli(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string command = std::string(CLI_BINARY_PATH) + " " + args + " >" +
                                out_path + " 2>" + err_path;
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("dist prints the exact distribution") {
    const CliResult r = run_cli("dist --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"n\":2,\"probs\":[\"3/8\",\"3/8\",\"1/4\"]}\n");
    CHECK(r.err.find("elapsed:") != std::string::npos);
}

TEST_CASE("dist csv rows") {
    const CliResult r = run_cli("dist --n 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0,3,8\n1,3,8\n2,1,4\n");
}

TEST_CASE("identity reports one line per n") {
    const CliResult r = run_cli("identity --max-n 3");
    CHECK(r.exit_code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "{\"n\":0,\"lhs\":\"1/1\",\"rhs\":\"1/1\",\"holds\":true}");
    CHECK(lines[3] == "{\"n\":3,\"lhs\":\"8/1\",\"rhs\":\"8/1\",\"holds\":true}");
}

TEST_CASE("congruence on a prime passes") {
    const CliResult r = run_cli("congruence --p 7");
    CHECK(r.exit_code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          "{\"p\":7,\"k\":1,\"terms\":4,\"residue\":0,"
          "\"method\":\"incremental-kernel\",\"passed\":true}");
}

TEST_CASE("congruence with a single k") {
    const CliResult r = run_cli("congruence --p 11 --k 1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "11,1,8,0,incremental-kernel,true\n");
}

TEST_CASE("composite modulus is refused with its factorization") {
    const CliResult r = run_cli("congruence --p 9");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("9 = 3 * 3 is not prime") != std::string::npos);

    const CliResult big = run_cli("replay --p 9991");
    CHECK(big.exit_code == 2);
    CHECK(big.err.find("9991 = 97 * 103 is not prime") != std::string::npos);
}

TEST_CASE("out-of-range k is a usage error") {
    const CliResult r = run_cli("congruence --p 7 --k 4");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("sweep summary line") {
    const CliResult r = run_cli("sweep --min 3 --max 100");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"p_min\":3,\"p_max\":100,\"primes_checked\":24,"
          "\"pairs_checked\":517,\"failures\":0,\"worker_count\":1}\n");
}

TEST_CASE("sweep stdout ignores the worker count except in the record") {
    const CliResult one = run_cli("sweep --min 3 --max 200 --workers 1");
    const CliResult four = run_cli("sweep --min 3 --max 200 --workers 4");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    // Identical except the worker_count field itself.
    nlohmann::ordered_json a = nlohmann::ordered_json::parse(one.out);
    nlohmann::ordered_json b = nlohmann::ordered_json::parse(four.out);
    CHECK(a["worker_count"] == 1);
    CHECK(b["worker_count"] == 4);
    a.erase("worker_count");
    b.erase("worker_count");
    CHECK(a == b);
}

TEST_CASE("composites lists the scanned witnesses") {
    const CliResult r = run_cli("composites --max 15 --format csv");
    CHECK(r.exit_code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "9,1,6,6,exact-oracle,false");
    CHECK(lines[4] == "15,1,12,12,exact-oracle,false");
}

TEST_CASE("composites bound validation") {
    CHECK(run_cli("composites --max 8").exit_code == 2);
    CHECK(run_cli("composites --max 10").exit_code == 2);
}

TEST_CASE("replay emits both routes and the identity flags") {
    const CliResult r = run_cli("replay --p 7");
    CHECK(r.exit_code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1] ==
          "{\"p\":7,\"k\":2,\"direct\":0,\"leibniz\":0,"
          "\"I1\":true,\"I2\":true,\"I3\":true,\"I4\":true}");
}

TEST_CASE("simulate is reproducible between invocations") {
    const CliResult a = run_cli("simulate --n 3 --trials 20000 --seed 31");
    const CliResult b = run_cli("simulate --n 3 --trials 20000 --seed 31");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("repeated invocations are byte-identical") {
    for (const std::string& args :
         {std::string("dist --n 30"), std::string("congruence --p 101"),
          std::string("replay --p 31"), std::string("sweep --min 3 --max 150")}) {
        CAPTURE(args);
        const CliResult first = run_cli(args);
        const CliResult second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("json output lines reparse to the same bytes") {
    for (const std::string& args :
         {std::string("dist --n 7"), std::string("identity --max-n 5"),
          std::string("congruence --p 13"), std::string("sweep --min 3 --max 60"),
          std::string("composites --max 21"), std::string("replay --p 13"),
          std::string("simulate --n 2 --trials 5000 --seed 9")}) {
        CAPTURE(args);
        const CliResult r = run_cli(args);
        CHECK(r.exit_code == 0);
        for (const std::string& line : lines_of(r.out)) {
            CAPTURE(line);
            CHECK(nlohmann::ordered_json::parse(line).dump() == line);
        }
    }
}

TEST_CASE("data records can be redirected to a file") {
    const std::string path = "cli_dist_out.tmp";
    const CliResult r = run_cli("dist --n 1 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == "{\"n\":1,\"probs\":[\"1/2\",\"1/2\"]}\n");
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with the usage code") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("dist").exit_code == 2);              // missing --n
    CHECK(run_cli("dist --n -3").exit_code == 2);       // negative count
    CHECK(run_cli("identity --max-n 3 --format csv").exit_code == 2);
    CHECK(run_cli("simulate --n 1 --trials 10 --seed 1 --format csv").exit_code == 2);
    CHECK(run_cli("sweep --min 2 --max 10").exit_code == 2);
    CHECK(run_cli("sweep --min 3 --max 10 --workers 0").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    const CliResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("dist") != std::string::npos);
    CHECK(r.out.find("sweep") != std::string::npos);
}
