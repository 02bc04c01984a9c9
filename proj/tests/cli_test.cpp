#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(FWCODES_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("spectrum reproduces a known distribution") {
    const auto r = run_cli("spectrum --m 2 --family L1 --A 1 --B 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "method: closed"));
    CHECK(contains(r.output, "  0: 2"));
    CHECK(contains(r.output, "  4: 12"));
    CHECK(contains(r.output, "  8: 2"));
    CHECK(contains(r.output, "enumerator: 2+12z^4+2z^8"));
}

TEST_CASE("spectrum cross-verifies methods") {
    const auto r = run_cli("spectrum --m 3 --family L2 --A 1 --B 2,3 --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "verify: ok"));
    CHECK(contains(r.output, "bruteforce"));
    CHECK(contains(r.output, "  20: 6"));
}

TEST_CASE("distinct mode divides by the kernel") {
    const auto r = run_cli("spectrum --m 2 --family L1 --A 1 --B 1 --mode distinct");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "kernel-size: 2"));
    CHECK(contains(r.output, "enumerator: 1+6z^4+z^8"));
}

TEST_CASE("multi-face complexes go through the JSON flags") {
    const auto r = run_cli(
        "spectrum --m 3 --family L1"
        " --complex1 '{\"m\":3,\"maximal\":[[1,2],[2,3]]}'"
        " --complex2 '{\"m\":3,\"maximal\":[[3]]}' --method charsum --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "length: 36"));
    CHECK(contains(r.output, "verify: ok"));
}

TEST_CASE("deterministic byte-identical output") {
    const std::string args = "spectrum --m 3 --family L2 --A 1,2 --B 1,2 --format json";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    // Thread count must not influence the output bytes.
    const auto serial = run_cli("spectrum --m 4 --family L1 --A 1,2,3,4 --B 2 --method bruteforce --threads 1");
    const auto parallel = run_cli("spectrum --m 4 --family L1 --A 1,2,3,4 --B 2 --method bruteforce --threads 4");
    CHECK(serial.exit_code == 0);
    CHECK(serial.output == parallel.output);
}

TEST_CASE("json output round-trips") {
    const auto r = run_cli("spectrum --m 3 --family L2plain --A 1 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.output);
    CHECK(doc["command"] == "spectrum");
    CHECK(doc["length"] == 6);
    CHECK(doc["binary_length"] == 12);
    CHECK(doc["kernel_size"] == 1);
    CHECK(doc["code_size"] == 64);
    const std::string once = doc.dump(2);
    CHECK(nlohmann::ordered_json::parse(once).dump(2) == once);
}

TEST_CASE("csv output shape") {
    const auto r = run_cli("spectrum --m 2 --family L1 --A 1 --B 1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("# spectrum", 0) == 0);
    CHECK(contains(r.output, "weight,frequency\n"));
    CHECK(contains(r.output, "\n0,2\n"));
    CHECK(contains(r.output, "\n8,2\n"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("spectrum --m 2 --family L1 --A 1").exit_code == 2);
    CHECK(run_cli("spectrum --m 2 --family L9 --A 1 --B 1").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("spectrum --m 2 --family L2plain --A 1 --B 1").exit_code == 2);
    CHECK(run_cli("counting --m 3 --A 1").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("precondition violations exit with code 3") {
    const auto refusal = run_cli(
        "spectrum --m 9 --family L1"
        " --complex1 '{\"m\":9,\"maximal\":[[1,2],[2,3]]}'"
        " --complex2 '{\"m\":9,\"maximal\":[[5]]}'");
    CHECK(refusal.exit_code == 3);
    CHECK(contains(refusal.output, "m <= 8"));      // names the enumeration cap
    CHECK(contains(refusal.output, "charsum"));     // suggests the viable method

    // Second complex covering all of F_2^m leaves an empty defining set.
    CHECK(run_cli("spectrum --m 2 --family L1 --A 1 --B 1,2").exit_code == 3);
    CHECK(run_cli("tables --m 7").exit_code == 3);
}

TEST_CASE("certify reports optimality") {
    const auto optimal = run_cli("certify --m 2 --family L1 --A 1,2 --B 1");
    CHECK(optimal.exit_code == 0);
    CHECK(contains(optimal.output, "n: 16"));
    CHECK(contains(optimal.output, "k: 4"));
    CHECK(contains(optimal.output, "d: 8"));
    CHECK(contains(optimal.output, "distance-optimal-griesmer: true"));

    const auto equality = run_cli("certify --m 3 --family L2 --A 1,2 --B 1,2");
    CHECK(equality.exit_code == 0);
    CHECK(contains(equality.output, "meets-griesmer: true"));

    const auto inconclusive = run_cli("certify --m 3 --family L2plain --A 1");
    CHECK(inconclusive.exit_code == 0);
    CHECK(contains(inconclusive.output, "distance-optimal-griesmer: false"));
    CHECK(contains(inconclusive.output, "annotation: external"));
}

TEST_CASE("counting point query") {
    const auto r = run_cli("counting --m 3 --A 1 --B 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "disjoint-nonempty: 1"));
    CHECK(contains(r.output, "total-identity: ok"));
    CHECK(contains(r.output, "bruteforce: ok"));
}

TEST_CASE("tables sweep") {
    const auto empty = run_cli("tables --m 1");
    CHECK(empty.exit_code == 0);
    CHECK(contains(empty.output, "rows: 0"));

    const auto small = run_cli("tables --m 2");
    CHECK(small.exit_code == 0);
    CHECK(contains(small.output, "all-verified: yes"));

    const auto medium = run_cli("tables --m 3 --format csv");
    CHECK(medium.exit_code == 0);
    CHECK(contains(medium.output, "L2plain,1,0,1,3,8,ok"));  // worked-example row
}

TEST_CASE("selftest runs the verification sweep") {
    const auto r = run_cli("selftest --threads 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "all checks passed"));
    CHECK_FALSE(contains(r.output, "FAIL"));
}
