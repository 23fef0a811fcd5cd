// End-to-end checks of the command-line tool.  The binary path arrives via
// the AVOIDANCE_CLI environment variable (set by CTest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("AVOIDANCE_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "AVOIDANCE_CLI must point at the CLI binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("convergents emits decimal-string JSON lines") {
    auto r = run_cli("convergents --cf \"[1;(1)]\" --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\"n\":0,\"p\":\"1\",\"q\":\"1\"}\n"
          "{\"n\":1,\"p\":\"2\",\"q\":\"1\"}\n"
          "{\"n\":2,\"p\":\"3\",\"q\":\"2\"}\n"
          "{\"n\":3,\"p\":\"5\",\"q\":\"3\"}\n"
          "{\"n\":4,\"p\":\"8\",\"q\":\"5\"}\n"
          "{\"n\":5,\"p\":\"13\",\"q\":\"8\"}\n");
}

TEST_CASE("partition emits TSV and JSON in ascending order") {
    auto tsv = run_cli("partition --cf \"[1;(1)]\" --n 10 --format tsv");
    CHECK(tsv.exit_code == 0);
    CHECK(tsv.output == "1\tA\n2\tB\n3\tA\n4\tB\n5\tB\n6\tA\n7\tB\n8\tA\n9\tA\n10\tB\n");

    auto json = run_cli("partition --cf \"[1;(1)]\" --n 2");
    CHECK(json.output == "{\"n\":1,\"label\":\"A\"}\n{\"n\":2,\"label\":\"B\"}\n");

    // byte stability across runs
    CHECK(run_cli("partition --cf \"[1;(1)]\" --n 10 --format tsv").output == tsv.output);
}

TEST_CASE("avoided-set carries structural kinds") {
    auto r = run_cli("avoided-set --cf \"[1;(2)]\" --limit 50");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\"value\":1,\"kind\":\"convergent\",\"n\":0}\n"
          "{\"value\":2,\"kind\":\"double\",\"n\":0}\n"
          "{\"value\":3,\"kind\":\"convergent\",\"n\":1}\n"
          "{\"value\":4,\"kind\":\"intermediate\",\"n\":0,\"k\":1}\n"
          "{\"value\":7,\"kind\":\"convergent\",\"n\":2}\n"
          "{\"value\":10,\"kind\":\"intermediate\",\"n\":1,\"k\":1}\n"
          "{\"value\":17,\"kind\":\"convergent\",\"n\":3}\n"
          "{\"value\":24,\"kind\":\"intermediate\",\"n\":2,\"k\":1}\n"
          "{\"value\":41,\"kind\":\"convergent\",\"n\":4}\n");
}

TEST_CASE("check-unique reports the graph verdict for a spec") {
    auto r = run_cli("check-unique --cf \"[1;(1)]\" --n 100");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"bipartite\":true") != std::string::npos);
    CHECK(r.output.find("\"components\":1") != std::string::npos);
    CHECK(r.output.find("\"coloring_count\":\"2\"") != std::string::npos);
    CHECK(r.output.find("\"coverage_reached\":true") != std::string::npos);
}

TEST_CASE("check-unique reads explicit S files") {
    std::string path = "/tmp/avoidance_cli_s_file.txt";
    {
        std::ofstream out(path);
        out << "1\n3\n4\n5\n9\n14\n23\n";  // gen-Fib (3,1): contains a triangle
    }
    auto r = run_cli("check-unique --s-file " + path + " --n 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"bipartite\":false") != std::string::npos);
    CHECK(r.output.find("\"odd_cycle\":[1,2,3]") != std::string::npos);

    {
        std::ofstream out(path);
        out << "5\n3\n";  // not ascending
    }
    CHECK(run_cli("check-unique --s-file " + path + " --n 12").exit_code == 2);
}

TEST_CASE("gen-fib verdicts") {
    auto bad = run_cli("gen-fib --s1 3 --s2 1");
    CHECK(bad.exit_code == 0);
    CHECK(bad.output.find("\"verdict\":\"not_avoidable\"") != std::string::npos);
    CHECK(bad.output.find("\"odd_cycle\":[1,2,3]") != std::string::npos);

    auto good = run_cli("gen-fib --s1 2 --s2 1");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("\"verdict\":\"uniquely_avoidable\"") != std::string::npos);
    CHECK(good.output.find("\"embedding\"") != std::string::npos);

    CHECK(run_cli("gen-fib --s1 2 --s2 4").exit_code == 2);
}

TEST_CASE("verify exits 0 on agreement and 2 on input errors") {
    auto ok = run_cli("verify --cf \"[1;(2)]\" --limit 500");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"status\":\"ok\"") != std::string::npos);

    CHECK(run_cli("verify --cf \"[1;0]\" --limit 100").exit_code == 2);
    CHECK(run_cli("avoided-set --cf \"[1;2,3]\" --limit 100").exit_code == 2);
    CHECK(run_cli("convergents --cf \"oops\" --n 3").exit_code == 2);
    CHECK(run_cli("convergents --n 3").exit_code == 2);  // missing required flag
    CHECK(run_cli("").exit_code == 2);                   // missing subcommand
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("the depth-cap environment variable wins over the flag") {
    // a cap of 2 cannot separate E(5) from nearby values at n = 50
    std::string cmd = "AVOIDANCE_DEPTH_CAP=2 ";
    const char* bin = std::getenv("AVOIDANCE_CLI");
    REQUIRE(bin != nullptr);
    cmd += std::string(bin) + " verify --cf \"[1;(1)]\" --limit 200 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
    }
    CHECK(WEXITSTATUS(pclose(pipe)) == 2);
}
