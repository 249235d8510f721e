// End-to-end checks of the command-line binary: exit codes, report
// determinism, and file round trips.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QLAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// timings are excluded from the determinism contract
std::string strip_timings(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.find("\"ms\"") == std::string::npos) out += line + "\n";
    return out;
}

}  // namespace

TEST_CASE("gen is deterministic and respects count") {
    auto a = run("gen --seed 7 --count 4 -o /tmp/qlat_c1.json");
    auto b = run("gen --seed 7 --count 4 -o /tmp/qlat_c2.json");
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(slurp("/tmp/qlat_c1.json") == slurp("/tmp/qlat_c2.json"));
    auto c = run("gen --count 0 -o /tmp/qlat_c0.json");
    CHECK(c.code == 0);
    CHECK(slurp("/tmp/qlat_c0.json").find("\"instances\": []") != std::string::npos);
}

TEST_CASE("verify a generated corpus end to end") {
    auto gen = run("gen --seed 5 --count 3 -o /tmp/qlat_corpus.json");
    REQUIRE(gen.code == 0);
    auto ver = run("verify --instances /tmp/qlat_corpus.json --report /tmp/qlat_rep.json --quiet");
    CHECK(ver.code == 0);
    std::string rep = slurp("/tmp/qlat_rep.json");
    CHECK(rep.find("\"pass\": true") != std::string::npos);
    CHECK(rep.find("\"pass\": false") == std::string::npos);
    CHECK(rep.find("lattice_identity") != std::string::npos);

    // reports are deterministic for fixed flags, timings aside
    auto ver2 = run("verify --instances /tmp/qlat_corpus.json --report /tmp/qlat_rep2.json --quiet");
    CHECK(ver2.code == 0);
    CHECK(strip_timings(slurp("/tmp/qlat_rep.json")) ==
          strip_timings(slurp("/tmp/qlat_rep2.json")));
}

TEST_CASE("verify --gen exits zero") {
    auto r = run("verify --gen --seed 42 --count 2 --quiet");
    CHECK(r.code == 0);
}

TEST_CASE("verify a hand-written instance file") {
    std::ofstream out("/tmp/qlat_demo.json");
    out << R"({"instances":[{"gram":[["1","0","0","0"],["0","1","0","0"],)"
        << R"(["0","0","1","0"],["0","0","0","1"]],"h":["0","0","0","1"]}]})";
    out.close();
    auto r = run("verify --instances /tmp/qlat_demo.json --quiet");
    CHECK(r.code == 0);
}

TEST_CASE("malformed input exits 2") {
    std::ofstream out("/tmp/qlat_bad.json");
    out << "{this is not json";
    out.close();
    CHECK(run("verify --instances /tmp/qlat_bad.json").code == 2);
    CHECK(run("verify").code == 2);
    CHECK(run("invariants --gram 'nonsense'").code == 2);
    CHECK(run("nonexistent-subcommand").code == 2);
    // degenerate gram
    CHECK(run("invariants --gram '[[\"0\",\"0\"],[\"0\",\"0\"]]'").code == 2);
    // missing instance fields
    std::ofstream out2("/tmp/qlat_bad2.json");
    out2 << R"({"instances":[{"gram":[["1"]]}]})";
    out2.close();
    CHECK(run("verify --instances /tmp/qlat_bad2.json").code == 2);
}

TEST_CASE("invariants output") {
    auto r = run(
        "invariants --gram "
        "'[[\"1\",\"0\",\"0\",\"0\"],[\"0\",\"1\",\"0\",\"0\"],[\"0\",\"0\",\"1\",\"0\"],"
        "[\"0\",\"0\",\"0\",\"1\"]]' --primes 2,3");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"delta\": \"1\"") != std::string::npos);
    CHECK(r.out.find("\"s_inf\": 4") != std::string::npos);
    CHECK(r.out.find("\"t_2\": 4") != std::string::npos);
    CHECK(r.out.find("\"t_3\": 0") != std::string::npos);
    CHECK(r.out.find("\"inf\"") != std::string::npos);
}

TEST_CASE("supplied non-maximal lattice is rejected as input") {
    std::ofstream out("/tmp/qlat_nonmax.json");
    out << R"({"instances":[{"gram":[["1","0","0","0"],["0","1","0","0"],)"
        << R"(["0","0","1","0"],["0","0","0","1"]],"h":["0","0","0","1"],)"
        << R"("lattice":[["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]}]})";
    out.close();
    CHECK(run("verify --instances /tmp/qlat_nonmax.json").code == 2);
}
