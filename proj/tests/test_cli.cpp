#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "cubicbase/canon.hpp"
#include "cubicbase/constructions.hpp"
#include "cubicbase/graph6.hpp"

namespace fs = std::filesystem;
using namespace cubicbase;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf;
    RunResult r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

fs::path tmp_file(const std::string& name) {
    return fs::temp_directory_path() / ("cubicbase_test_" + name);
}

}  // namespace

TEST_CASE("construct writes valid sparse6") {
    auto path = tmp_file("petersen.s6");
    RunResult r = run("construct table1:Petersen --output " + path.string());
    CHECK(r.status == 0);
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    Graph g = from_graph6_line(line);
    CHECK(g.num_vertices() == 10);
    CHECK(isomorphic(g, table1_graph("Petersen")));
    fs::remove(path);
}

TEST_CASE("construct parameter validation") {
    CHECK(run("construct px:2,1").status != 0);
    CHECK(run("construct nonsense").status != 0);
    CHECK(run("construct spx:5,2").status == 0);
}

TEST_CASE("classify a small census") {
    auto census = tmp_file("census.txt");
    {
        std::ofstream out(census);
        out << to_sparse6(table1_graph("Petersen")) << "\n";
        out << to_sparse6(spx_graph(6, 1)) << "\n";
        out << to_graph6(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}))
            << "\n";  // a pentagon, skipped as non-cubic
    }
    RunResult r = run("classify " + census.string());
    CHECK(r.status == 0);
    CHECK(r.out.find("\"verdict\":\"exceptional\"") != std::string::npos);
    CHECK(r.out.find("\"name\":\"Petersen\"") != std::string::npos);
    CHECK(r.out.find("\"verdict\":\"split-px\"") != std::string::npos);
    CHECK(r.out.find("\"status\":\"skipped\"") != std::string::npos);
    CHECK(r.out.find("not cubic") != std::string::npos);
    fs::remove(census);
}

TEST_CASE("classify output is independent of worker count") {
    auto census = tmp_file("census2.txt");
    {
        std::ofstream out(census);
        for (int n = 3; n <= 8; ++n) out << to_sparse6(circular_ladder(n)) << "\n";
        out << to_sparse6(table1_graph("K4")) << "\n";
    }
    RunResult one = run("classify " + census.string() + " --jobs 1");
    RunResult four = run("classify " + census.string() + " --jobs 4");
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
    fs::remove(census);
}

TEST_CASE("classify csv and text formats") {
    auto census = tmp_file("census3.txt");
    {
        std::ofstream out(census);
        out << to_sparse6(table1_graph("K4")) << "\n";
    }
    RunResult csv = run("classify " + census.string() + " --format csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.find("line,status,verdict") != std::string::npos);
    RunResult text = run("classify " + census.string() + " --format text");
    CHECK(text.status == 0);
    CHECK(text.out.find("exceptional") != std::string::npos);
    fs::remove(census);
}

TEST_CASE("classify reports malformed lines with nonzero exit") {
    auto census = tmp_file("census4.txt");
    {
        std::ofstream out(census);
        out << to_sparse6(table1_graph("K4")) << "\n";
        out << "!!notagraph!!" << "\n";
    }
    RunResult r = run("classify " + census.string());
    CHECK(r.status != 0);
    CHECK(r.out.find("line 2") != std::string::npos);
    fs::remove(census);
}

TEST_CASE("classify missing file") {
    CHECK(run("classify /nonexistent/census").status != 0);
}

TEST_CASE("verify suite selection") {
    CHECK(run("verify nonesuch").status != 0);
    RunResult r = run("verify table1 --format text");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS table1") != std::string::npos);
    CHECK(r.out.find("Foster") != std::string::npos);
}
