#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <sys/wait.h>

#include "loopconv/io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path work = LOOPCONV_WORK;

int run(const std::string& args, const std::string& out = "out.txt", const std::string& err = "err.txt") {
    fs::create_directories(work);
    const std::string cmd = std::string("\"") + LOOPCONV_CLI + "\" " + args + " > \"" + (work / out).string() +
                            "\" 2> \"" + (work / err).string() + "\"";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& name) {
    std::ifstream in(work / name, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string at(const std::string& name) { return "\"" + (work / name).string() + "\""; }

}  // namespace

TEST_CASE("usage errors exit 2 with usage on stderr") {
    CHECK(run("") == 2);
    CHECK(slurp("err.txt").find("Usage") != std::string::npos);
    CHECK(slurp("out.txt").empty());
    CHECK(run("sample --samples 0") == 2);
    CHECK(run("sample --n 9") == 2);
    CHECK(run("sample --bogus") == 2);
    CHECK(run("plot") == 2);
    CHECK(slurp("err.txt").find("Usage") != std::string::npos);
    CHECK(run("verify --tol missing_equals_sign") == 2);
    CHECK(run("plot --in " + at("does_not_exist.csv")) == 2);
}

TEST_CASE("sample is byte-identical on rerun") {
    const std::string args = "sample --samples 300 --seed 5 --depth 3";
    REQUIRE(run(args + " --out " + at("a.csv") + " --loops-out " + at("a.jsonl")) == 0);
    REQUIRE(run(args + " --threads 3 --out " + at("b.csv") + " --loops-out " + at("b.jsonl")) == 0);
    CHECK(slurp("a.csv") == slurp("b.csv"));
    CHECK(slurp("a.jsonl") == slurp("b.jsonl"));
    const std::string csv = slurp("a.csv");
    CHECK(csv.rfind("energy,v1,v2\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 301);

    std::ifstream in(work / "a.jsonl");
    const auto loops = loopconv::read_loops_jsonl(in);
    CHECK(loops.size() == 300);

    REQUIRE(run("sample --samples 300 --seed 6 --depth 3 --out " + at("c.csv")) == 0);
    CHECK(slurp("c.csv") != csv);
    REQUIRE(run("sample --samples 300 --seed 5 --depth 3 --real --out " + at("r.csv")) == 0);
    CHECK(slurp("r.csv") != csv);
}

TEST_CASE("verify: 0 on success, 1 on a failed suite") {
    CHECK(run("verify --report " + at("report.txt")) == 0);
    CHECK(slurp("out.txt") == slurp("report.txt"));
    CHECK(slurp("out.txt").find("45/45") != std::string::npos);
    CHECK(run("verify --tol moment.rotation.covariance=1e-30") == 1);
    CHECK(slurp("out.txt").find("FAIL moment.rotation.covariance") != std::string::npos);
}

TEST_CASE("duistermaat") {
    REQUIRE(run("duistermaat --samples 400 --depth 2 --hull-out " + at("hull")) == 0);
    const std::string out = slurp("out.txt");
    CHECK(out.find("hausdorff ") != std::string::npos);
    const auto full = loopconv::hull_from_json(slurp("hull_full.json"));
    const auto real = loopconv::hull_from_json(slurp("hull_real.json"));
    CHECK(full.dim == 2);
    CHECK(real.dim == 2);
    CHECK(run("duistermaat --samples 400 --depth 2 --threshold 0") == 1);
    CHECK(run("duistermaat --samples 400 --depth 2 --threshold 10") == 0);
    CHECK(run("duistermaat --n 4") == 2);
}

TEST_CASE("grassmann-check, vertices, plot") {
    CHECK(run("grassmann-check --radius 2 --dump " + at("g.json")) == 0);
    CHECK(!slurp("g.json").empty());
    CHECK_NOTHROW(loopconv::grass_point_from_json(slurp("g.json")));

    REQUIRE(run("vertices --n 2 --radius 2 --out " + at("v.csv")) == 0);
    CHECK(slurp("v.csv") == "energy,v1,v2\n4,2,-2\n1,1,-1\n0,0,0\n");

    REQUIRE(run("sample --samples 50 --out " + at("s.csv")) == 0);
    REQUIRE(run("plot --in " + at("s.csv") + " --vertices " + at("v.csv") + " --out " + at("p.svg")) == 0);
    const std::string svg = slurp("p.svg");
    CHECK(svg.find("width=\"800\"") != std::string::npos);
    CHECK(svg.find("height=\"600\"") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 50);
    REQUIRE(run("plot --in " + at("s.csv") + " --out " + at("q.svg")) == 0);
    CHECK(slurp("q.svg") != "");
}
