#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "weylflag/cli.hpp"
#include "weylflag/serialize.hpp"

using namespace weylflag;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/weylflag_test_") + name;
    std::ofstream f(path);
    f << body;
    return path;
}

}  // namespace

TEST_CASE("census command") {
    auto r = run({"census", "--n", "4"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["comparable_pairs"] == 213);
    CHECK(j["good"] == 212);
    CHECK(j["bad"] == 1);
    CHECK(j["bad_pairs"][0]["w1"] == "1,3,2,4");
    CHECK(j["bad_pairs"][0]["w2"] == "4,2,3,1");

    // Byte-identical across runs.
    CHECK(run({"census", "--n", "4"}).out == r.out);

    auto csv = run({"census", "--n", "4", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "n,sigma,w1,w2\n4,1,\"1,3,2,4\",\"4,2,3,1\"\n");

    auto sig2 = run({"census", "--n", "3", "--sigma", "2"});
    REQUIRE(sig2.code == 0);
    CHECK(json::parse(sig2.out)["comparable_pairs"] == 19 * 19);
}

TEST_CASE("census bound errors are domain errors") {
    auto r = run({"census", "--n", "6"});
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["error"]["type"] == "domain");
    // The bound is a config knob.
    CHECK(run({"census", "--n", "6", "--max-n", "6"}).code == 0);
}

TEST_CASE("dim command") {
    auto r = run({"dim", "--n", "3", "--sigma", "2", "--w", "3,1,2;2,1,3", "--wsat",
                  "1,2,3;1,2,3", "--h", "0,1,2;0,2,5"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["total"] == 21);
    CHECK(j["d_term"] == 3);
    CHECK(j["schubert_sum"] == 3);
    CHECK(j["conjectural"] == false);

    auto idr = run({"dim", "--n", "3", "--sigma", "2", "--w", "1,2,3;1,2,3", "--wsat",
                    "1,2,3;1,2,3", "--h", "0,1,2;0,2,5"});
    REQUIRE(idr.code == 0);
    CHECK(json::parse(idr.out)["total"] == 21);
}

TEST_CASE("dim rejects non-good pairs without the override") {
    std::vector<std::string> base = {"dim",    "--n",       "4",         "--sigma", "1",
                                     "--w",    "4,2,3,1",   "--wsat",    "1,3,2,4", "--h",
                                     "0,1,2,3"};
    auto r = run(base);
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)["error"]["type"] == "domain");

    auto o = base;
    o.push_back("--override");
    auto r2 = run(o);
    REQUIRE(r2.code == 0);
    CHECK(json::parse(r2.out)["conjectural"] == true);
}

TEST_CASE("malformed input is a structured error") {
    auto r = run({"dim", "--n", "2", "--sigma", "1", "--w", "2,2", "--wsat", "1,2", "--h", "0,1"});
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["error"].contains("message"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"census", "--unknown-flag"}).code == 2);
    CHECK(run({"census"}).code == 2);  // --n is required
}

TEST_CASE("schubert commands") {
    auto r = run({"schubert", "tangent", "--n", "4", "--w", "3,4,1,2", "--tau", "1,2,3,4"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["dim"] == 5);

    auto oracle = run(
        {"schubert", "tangent", "--n", "4", "--w", "3,4,1,2", "--tau", "1,2,3,4", "--oracle"});
    REQUIRE(oracle.code == 0);
    CHECK(json::parse(oracle.out)["dim"] == 5);

    auto table = run({"schubert", "table", "--n", "2"});
    REQUIRE(table.code == 0);
    CHECK(table.out == "w,tau,dim\n\"1,2\",\"1,2\",0\n\"2,1\",\"1,2\",1\n\"2,1\",\"2,1\",1\n");

    // The Jacobian sweep is guarded.
    auto big = run({"schubert", "table", "--n", "5", "--oracle"});
    CHECK(big.code == 1);
}

TEST_CASE("linkage command") {
    auto r = run({"linkage", "--mu", "-1,2", "--lam", "1,0"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["linked"] == true);
    CHECK(j["chain"] == json::parse(R"([{"i":1,"j":2,"tau":1}])"));

    auto half = run({"linkage", "--mu", "1/2,0", "--lam", "1,0"});
    CHECK(half.code == 1);
}

TEST_CASE("artin eigen command") {
    std::string path = write_temp("eigen.json", R"({
      "matrix": [["0", "0"], ["e", "1"]],
      "eigenvalues": ["0", "1"]
    })");
    auto r = run({"artin", "eigen", "--algebra", "e^2", "--matrix", path});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["algebra"] == "e^2");
    CHECK(j["basis"][0][0] == "1 + 0*e");
    CHECK(j["basis"][0][1] == "0 + 0*e");
    CHECK(j["basis"][1][0] == "0 - 1*e");
    CHECK(j["basis"][1][1] == "1 + 0*e");

    // Residually equal eigenvalues are a domain error.
    std::string bad = write_temp("eigen_bad.json", R"({
      "matrix": [["0", "0"], ["e", "0"]],
      "eigenvalues": ["0", "0"]
    })");
    CHECK(run({"artin", "eigen", "--algebra", "e^2", "--matrix", bad}).code == 1);
}

TEST_CASE("config file sets bounds") {
    std::string path = write_temp("config.ini", "[census]\nmax-n=6\n");
    CHECK(run({"census", "--n", "6"}).code == 1);
    CHECK(run({"--config", path, "census", "--n", "6"}).code == 0);
}

TEST_CASE("workers env var is validated") {
    setenv("WEYLFLAG_WORKERS", "0", 1);
    CHECK(run({"census", "--n", "3"}).code == 2);
    setenv("WEYLFLAG_WORKERS", "junk", 1);
    CHECK(run({"census", "--n", "3"}).code == 2);
    setenv("WEYLFLAG_WORKERS", "2", 1);
    CHECK(run({"census", "--n", "3"}).code == 0);
    unsetenv("WEYLFLAG_WORKERS");
}

TEST_CASE("verify command smoke") {
    auto r = run({"verify", "--suite", "census"});
    CHECK(r.code == 0);
    CHECK(r.out.find("census") != std::string::npos);
    CHECK(r.out.find("pass") != std::string::npos);

    CHECK(run({"verify", "--suite", "nonsense"}).code == 1);
}
