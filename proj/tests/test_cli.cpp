#include "kring/cli.hpp"

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace kring;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("matrix round trip") {
    const QMat m = {{Rat(1), Rat(-3, 2)}, {Rat(0), Rat(7)}};
    CHECK(format_qmat(m) == "1 -3/2\n0 7\n");
    CHECK(parse_qmat(format_qmat(m)) == m);
    CHECK_THROWS_AS(parse_qmat("1 2\n3\n"), InputError);
    CHECK_THROWS_AS(parse_qmat("1 x\n"), InputError);
    CHECK_THROWS_AS(parse_qmat("1/0\n"), InputError);
    CHECK_THROWS_AS(parse_qmat(""), InputError);
    CHECK_THROWS_AS(parse_qmat("  \n  \n"), InputError);
}

TEST_CASE("verification commands succeed with exit 0") {
    CHECK(run({"kernel-verify", "sl4/sp4"}).code == 0);
    CHECK(run({"koszul-verify", "sl4/sp4"}).code == 0);
    CHECK(run({"intertwiner", "--n", "2", "--k", "1"}).code == 0);
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run({"info", "sl5/sp5"}).code == 2);
    CHECK(run({"info", "so8/so7"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"loop", "--n", "2", "--k", "1", "--g", "/nonexistent/file"}).code == 2);
    CHECK(run({"e2", "sl4/sp4", "--format", "yaml"}).code == 2);
}

TEST_CASE("help exits 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("kernel-verify") != std::string::npos);
}

TEST_CASE("capacity cap maps to exit 2") {
    const auto r = run({"intertwiner", "--n", "3", "--k", "2", "--max-dim", "5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("capacity") != std::string::npos);
}

TEST_CASE("json output parses and carries the expected fields") {
    const auto r = run({"kernel-verify", "sl4/sp4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pair"] == "sl4/sp4");
    CHECK(j["degree"] == 3);
    CHECK(j["pass"] == true);
    REQUIRE(j["per_degree"].size() == 3);
    CHECK(j["per_degree"][2]["kernel_rank"] == 10);

    const auto kt = run({"ktheory", "sl6/sp6", "--twisted", "--format", "json"});
    REQUIRE(kt.code == 0);
    const auto k = nlohmann::json::parse(kt.out);
    REQUIRE(k["basis"].size() == 4);
    CHECK(k["basis"][1]["coefficient"] == "A_gamma");
    CHECK(k["basis"][2]["coefficient"] == "F");
    CHECK(k["poincare"] == nlohmann::json::array({1, 2, 1}));
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> cmd = {"branch", "e6/f4", "--format", "json"};
    const auto a = run(cmd), b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const std::vector<std::string> loop_cmd = {"loop", "--n",    "2", "--k",
                                               "1",    "--check", "3", "--seed", "9"};
    const auto c = run(loop_cmd), d = run(loop_cmd);
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("loop with a matrix file") {
    // identity matrix: loop is trivially the identity
    const std::string path = "/tmp/kring_test_identity.mat";
    {
        std::ofstream f(path);
        f << "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
    }
    const auto r = run({"loop", "--n", "2", "--k", "1", "--g", path, "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["is_identity"] == true);
    CHECK(j["pass"] == true);
}

TEST_CASE("branch reports the frozen generator images") {
    const auto r = run({"branch", "sl4/sp4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["restrictions"].size() == 3);
    CHECK(j["restrictions"][0]["image"] == "y1");
    CHECK(j["restrictions"][1]["image"] == "y2");
    CHECK(j["restrictions"][2]["image"] == "y1");
    CHECK(j["restrictions"][1]["decomposition"] == "V(0,1) + 1");
}

TEST_CASE("e2 table is the binomial strip") {
    const auto r = run({"e2", "e6/f4", "--qmax", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["m"] == 2);
    CHECK(j["degenerate"] == true);
    REQUIRE(j["entries"].size() == 6);
    for (const auto& e : j["entries"]) {
        const int p = e["p"];
        const Int expect = binomial(2, p);
        CHECK(Int(e["rank"].get<long long>()) == expect);
    }
}
