#include "theta/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = theta::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("theta_cli_test_" + name);
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("kstar text report") {
    const Run r = run({"theta", "kstar", "--spec", "3,5,5", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("k*=4, exponent=5/4\n", 0) == 0);
}

TEST_CASE("verify c8 on G(3)") {
    const Run r = run({"verify", "c8", "--q", "3", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("violations: 0\n") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"verify", "c8", "--q", "3"}).out);
    CHECK(j["result"]["violations"] == 0);
    CHECK(j["tool"] == "theta_extremal");
    CHECK(j["config"]["q"] == "3");
}

TEST_CASE("scaling table") {
    const Run r = run({"extremal", "scaling", "--spec", "3,5,5", "--q", "2,3,4"});
    CHECK(r.code == 0);
    CHECK(r.out == "q,n,edges,bound,ratio\n2,32,32,32,1\n3,162,243,243,1\n4,512,1024,1024,1\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"pipeline", "layered", "--q", "3", "--spec", "3,5,5", "--theta-top", "2"}).code == 2);
    CHECK(run({"construct", "--q", "6"}).code == 2);
    CHECK(run({"theta", "kstar", "--spec", "3,4"}).code == 2);
    CHECK(run({"detect", "--spec", "3,5,5"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    const Run r = run({"construct", "--q", "6"});
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("pipeline on G(3) completes without an embedding") {
    const Run r = run({"pipeline", "layered", "--q", "3", "--spec", "3,5,5", "--theta-top", "2", "--theta-inner", "2"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["ok"] == true);
    CHECK(j["result"]["embedding"].is_null());
}

TEST_CASE("precondition failures exit with 1") {
    // K_{2,4} has only 4 leaves for 2 centres of degree 4
    const auto path = temp_file("k24.txt", "6 8\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n");
    CHECK(run({"lemma", "stars", "--graph", path.string(), "--d", "4", "--c", "1"}).code == 1);
    std::filesystem::remove(path);
}

TEST_CASE("every report has a schema") {
    for (std::vector<std::string> cmd :
         {std::vector<std::string>{"theta", "kstar"}, {"detect"}, {"verify", "c8"}, {"lemma", "classify"},
          {"extremal", "exact"}, {"pipeline", "layered"}}) {
        cmd.push_back("--schema");
        const Run r = run(cmd);
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.contains("$schema"));
        CHECK(j["type"] == "object");
    }
}

TEST_CASE("hosts from files") {
    const auto g6 = temp_file("c8.g6", "GhCGKC\n");
    const Run r = run({"detect", "--graph", g6.string(), "--spec", "3,5"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["status"] == "found");
    std::filesystem::remove(g6);

    const auto out = std::filesystem::temp_directory_path() / "theta_cli_test_g2.g6";
    CHECK(run({"construct", "--q", "2", "--out", out.string()}).code == 0);
    const Run again = run({"lemma", "core", "--graph", out.string(), "--min-degree", "2"});
    CHECK(again.code == 0);
    CHECK(nlohmann::json::parse(again.out)["result"]["vertices"] == 32);
    std::filesystem::remove(out);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::string> cmd{"extremal", "search", "--n", "20", "--spec", "3,5,5", "--budget", "200", "--seed", "3"};
    CHECK(run(cmd).out == run(cmd).out);
}
