#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "mspring/cli.hpp"

using namespace mspring;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "mspring");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out);
    return {code, out.str()};
}

} // namespace

TEST(Cli, OrbitsExample)
{
    auto r = run({"orbits", "--quiver", "cyclic:2", "--dim", "1,1"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], "orbits/1");
    EXPECT_EQ(j["count"], 3);
    EXPECT_EQ(j["orbit_dims"], json::parse("[0,1,1]"));
}

TEST(Cli, PavingExample)
{
    auto r = run({"paving", "--quiver", "cyclic:1", "--dim", "3", "--rep", "(0,2)+(0,1)", "--comp", "1;1;1"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], "paving/1");
    EXPECT_EQ(j["cells"], json::parse("[0,1,1]"));
    EXPECT_EQ(j["poincare"], json::parse(R"J({"0":1,"1":2})J"));
    EXPECT_EQ(j["euler"], 3);
}

TEST(Cli, CountMatchesPoincare)
{
    auto r = run({"count", "--quiver", "cyclic:1", "--dim", "3", "--rep", "(0,2)+(0,1)", "--word", "0,0,0", "--q", "5"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["count"], 11);
    EXPECT_EQ(j["match"], true);
}

TEST(Cli, GdimCompareExample)
{
    auto r = run({"gdim", "--mode", "compare", "--quiver", "A2", "--dim", "1,1", "--word-i", "0,1", "--word-j", "1,0"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], "gdim/1");
    EXPECT_EQ(j["match"], true);
    EXPECT_EQ(j["geo"]["terms"]["2"], 1);
    EXPECT_EQ(j["alg"]["terms"]["1"], 1);
}

TEST(Cli, GdimTableAllComps)
{
    auto r = run({"gdim-table", "--quiver", "A1", "--dim", "2", "--all-comps", "--trunc", "8"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["blocks"].size(), 4u);
    EXPECT_EQ(j["all_match"], true);
}

TEST(Cli, SelftestExample)
{
    auto r = run({"klr-selftest", "--quiver", "cyclic:2", "--dim", "1,1", "--trials", "10", "--seed", "42"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], "klr-selftest/1");
    EXPECT_EQ(j["passed"], true);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"orbits", "--quiver", "E6", "--dim", "1"}).code, 1);
    EXPECT_EQ(run({"paving", "--quiver", "A2", "--dim", "1,1", "--rep", "(1,2)", "--comp", "1,0;0"}).code, 1);
    EXPECT_EQ(run({"paving", "--quiver", "A2", "--dim", "1,1", "--rep", "(1,2"}).code, 1);
    EXPECT_EQ(run({"count", "--quiver", "A1", "--dim", "1", "--rep", "(0,1)", "--word", "0", "--q", "6"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, ComplexCommand)
{
    auto path = testing::TempDir() + "cli_complex.json";
    {
        std::ofstream f(path);
        f << R"J({"schema":"complex/1","algebra":{"type":"nilhecke","n":2},
            "generators":[[0,0,0],[0,0,1],[0,2,1]],
            "differential":[[1,0,"e"],[2,0,"x1"]]})J";
    }
    auto r = run({"complex", path});
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], "complex-report/1");
    EXPECT_EQ(j["minimized"]["generators"], json::parse("[[0,2,1]]"));
    EXPECT_EQ(j["euler_preserved"], true);
    auto t = run({"complex", path, "--op", "truncate", "--n", "0"});
    ASSERT_EQ(t.code, 0);
    EXPECT_EQ(json::parse(t.out)["reassembly"], true);
    {
        std::ofstream f(path);
        f << R"J({"algebra":{"type":"nilhecke","n":2},"generators":[[0,0,0],[0,4,1]],"differential":[[1,0,"x1"]]})J";
    }
    auto bad = run({"complex", path, "--op", "validate"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(json::parse(bad.out)["valid"], false);
    std::remove(path.c_str());
}

TEST(Cli, OutputIndependentOfThreads)
{
    auto a = run({"gdim-table", "--quiver", "cyclic:2", "--dim", "2,1", "--threads", "1"});
    auto b = run({"gdim-table", "--quiver", "cyclic:2", "--dim", "2,1", "--threads", "4"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}
