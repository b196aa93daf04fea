#include "cli.hpp"

#include "weylcheck/quotient_obstruction.hpp"
#include "weylcheck/verdict.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using weylcheck::Json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "weylcheck");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = weylcheck::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

} // namespace

TEST(Cli, GroupSummary) {
    auto r = run({"group", "F4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1152"), std::string::npos);
    EXPECT_NE(r.out.find("24"), std::string::npos);

    auto j = json_of(run({"--json", "--no-timings", "group", "A1"}));
    EXPECT_EQ(j["results"][0]["order"], 2);
    EXPECT_EQ(j["results"][0]["exponent"], 2);
}

TEST(Cli, GroupErrors) {
    auto e7 = run({"group", "E7"});
    EXPECT_EQ(e7.code, 3);
    EXPECT_NE(e7.err.find("static facts"), std::string::npos);
    EXPECT_EQ(run({"group", "X9"}).code, 2);
    EXPECT_EQ(run({"--seed-free", "group", "A1"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--max-r", "7", "check-pair", "D4", "B3"}).code, 2);
}

TEST(Cli, GroupFileWritesAndLoads) {
    auto path = std::filesystem::temp_directory_path() / "weylcheck_cli_b3.txt";
    ASSERT_EQ(run({"group", "B3", "-o", path.string()}).code, 0);
    auto loaded = json_of(run({"--json", "load", path.string()}));
    EXPECT_EQ(loaded["results"][0]["order"], 48);
    std::filesystem::remove(path);
    EXPECT_NE(run({"load", path.string()}).code, 0);
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(run({"verify", "exponent-orthogonal", "--n", "5"}).code, 0);
    auto j = json_of(run({"--json", "verify", "exponent-orthogonal", "--n", "5"}));
    EXPECT_EQ(j["results"][0]["witness"]["e_D"], 120);
    EXPECT_EQ(run({"verify", "f4-structure"}).code, 0);
    EXPECT_EQ(run({"verify", "isotrivial", "B4", "C4"}).code, 0);
    EXPECT_EQ(run({"verify", "invariant-subspaces", "--n", "5", "--h", "alternating"}).code, 0);
    EXPECT_EQ(run({"verify", "no-such-lemma"}).code, 2);
    // W(D4) has more normal subgroups than the four-element list
    EXPECT_EQ(run({"verify", "normal-subgroups-d", "--n", "4"}).code, 1);
}

TEST(Cli, CheckPairExitCodes) {
    auto d4b3 = run({"--json", "check-pair", "D4", "B3"});
    EXPECT_EQ(d4b3.code, 0);
    EXPECT_EQ(json_of(d4b3)["results"][0]["rule"], "DerivedLength");
    auto b4c4 = run({"--json", "check-pair", "B4", "C4"});
    EXPECT_EQ(b4c4.code, 0);
    EXPECT_EQ(json_of(b4c4)["results"][0]["outcome"], "iso-trivial");
    auto b2a1 = json_of(run({"--json", "check-pair", "B2", "A1", "--max-r", "2"}));
    EXPECT_EQ(b2a1["results"][0]["outcome"], "obstructed");
    EXPECT_EQ(b2a1["results"][0]["search"]["corroborates"], true);
    EXPECT_EQ(run({"check-pair", "A1", "B2"}).code, 1);
}

TEST(Cli, EnvironmentBoundOverridesFlag) {
    ::setenv("WEYLCHECK_BOUND", "10", 1);
    auto r = run({"--bound", "1000000", "check-pair", "F4", "B4"});
    ::unsetenv("WEYLCHECK_BOUND");
    EXPECT_EQ(r.code, 4);
    ::setenv("WEYLCHECK_BOUND", "ten", 1);
    EXPECT_EQ(run({"check-pair", "D4", "B3"}).code, 2);
    ::unsetenv("WEYLCHECK_BOUND");
}

TEST(Cli, MatrixExitCodes) {
    EXPECT_EQ(run({"matrix", "A1", "A2", "B2", "G2"}).code, 0);
    EXPECT_EQ(run({"matrix", "A2", "A2"}).code, 0);
    EXPECT_EQ(run({"matrix", "A1"}).code, 2);
    auto e8 = run({"matrix", "A2", "E8"});
    EXPECT_EQ(e8.code, 0);
    EXPECT_NE(e8.out.find("JH*"), std::string::npos);
}

TEST(Cli, JsonIsByteStableAndRoundTrips) {
    std::vector<std::vector<std::string>> commands = {
        {"--json", "--no-timings", "check-pair", "D4", "B3"},
        {"--json", "--no-timings", "matrix", "A1", "A2", "B2", "G2"},
        {"--json", "--no-timings", "verify", "product-decomposition", "--n", "3"},
        {"--json", "--no-timings", "group", "G2"}};
    for (auto& cmd : commands) {
        auto a = run(cmd), b = run(cmd);
        EXPECT_EQ(a.out, b.out) << cmd[3];
        auto j = Json::parse(a.out);
        for (auto key : {"tool-version", "command", "inputs", "results", "wall-time-ms"}) EXPECT_TRUE(j.contains(key));
        EXPECT_EQ(Json::parse(j.dump()), j);
    }
    auto report = json_of(run(commands[0]))["results"][0];
    EXPECT_EQ(Json(report.get<weylcheck::ObstructionReport>()), report);
    auto verdict = json_of(run(commands[2]))["results"][0];
    EXPECT_EQ(Json(verdict.get<weylcheck::Verdict>()), verdict);
}

TEST(Cli, ExitCodeFollowsReportContent) {
    auto j = json_of(run({"--json", "--no-timings", "matrix", "A1", "A2", "B2", "G2"}));
    bool any_quotient = false;
    for (auto& cell : j["results"][0]["cells"]) any_quotient |= cell["outcome"] == "quotient-exists";
    EXPECT_FALSE(any_quotient);
}
