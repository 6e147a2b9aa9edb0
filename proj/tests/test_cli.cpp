#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dmtl/cli.hpp"

namespace {

std::string sample(const std::string& name) { return std::string(DMTL_SAMPLES_DIR) + "/" + name; }

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "dmtl");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = dmtl::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

/// Writes `text` to a fresh file under the temp directory.
std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("dmtl_cli_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

struct Fixture {
    const char* program;
    const char* database;
};

const std::vector<Fixture> kFixtures = {
    {"periodic.dmtl", "periodic.facts"},     {"box_loop.dmtl", "box_loop_short.facts"},
    {"box_loop.dmtl", "box_loop_long.facts"}, {"monday.dmtl", "monday.facts"},
    {"join_cycle.dmtl", "join_cycle.facts"}, {"box_union.dmtl", "box_union.facts"},
    {"box_diamond.dmtl", "box_diamond.facts"}, {"people.dmtl", "people.facts"},
};

}  // namespace

TEST(Cli, ReasonJson) {
    auto r = run({"reason", "--program", sample("periodic.dmtl"), "--database", sample("periodic.facts"), "--format",
                  "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["type"], "periodic");
    EXPECT_EQ(j["period"], "7");
    ASSERT_EQ(j["patterns"].size(), 2u);
    EXPECT_EQ(j["patterns"][0]["atom"], "A");
    EXPECT_EQ(j["patterns"][0]["offset"], "[0,1]");
    EXPECT_EQ(j["patterns"][0]["start_index"], "1");
    EXPECT_EQ(j["patterns"][1]["offset"], "[3,5]");
    ASSERT_EQ(j["facts"].size(), 2u);
    EXPECT_EQ(j["facts"][1]["interval"], "[3,5]");
}

TEST(Cli, ReasonHuman) {
    auto r = run({"reason", "--program", sample("periodic.dmtl"), "--database", sample("periodic.facts")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("A@[0,1] + 7x, x >= 1"), std::string::npos) << r.out;
}

TEST(Cli, QueryVerdictsAndExitCodes) {
    auto yes = run({"query", "--program", sample("monday.dmtl"), "--database", sample("monday.facts"), "--query",
                    "Monday@[98,99]"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out, "true\n");
    auto no = run({"query", "--program", sample("monday.dmtl"), "--database", sample("monday.facts"), "--query",
                   "Monday@[100,101]"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "false\n");
    auto j = run({"query", "--program", sample("monday.dmtl"), "--database", sample("monday.facts"), "--query",
                  "Monday@[98,99]", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(j.out)["entailed"], true);
}

TEST(Cli, ClassifyFigure1) {
    auto r = run({"classify", "--program", sample("finite_nodes.dmtl"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    std::map<std::string, std::string> cases;
    for (const auto& n : j["nodes"]) cases[n["node"]] = n["case"];
    EXPECT_EQ(cases, (std::map<std::string, std::string>{
                         {"A", "iii"}, {"B", "iii"}, {"C", "iii"}, {"D", "none"}, {"E", "iv"}, {"X", "i"}, {"Y", "ii"}}));
}

TEST(Cli, ClassifyUsesDatabasePredicates) {
    auto alone = run({"classify", "--program", sample("box_loop.dmtl"), "--format", "json"});
    auto fed = run({"classify", "--program", sample("box_loop.dmtl"), "--database", sample("box_loop_long.facts"),
                    "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(alone.out)["rules"][0]["class"], "harmless");
    EXPECT_EQ(nlohmann::json::parse(fed.out)["rules"][0]["class"], "dangerous");
}

TEST(Cli, Oracle) {
    auto r = run({"oracle", "--program", sample("periodic.dmtl"), "--database", sample("periodic.facts"), "--horizon",
                  "13"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "A@[0,1]\nA@[7,8]\nB@[3,5]\nB@[10,12]\n");
}

TEST(Cli, CheckReportsNoDifferencesOnEveryFixture) {
    for (const auto& f : kFixtures) {
        auto r = run({"check", "--program", sample(f.program), "--database", sample(f.database)});
        EXPECT_EQ(r.code, 0) << f.program << " " << f.database << "\n" << r.out << r.err;
        EXPECT_NE(r.out.find("0 difference(s)"), std::string::npos) << r.out;
    }
}

TEST(Cli, OutputIsDeterministic) {
    for (const auto& f : kFixtures) {
        for (const char* cmd : {"reason", "classify", "check"}) {
            std::vector<std::string> args{cmd, "--program", sample(f.program), "--database", sample(f.database),
                                          "--format", "json"};
            auto a = run(args);
            auto b = run(args);
            EXPECT_EQ(a.out, b.out) << cmd << " " << f.program;
            EXPECT_EQ(a.code, b.code);
        }
    }
}

TEST(Cli, InputErrorsExitWithTwo) {
    auto missing = run({"reason", "--program", sample("nope.dmtl"), "--database", sample("periodic.facts")});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("cannot read"), std::string::npos);

    auto bad = temp_file("bad.dmtl", "A -> B .\nA -> -> C .\n");
    auto syntax = run({"classify", "--program", bad});
    EXPECT_EQ(syntax.code, 2);
    EXPECT_NE(syntax.err.find(":2:6:"), std::string::npos) << syntax.err;

    auto future = temp_file("future.dmtl", "diamondplus[1,2] A -> B .\n");
    EXPECT_EQ(run({"reason", "--program", future, "--database", sample("periodic.facts")}).code, 2);

    EXPECT_EQ(run({"reason", "--program", sample("periodic.dmtl")}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"reason", "--program", sample("periodic.dmtl"), "--database", sample("periodic.facts"),
                   "--format", "xml"})
                  .code,
              2);
    EXPECT_EQ(run({"query", "--program", sample("monday.dmtl"), "--database", sample("monday.facts"), "--query",
                   "Monday@[2,1]"})
                  .code,
              2);
}

TEST(Cli, CapsExitWithThree) {
    auto r = run({"reason", "--program", sample("periodic.dmtl"), "--database", sample("periodic.facts"),
                  "--window-cap", "1"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("windows"), std::string::npos);
    auto c = run({"classify", "--program", sample("finite_nodes.dmtl"), "--cycle-cap", "1"});
    EXPECT_EQ(c.code, 3);
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(run({"--help"}).code, 0); }
