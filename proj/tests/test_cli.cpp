// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "ladder/cli.hpp"
#include "test_support.hpp"

namespace ladder {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
    std::ostringstream out, err;
    const int code = cli::run_cli(std::move(args), out, err, hooks);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

TEST(CliDecide, CaseFixtures) {
    const auto r1 = run({"decide", test::fixture_path("case1.json")});
    EXPECT_EQ(r1.code, 0);
    EXPECT_TRUE(contains(r1.out, "Chosen: m1\n")) << r1.out;
    EXPECT_TRUE(contains(r1.out, "feasible: [m1,m3]")) << r1.out;
    EXPECT_TRUE(contains(r1.out, "eliminated m2: attribute 5 value 3 fails <= 2")) << r1.out;

    const auto r2 = run({"decide", test::fixture_path("case2.json")});
    EXPECT_EQ(r2.code, 0);
    EXPECT_TRUE(contains(r2.out, "level 2 | attrs {3,4} | before [m2,m3] | after [m3]")) << r2.out;

    EXPECT_TRUE(contains(run({"decide", test::fixture_path("case3.json")}).out, "Chosen: site-2"));
    EXPECT_TRUE(contains(run({"decide", test::fixture_path("case4.json")}).out, "Chosen: w1"));
}

TEST(CliDecide, JsonOutput) {
    const auto r = run({"decide", test::fixture_path("case1.json"), "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["task_id"], "case1-business-trip");
    EXPECT_EQ(j["mode"], "global");
    EXPECT_EQ(j["outcome"]["chosen"], "m1");
    EXPECT_EQ(j["sift"]["feasible"].size(), 2u);
}

TEST(CliDecide, ExitCodePerVerdict) {
    EXPECT_EQ(run({"decide", test::data_path("abstain.json")}).code, cli::kExitAbstain);
    EXPECT_EQ(run({"decide", test::data_path("crossing.json")}).code, cli::kExitUndecided);
    const auto und = run({"decide", test::data_path("crossing.json"), "--mode", "undominated"});
    EXPECT_EQ(und.code, cli::kExitUndecided);
    EXPECT_TRUE(contains(und.out, "NoUniqueChoice: -")) << und.out;
    EXPECT_TRUE(contains(run({"decide", test::data_path("crossing.json")}).out, "Repartition: -"));
}

TEST(CliDecide, RejectsDuplicateAlternatives) {
    const auto r = run({"decide", test::data_path("duplicates.json")});
    EXPECT_EQ(r.code, cli::kExitError);
    EXPECT_TRUE(contains(r.err, "duplicate-alternative")) << r.err;
}

TEST(CliDecide, MissingFileAndBadMode) {
    EXPECT_EQ(run({"decide", "/nonexistent/task.json"}).code, cli::kExitError);
    EXPECT_EQ(run({"decide", test::fixture_path("case1.json"), "--mode", "sideways"}).code, cli::kExitError);
    EXPECT_EQ(run({}).code, cli::kExitError);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliDecide, OutputIsDeterministic) {
    const auto a = run({"decide", test::fixture_path("case2.json"), "--json"});
    const auto b = run({"decide", test::fixture_path("case2.json"), "--json"});
    EXPECT_EQ(a.out, b.out);
}

TEST(CliCompare, Case2AllTheories) {
    const auto r = run({"compare", test::fixture_path("case2.json"), "--theories", "lt,pt,it", "--pt-risk-attr", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "lt: m3\npt: m1\nit: undecidable\n");
}

TEST(CliCompare, Case3ImageTheory) {
    const auto r = run({"compare", test::fixture_path("case3.json"), "--theories", "lt,it", "--it-profit-attr", "2",
                        "--observed", "site-2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "lt: site-2 (correct)\nit: site-2 (correct)\n");
}

TEST(CliCompare, JsonRows) {
    const auto r = run({"compare", test::fixture_path("case1.json"), "--theories", "lt,pt", "--pt-risk-attr", "5",
                        "--json", "--observed", "m1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["rows"].size(), 2u);
    EXPECT_EQ(j["rows"][1]["theory"], "pt");
    EXPECT_EQ(j["rows"][1]["result"], "m1");
    EXPECT_EQ(j["rows"][1]["judgement"], "correct");
}

TEST(CliCompare, ConfigurationErrors) {
    const auto unknown = run({"compare", test::fixture_path("case1.json"), "--theories", "lt,xt"});
    EXPECT_EQ(unknown.code, cli::kExitError);
    EXPECT_TRUE(contains(unknown.err, "xt"));
    const auto no_risk = run({"compare", test::fixture_path("case1.json"), "--theories", "pt"});
    EXPECT_EQ(no_risk.code, cli::kExitError);
    EXPECT_TRUE(contains(no_risk.err, "configuration")) << no_risk.err;
}

TEST(CliValidate, FixturesAreOk) {
    std::vector<std::string> args{"validate"};
    for (const auto& n : test::fixture_names()) args.push_back(test::fixture_path(n));
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "case4.json: ok"));
}

TEST(CliValidate, ReportsPositionAndSharedId) {
    const auto syntax = run({"validate", test::data_path("malformed/syntax.json")});
    EXPECT_EQ(syntax.code, cli::kExitError);
    EXPECT_TRUE(contains(syntax.err, "line 3")) << syntax.err;
    const auto overlap = run({"validate", test::data_path("malformed/partition_overlap.json")});
    EXPECT_EQ(overlap.code, cli::kExitError);
    EXPECT_TRUE(contains(overlap.err, "attribute 4")) << overlap.err;
    EXPECT_TRUE(contains(overlap.err, "error[partition]")) << overlap.err;
}

TEST(CliValidate, ReportsEveryMalformedFile) {
    for (const auto& entry : std::filesystem::directory_iterator(test::data_path("malformed"))) {
        const auto r = run({"validate", entry.path().string()});
        EXPECT_EQ(r.code, cli::kExitError) << entry.path();
        EXPECT_TRUE(contains(r.err, "error[")) << entry.path();
    }
}

TEST(CliBatch, EmptyBatch) {
    const auto r = run({"batch", "--count", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0/0 agree\n");
}

TEST(CliBatch, EngineAgreesWithOracle) {
    const auto r = run({"batch", "--seed", "7", "--count", "1000"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1000/1000 agree\n");
    EXPECT_EQ(run({"batch", "--seed", "7", "--count", "200", "--kinds", "total"}).code, 0);
}

TEST(CliBatch, MutantEngineIsCaught) {
    // always picks the first feasible alternative
    cli::Hooks hooks;
    hooks.engine = [](const DecisionTask& t, DominanceMode m) {
        auto out = decide(t, m).outcome;
        const auto feasible = psp(t).feasible;
        if (feasible.size() > 1) {
            out.verdict = Verdict::chosen;
            out.chosen = feasible.front();
        }
        return out;
    };
    const auto dir = std::filesystem::temp_directory_path() / "ladder-batch-mutant";
    std::filesystem::remove_all(dir);
    const auto r = run({"batch", dir.string(), "--seed", "1", "--count", "200"}, hooks);
    EXPECT_EQ(r.code, cli::kExitDisagreement);
    EXPECT_TRUE(contains(r.out, "first offending seed: ")) << r.out;
    EXPECT_FALSE(std::filesystem::is_empty(dir));
    for (const auto& e : std::filesystem::directory_iterator(dir))
        EXPECT_NO_THROW(parse_scenario(test::read_text(e.path().string()))) << e.path();
    std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace ladder
