#include <gtest/gtest.h>

#include "ncc/pipeline.hpp"
#include "ncc/serialize.hpp"
#include "test_support.hpp"

using namespace ncc;

TEST(Pipeline, MotivatingSnippet) {
    Snippet s("fig1", test::read_fixture("figures/fig1.js"));
    auto r = run(s);
    ASSERT_EQ(r.stages.size(), 4u);
    EXPECT_TRUE(r.final_diagnostics.empty());
    EXPECT_EQ(build_line_index(r.stage(Stage::targeted).text).size(),
              build_line_index(r.stage(Stage::initial).text).size() + 2);
    EXPECT_EQ(r.stage(Stage::deletion).commented_lines.size(), 1u);
    EXPECT_EQ(r.lines_commented, 1);
    EXPECT_EQ(r.final_text, test::read_fixture("golden/fig1.js"));
    EXPECT_FALSE(r.emptied);
    EXPECT_FALSE(r.timed_out);
}

TEST(Pipeline, ErrorFreeSnippetSkipsLaterStages) {
    auto r = run(Snippet("ok", "console.log(1)"));
    EXPECT_EQ(r.final_text, "console.log(1)");
    EXPECT_FALSE(r.stage(Stage::initial).skipped);
    for (Stage st : {Stage::targeted, Stage::codefix, Stage::deletion}) EXPECT_TRUE(r.stage(st).skipped);
    EXPECT_FALSE(r.changed());
}

TEST(Pipeline, ProseIsEmptied) {
    auto r = run(Snippet("prose", "Install it with npm"));
    EXPECT_TRUE(r.emptied);
    EXPECT_TRUE(r.final_diagnostics.empty());
    EXPECT_EQ(r.final_text, "//Install it with npm");
}

TEST(Pipeline, FixedPoint) {
    EXPECT_TRUE(run_twice_fixed_point(Snippet("fig1", test::read_fixture("figures/fig1.js"))));
    EXPECT_TRUE(run_twice_fixed_point(Snippet("ok", "var a = 1;")));
}

TEST(Pipeline, StageTogglesCarrySnapshots) {
    PipelineConfig c;
    c.stages = {false, false, false};
    Snippet s("fig1", test::read_fixture("figures/fig1.js"));
    auto r = run(s, c);
    EXPECT_EQ(r.final_text, s.text());
    EXPECT_EQ(r.final_diagnostics, check(s).diagnostics);
    for (Stage st : {Stage::targeted, Stage::codefix, Stage::deletion}) EXPECT_TRUE(r.stage(st).skipped);
}

TEST(Pipeline, DeletionOnlyAblation) {
    PipelineConfig c;
    c.stages = {false, false, true};
    auto r = run(Snippet("fig9", test::read_fixture("figures/fig9.js")), c);
    EXPECT_TRUE(r.stage(Stage::targeted).skipped);
    EXPECT_TRUE(r.emptied);
}

TEST(Pipeline, StageCountsNeverIncrease) {
    for (const char* src : {"foo(1, 2\nconzole.log(3)\nundefFn();", "app.get('/', f);\n}", "var x = ;\n`", "a b c"}) {
        auto r = run(Snippet("s", src));
        for (std::size_t i = 1; i < r.stages.size(); ++i)
            EXPECT_LE(r.stages[i].diagnostics.size(), r.stages[i - 1].diagnostics.size()) << src << " stage " << i;
    }
}

TEST(Pipeline, InvalidConfigIsUsageError) {
    PipelineConfig c;
    c.timeout = std::chrono::milliseconds(0);
    EXPECT_THROW(run(Snippet("s", "x"), c), UsageError);
    c = {};
    c.max_compiles = 0;
    EXPECT_THROW(run(Snippet("s", "x"), c), UsageError);
}

TEST(Pipeline, ExpiredDeadlineReportsTimeout) {
    std::string text;
    for (int i = 0; i < 3000; ++i) text += "zz" + std::to_string(i) + "(;\n";
    PipelineConfig c;
    auto r = run(Snippet("slow", text), c, Deadline(std::chrono::milliseconds(1)));
    EXPECT_TRUE(r.timed_out);
    ASSERT_EQ(r.stages.size(), 4u);
}

TEST(Pipeline, ContainedRunMatchesDirectRun) {
    Snippet s("fig1", test::read_fixture("figures/fig1.js"));
    auto a = run(s);
    auto b = run_contained(s);
    EXPECT_EQ(a.final_text, b.final_text);
    EXPECT_EQ(a.final_diagnostics, b.final_diagnostics);
}

TEST(Serialize, ResultRoundTrip) {
    Snippet s("fig1", test::read_fixture("figures/fig1.js"));
    auto r = run(s);
    auto j = to_json(r, FileOrigin{"fig1.js"});
    EXPECT_EQ(j["schema"], "ncc-result/1");
    EXPECT_EQ(j["origin"]["kind"], "file");
    auto back = result_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.snippet_id, r.snippet_id);
    EXPECT_EQ(back.final_text, r.final_text);
    ASSERT_EQ(back.stages.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(back.stages[i].diagnostics, r.stages[i].diagnostics);
        EXPECT_EQ(back.stages[i].changes, r.stages[i].changes);
        EXPECT_EQ(back.stages[i].text, r.stages[i].text);
    }
    EXPECT_EQ(back.lines_commented, r.lines_commented);
}

TEST(Serialize, RejectsUnknownSchema) {
    EXPECT_THROW(result_from_json(nlohmann::json{{"schema", "other"}}), UsageError);
}
