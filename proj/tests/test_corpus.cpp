#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ncc/corpus.hpp"
#include "test_support.hpp"

using namespace ncc;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> figure_files() {
    std::string dir = std::string(NCC_FIXTURES) + "/figures/";
    return {dir + "fig1.js", dir + "fig9.js", dir + "fig10a.js", dir + "fig10b.js"};
}

StageStats empty_stage(Stage st) {
    StageStats s;
    s.stage = st;
    return s;
}

fs::path temp_dir(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("ncc_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST(Markdown, OneJsBlock) {
    auto r = extract_markdown("# t\n\n```js\nconsole.log(1);\n```\n", "pkg");
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].id, "pkg#1");
    EXPECT_EQ(r[0].text, "console.log(1);");
    EXPECT_EQ(r[0].origin, Origin(MarkdownOrigin{"pkg"}));
}

TEST(Markdown, PythonOnly) {
    EXPECT_TRUE(extract_markdown("```python\nprint(1)\n```\n", "pkg").empty());
}

TEST(Markdown, PromptReadme) {
    auto r = extract_markdown(test::read_fixture("prompt/README.md"), "prompt");
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].id, "prompt#1");
    EXPECT_EQ(r[1].id, "prompt#2");
    EXPECT_EQ(r[0].text + "\n", test::read_fixture("figures/fig10a.js"));
    EXPECT_EQ(r[1].text + "\n", test::read_fixture("figures/fig10b.js"));
}

TEST(Markdown, TagsAndFences) {
    std::string md =
        "```JavaScript\na();\n```\n"
        "~~~node\nb();\n~~~\n"
        "```\nc();\n```\n"
        "```ts\nd();\n```\n"
        "````js\n```\ne();\n````\n"
        "```js\n   \n```\n";
    auto r = extract_markdown(md, "p");
    ASSERT_EQ(r.size(), 4u);
    EXPECT_EQ(r[0].text, "a();");
    EXPECT_EQ(r[1].text, "b();");
    EXPECT_EQ(r[2].text, "c();");
    EXPECT_EQ(r[3].text, "```\ne();");
    EXPECT_EQ(r[3].id, "p#4");
}

TEST(Markdown, UnclosedFenceYieldsNothingAndWarns) {
    std::vector<std::string> warnings;
    auto r = extract_markdown("```js\na();\n", "p", &warnings);
    EXPECT_TRUE(r.empty());
    EXPECT_EQ(warnings.size(), 1u);
}

TEST(Markdown, WindowsNewlines) {
    auto r = extract_markdown("```js\r\na();\r\nb();\r\n```\r\n", "p");
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].text, "a();\nb();");
}

TEST(Ingest, DirectoryOfJsFiles) {
    auto r = ingest({fs::path(NCC_FIXTURES) / "figures"}, false);
    ASSERT_EQ(r.records.size(), 4u);
    EXPECT_EQ(r.records[0].id, "fig1.js");
    EXPECT_EQ(r.records[3].id, "fig9.js");
    EXPECT_TRUE(r.failed.empty());
}

TEST(Ingest, ReadmeDirectoryWithExtract) {
    auto r = ingest({fs::path(NCC_FIXTURES) / "prompt"}, true);
    ASSERT_EQ(r.records.size(), 2u);
    EXPECT_EQ(r.records[0].id, "prompt#1");
}

TEST(Ingest, JsonLines) {
    auto dir = temp_dir("jsonl");
    std::ofstream(dir / "c.jsonl") << R"({"id":"a","text":"x;\r\ny;","origin":"file:a.js"})" << "\n"
                                   << "not json\n"
                                   << R"({"id":"b","text":"z;"})" << "\n";
    auto r = ingest({dir / "c.jsonl"}, false);
    ASSERT_EQ(r.records.size(), 2u);
    EXPECT_EQ(r.records[0].text, "x;\ny;");
    EXPECT_EQ(r.records[0].origin, Origin(FileOrigin{"a.js"}));
    ASSERT_EQ(r.failed.size(), 1u);
    EXPECT_NE(r.failed[0].source.find(":2"), std::string::npos);
}

TEST(Ingest, MissingInputIsPerFileError) {
    auto r = ingest({fs::path("/definitely/not/here.js"), fs::path(NCC_FIXTURES) / "figures" / "fig9.js"}, false);
    EXPECT_EQ(r.records.size(), 1u);
    EXPECT_EQ(r.failed.size(), 1u);
}

TEST(Ingest, DuplicateIdsAreRejected) {
    auto p = fs::path(NCC_FIXTURES) / "figures" / "fig9.js";
    auto r = ingest({p, p}, false);
    EXPECT_EQ(r.records.size(), 1u);
    ASSERT_EQ(r.failed.size(), 1u);
    EXPECT_EQ(r.failed[0].error, "duplicate snippet id");
}

TEST(Report, HandCountedCorpus) {
    auto in = ingest({fs::path(NCC_FIXTURES) / "report10.jsonl"}, false);
    ASSERT_EQ(in.records.size(), 10u);
    PipelineConfig c;
    c.stages = {false, false, false};
    auto run = run_corpus(in.records, c, 1);
    const auto& s = run.report.stage(Stage::initial);
    EXPECT_EQ(run.report.snippet_count, 10u);
    EXPECT_EQ(s.error_free_count, 1u);
    EXPECT_EQ(s.erroneous_count, 9u);
    EXPECT_EQ(s.total_errors, 12u);
    EXPECT_DOUBLE_EQ(s.avg_errors_per_snippet, 1.2);
    EXPECT_DOUBLE_EQ(s.avg_errors_per_erroneous_snippet, 12.0 / 9.0);
    std::vector<HistogramEntry> want{{2304, 4, "Cannot find name"},
                                     {2451, 2, "Cannot redeclare variable"},
                                     {1108, 1, "Return outside function"},
                                     {1109, 1, "Expression expected"},
                                     {1375, 1, "Top level await"},
                                     {2339, 1, "Property does not exist on type"},
                                     {2349, 1, "Expression not callable"},
                                     {9001, 1, "Module syntax in script"}};
    EXPECT_EQ(s.histogram, want);
}

TEST(Report, EmptyCorpus) {
    auto run = run_corpus({}, PipelineConfig{}, 4);
    EXPECT_EQ(run.report.snippet_count, 0u);
    ASSERT_EQ(run.report.stages.size(), 4u);
    for (const auto& s : run.report.stages) {
        EXPECT_EQ(s.total_errors, 0u);
        EXPECT_EQ(s.avg_errors_per_snippet, 0.0);
        EXPECT_TRUE(s.histogram.empty());
    }
}

TEST(Report, FigureCorpusEndsErrorFree) {
    auto in = ingest(figure_files(), false);
    auto run = run_corpus(in.records, PipelineConfig{}, 2);
    EXPECT_EQ(run.report.stage(Stage::deletion).error_free_count, 4u);
    EXPECT_EQ(run.report.snippet_count, 4u);
}

TEST(Report, Invariants) {
    auto in = ingest({fs::path(NCC_FIXTURES) / "synthetic.jsonl"}, false);
    auto run = run_corpus(in.records, PipelineConfig{}, 3);
    std::size_t commented = 0;
    for (const auto& r : run.results) commented += static_cast<std::size_t>(r.lines_commented);
    EXPECT_EQ(run.report.lines_commented, commented);
    for (const auto& s : run.report.stages) {
        std::size_t sum = 0;
        for (const auto& h : s.histogram) sum += h.count;
        EXPECT_EQ(sum, s.total_errors);
        EXPECT_EQ(s.error_free_count + s.erroneous_count, run.report.snippet_count);
        EXPECT_DOUBLE_EQ(s.avg_errors_per_snippet,
                         static_cast<double>(s.total_errors) / static_cast<double>(run.report.snippet_count));
        for (std::size_t i = 1; i < s.histogram.size(); ++i) {
            EXPECT_GE(s.histogram[i - 1].count, s.histogram[i].count);
            if (s.histogram[i - 1].count == s.histogram[i].count) {
                EXPECT_LT(s.histogram[i - 1].code, s.histogram[i].code);
            }
        }
    }
}

TEST(Report, JsonRoundTrip) {
    auto in = ingest(figure_files(), false);
    auto run = run_corpus(in.records, PipelineConfig{}, 1);
    auto j = to_json(run.report);
    EXPECT_EQ(j["schema"], "ncc-report/1");
    EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), run.report);
}

TEST(Report, ResultsFileRebuildsTheSameReport) {
    auto in = ingest({fs::path(NCC_FIXTURES) / "synthetic.jsonl"}, false);
    auto run = run_corpus(in.records, PipelineConfig{}, 2);
    std::vector<PipelineResult> back;
    for (std::size_t i = 0; i < run.results.size(); ++i)
        back.push_back(result_from_json(nlohmann::json::parse(to_json(run.results[i], in.records[i].origin).dump())));
    EXPECT_EQ(build_report(back), run.report);
}

TEST(Diff, IdenticalReportsAreAllZero) {
    auto in = ingest(figure_files(), false);
    auto rep = run_corpus(in.records, PipelineConfig{}, 1).report;
    for (Stage st : kStages) {
        auto d = diff_report(rep, rep, st, st);
        EXPECT_EQ(d.total_delta, 0);
        EXPECT_EQ(d.error_free_rate_delta, 0.0);
        for (const auto& c : d.codes) EXPECT_EQ(c.delta, 0);
    }
}

TEST(Diff, Arithmetic) {
    CorpusReport a, b;
    a.snippet_count = b.snippet_count = 5;
    for (Stage st : kStages) {
        a.stages.push_back(empty_stage(st));
        b.stages.push_back(empty_stage(st));
    }
    a.stages[3].histogram = {{2304, 5, "Cannot find name"}};
    a.stages[3].total_errors = 5;
    b.stages[3].histogram = {{2304, 2, "Cannot find name"}};
    b.stages[3].total_errors = 2;
    auto d = diff_report(a, b);
    ASSERT_EQ(d.codes.size(), 1u);
    EXPECT_EQ(d.codes[0].delta, -3);
    EXPECT_EQ(d.total_delta, -3);
    EXPECT_EQ(to_json(d)["codes"][0]["delta"], -3);
}

TEST(Diff, MismatchedCountsAreUsageError) {
    CorpusReport a, b;
    a.snippet_count = 1;
    for (Stage st : kStages) {
        a.stages.push_back(empty_stage(st));
        b.stages.push_back(empty_stage(st));
    }
    EXPECT_THROW(diff_report(a, b), UsageError);
}

TEST(Diff, InitialVersusFinalNeverIncreases) {
    auto in = ingest(figure_files(), false);
    auto rep = run_corpus(in.records, PipelineConfig{}, 1).report;
    auto d = diff_report(rep, rep, Stage::initial, Stage::deletion);
    EXPECT_LE(d.total_delta, 0);
    EXPECT_LT(d.total_delta, 0);
}

TEST(Tables, HistogramTopK) {
    StageStats s = empty_stage(Stage::initial);
    s.histogram = {{2304, 3, "Cannot find name"}, {1005, 2, "Character expected"}, {1109, 1, "Expression expected"}};
    s.total_errors = 6;
    std::string out = format_histogram(s, 2);
    EXPECT_NE(out.find("Cannot find name"), std::string::npos);
    EXPECT_NE(out.find("Character expected"), std::string::npos);
    EXPECT_EQ(out.find("Expression expected"), std::string::npos);
}
