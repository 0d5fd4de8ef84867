#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncc/corpus.hpp"
#include "ncc/serialize.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAllFailed = 2;

struct RunOptions {
    std::vector<std::string> inputs;
    double timeout_secs = 60;
    int max_compiles = 500;
    std::string stages = "targeted,codefix,deletion";
    bool extract = false;
    int parallel = 1;
    bool json = false;
    std::string results_path;
    std::string report_path;
    std::string out_dir;
    std::size_t top = 10;
};

ncc::StageToggles parse_toggles(const std::string& list) {
    ncc::StageToggles t{false, false, false};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item == "none") continue;
        auto st = ncc::parse_stage(item);
        if (!st || *st == ncc::Stage::initial) throw ncc::UsageError("unknown stage '" + item + "'");
        if (*st == ncc::Stage::targeted) t.targeted = true;
        if (*st == ncc::Stage::codefix) t.codefix = true;
        if (*st == ncc::Stage::deletion) t.deletion = true;
    }
    return t;
}

ncc::PipelineConfig make_config(const RunOptions& o, bool measure_only) {
    if (!(o.timeout_secs > 0)) throw ncc::UsageError("--timeout-secs must be positive");
    ncc::PipelineConfig c;
    c.timeout = std::chrono::milliseconds(static_cast<long long>(std::llround(o.timeout_secs * 1000)));
    c.max_compiles = o.max_compiles;
    c.stages = measure_only ? ncc::StageToggles{false, false, false} : parse_toggles(o.stages);
    c.validate();
    return c;
}

std::string file_name_for(const std::string& id) {
    std::string out;
    for (char ch : id) out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-') ? ch : '_';
    if (out.size() < 3 || out.substr(out.size() - 3) != ".js") out += ".js";
    return out;
}

void write_text(const fs::path& p, const std::string& text) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

void write_fixed(const RunOptions& o, const ncc::IngestRecord& rec, const ncc::PipelineResult& r) {
    if (!o.out_dir.empty()) {
        write_text(fs::path(o.out_dir) / file_name_for(rec.id), r.final_text);
        return;
    }
    if (const auto* f = std::get_if<ncc::FileOrigin>(&rec.origin)) {
        fs::path p(f->path);
        write_text(p.parent_path() / (p.stem().string() + ".fixed.js"), r.final_text);
        return;
    }
    std::cerr << "warning: " << rec.id << ": not written (no source file; pass --out-dir)\n";
}

int run_inputs(const RunOptions& o, bool measure_only) {
    ncc::PipelineConfig config = make_config(o, measure_only);
    if (o.parallel < 1) throw ncc::UsageError("--parallel must be at least 1");
    std::vector<fs::path> paths(o.inputs.begin(), o.inputs.end());
    ncc::IngestResult ingested = ncc::ingest(paths, o.extract);
    for (const auto& w : ingested.warnings) std::cerr << "warning: " << w << "\n";
    for (const auto& f : ingested.failed) std::cerr << "error: " << f.source << ": " << f.error << "\n";

    ncc::CorpusRun run = ncc::run_corpus(ingested.records, config, o.parallel, ingested.failed);

    if (!o.results_path.empty()) {
        std::ostringstream lines;
        for (std::size_t i = 0; i < run.results.size(); ++i)
            lines << ncc::to_json(run.results[i], ingested.records[i].origin).dump() << "\n";
        write_text(o.results_path, lines.str());
    }
    if (!measure_only)
        for (std::size_t i = 0; i < run.results.size(); ++i) write_fixed(o, ingested.records[i], run.results[i]);

    nlohmann::json report = ncc::to_json(run.report);
    if (!o.report_path.empty()) write_text(o.report_path, report.dump(2) + "\n");
    if (o.json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << ncc::format_report(run.report, o.top);

    if (ingested.records.empty() && !ingested.failed.empty()) return kExitAllFailed;
    return kExitOk;
}

int run_report(const std::string& path, bool json, std::size_t top) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return kExitAllFailed;
    }
    std::vector<ncc::PipelineResult> results;
    std::vector<ncc::FailedInput> failed;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty()) continue;
        try {
            results.push_back(ncc::result_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            failed.push_back({path + ":" + std::to_string(n), e.what()});
            std::cerr << "error: " << path << ":" << n << ": " << e.what() << "\n";
        }
    }
    bool all_failed = results.empty() && !failed.empty();
    ncc::CorpusReport report = ncc::build_report(results, std::move(failed));
    if (json)
        std::cout << ncc::to_json(report).dump(2) << "\n";
    else
        std::cout << ncc::format_report(report, top);
    return all_failed ? kExitAllFailed : kExitOk;
}

ncc::CorpusReport load_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ncc::UsageError("cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ncc::UsageError(path + ": " + e.what());
    }
    return ncc::report_from_json(j);
}

int run_diff(const std::string& a, const std::string& b, const std::string& stage_a, const std::string& stage_b,
             bool json) {
    auto sa = ncc::parse_stage(stage_a);
    auto sb = ncc::parse_stage(stage_b);
    if (!sa || !sb) throw ncc::UsageError("unknown stage name");
    ncc::ReportDiff d = ncc::diff_report(load_report(a), load_report(b), *sa, *sb);
    if (json)
        std::cout << ncc::to_json(d).dump(2) << "\n";
    else
        std::cout << ncc::format_diff(d);
    return kExitOk;
}

void add_run_options(CLI::App* cmd, RunOptions& o, bool with_stages) {
    cmd->add_option("inputs", o.inputs, "Directories, .js, .md or .jsonl files")->required();
    cmd->add_option("--timeout-secs", o.timeout_secs, "Per-snippet wall-clock budget in seconds")->capture_default_str();
    cmd->add_option("--max-compiles", o.max_compiles, "Compile budget of the deletion stage")->capture_default_str();
    if (with_stages)
        cmd->add_option("--stages", o.stages, "Comma-separated stages to run (targeted,codefix,deletion)")
            ->capture_default_str();
    cmd->add_flag("--extract", o.extract, "Treat inputs as README markdown and extract code blocks");
    cmd->add_option("--parallel", o.parallel, "Worker threads")->capture_default_str();
    cmd->add_flag("--json", o.json, "Print the report as JSON");
    cmd->add_option("--results", o.results_path, "Write per-snippet results as JSON Lines");
    cmd->add_option("--report", o.report_path, "Write the JSON report to a file");
    cmd->add_option("--top", o.top, "Histogram rows per stage (0 = all)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ncc: repair compiler errors in Node.js snippets"};
    app.require_subcommand(1);

    RunOptions check_opts;
    auto* check = app.add_subcommand("check", "Report diagnostics without changing anything");
    add_run_options(check, check_opts, false);

    RunOptions fix_opts;
    auto* fix = app.add_subcommand("fix", "Run the repair pipeline and write corrected snippets");
    add_run_options(fix, fix_opts, true);
    fix->add_option("--out-dir", fix_opts.out_dir, "Directory for corrected snippets");

    std::string results_file;
    bool report_json = false;
    std::size_t report_top = 10;
    auto* report = app.add_subcommand("report", "Aggregate a results JSON Lines file");
    report->add_option("results", results_file, "Results file written with --results")->required();
    report->add_flag("--json", report_json, "Print the report as JSON");
    report->add_option("--top", report_top, "Histogram rows per stage (0 = all)");

    std::string diff_a, diff_b, stage_a = "deletion", stage_b = "deletion";
    bool diff_json = false;
    auto* diff = app.add_subcommand("diff", "Compare two JSON reports");
    diff->add_option("before", diff_a, "Report JSON")->required();
    diff->add_option("after", diff_b, "Report JSON")->required();
    diff->add_option("--stage-a", stage_a, "Stage of the first report")->capture_default_str();
    diff->add_option("--stage-b", stage_b, "Stage of the second report")->capture_default_str();
    diff->add_flag("--json", diff_json, "Print the delta table as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check) return run_inputs(check_opts, true);
        if (*fix) return run_inputs(fix_opts, false);
        if (*report) return run_report(results_file, report_json, report_top);
        if (*diff) return run_diff(diff_a, diff_b, stage_a, stage_b, diff_json);
    } catch (const ncc::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAllFailed;
    }
    return kExitUsage;
}
