#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncc/diagnostic_codes.hpp"
#include "ncc/pipeline.hpp"
#include "ncc/serialize.hpp"

namespace ncc {

inline constexpr std::string_view kReportSchema = "ncc-report/1";

struct IngestRecord {
    std::string id;
    Origin origin;
    std::string text;

    [[nodiscard]] Snippet snippet() const { return Snippet(id, text, origin); }
};

struct FailedInput {
    std::string source;
    std::string error;
    friend bool operator==(const FailedInput&, const FailedInput&) = default;
};

struct IngestResult {
    std::vector<IngestRecord> records;
    std::vector<FailedInput> failed;
    std::vector<std::string> warnings;
};

namespace corpus_detail {

inline std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Fence {
    char ch = 0;
    std::size_t length = 0;
    std::string info;
};

/// Recognizes a fence line: up to three spaces, then three or more '`' or '~'.
inline std::optional<Fence> fence_of(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && i < 3 && line[i] == ' ') ++i;
    if (i >= line.size() || (line[i] != '`' && line[i] != '~')) return std::nullopt;
    char ch = line[i];
    std::size_t n = 0;
    while (i + n < line.size() && line[i + n] == ch) ++n;
    if (n < 3) return std::nullopt;
    std::string_view info = trim(line.substr(i + n));
    if (ch == '`' && info.find('`') != std::string_view::npos) return std::nullopt;
    return Fence{ch, n, std::string(info)};
}

inline bool accepted_language(std::string_view info) {
    std::string_view word = info.substr(0, info.find_first_of(" \t{,"));
    std::string tag = lower(word);
    return tag.empty() || tag == "js" || tag == "javascript" || tag == "node";
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("cannot read " + p.string());
    return ss.str();
}

inline bool is_readme(const std::filesystem::path& p) { return lower(p.filename().string()) == "readme.md"; }

}  // namespace corpus_detail

/// One record per fenced js/javascript/node/untagged block, ids
/// "<package>#<n>" numbered from 1 over the blocks kept. Unclosed fences
/// and blank blocks produce no record; a warning is appended for the former.
inline std::vector<IngestRecord> extract_markdown(std::string_view readme, std::string_view package,
                                                  std::vector<std::string>* warnings = nullptr) {
    using namespace corpus_detail;
    std::string text = normalize_newlines(readme);
    std::vector<std::string_view> lines;
    for (const auto& l : build_line_index(text)) lines.push_back(line_text(text, l));

    std::vector<IngestRecord> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto open = fence_of(lines[i]);
        if (!open) continue;
        std::size_t close = i + 1;
        for (; close < lines.size(); ++close) {
            auto f = fence_of(lines[close]);
            if (f && f->ch == open->ch && f->length >= open->length && f->info.empty()) break;
        }
        if (close == lines.size()) {
            if (warnings)
                warnings->push_back(std::string(package) + ": unclosed code fence at line " + std::to_string(i + 1));
            break;
        }
        if (accepted_language(open->info)) {
            std::string body;
            for (std::size_t k = i + 1; k < close; ++k) {
                if (k > i + 1) body += '\n';
                body += lines[k];
            }
            if (!trim(body).empty())
                out.push_back({std::string(package) + "#" + std::to_string(out.size() + 1),
                               MarkdownOrigin{std::string(package)}, std::move(body)});
        }
        i = close;
    }
    return out;
}

/// Reads a JSON Lines corpus: one {"id", "text", "origin"?} object per line.
inline void ingest_jsonl(std::string_view content, const std::string& source, IngestResult& out) {
    std::istringstream in{std::string(content)};
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (corpus_detail::trim(line).empty()) continue;
        try {
            auto j = nlohmann::json::parse(line);
            IngestRecord r;
            r.id = j.at("id").get<std::string>();
            r.text = normalize_newlines(j.at("text").get<std::string>());
            r.origin = j.contains("origin") ? origin_from_json(j.at("origin")) : Origin{InlineOrigin{}};
            out.records.push_back(std::move(r));
        } catch (const std::exception& e) {
            out.failed.push_back({source + ":" + std::to_string(n), e.what()});
        }
    }
}

/// Collects snippets from files and directories. A directory yields its .js
/// files, or with `extract` the fenced blocks of every README.md below it
/// (package = containing directory name). A .jsonl file yields its records.
/// Inputs that cannot be read become failed entries; duplicate ids too.
inline IngestResult ingest(const std::vector<std::filesystem::path>& inputs, bool extract) {
    namespace fs = std::filesystem;
    using namespace corpus_detail;
    IngestResult out;

    auto add_readme = [&](const fs::path& p) {
        std::string pkg = p.parent_path().filename().string();
        if (pkg.empty()) pkg = p.stem().string();
        for (auto& r : extract_markdown(read_file(p), pkg, &out.warnings)) out.records.push_back(std::move(r));
    };
    auto add_js = [&](const fs::path& p, const std::string& id) {
        std::string text = read_file(p);
        if (trim(text).empty()) {
            out.warnings.push_back(p.string() + ": empty file skipped");
            return;
        }
        out.records.push_back({id, FileOrigin{p.string()}, normalize_newlines(text)});
    };

    for (const auto& input : inputs) {
        try {
            std::error_code ec;
            if (fs::is_directory(input, ec)) {
                std::vector<fs::path> files;
                for (auto it = fs::recursive_directory_iterator(input, ec); !ec && it != fs::recursive_directory_iterator();
                     it.increment(ec))
                    if (it->is_regular_file()) files.push_back(it->path());
                if (ec) throw std::runtime_error("cannot list " + input.string() + ": " + ec.message());
                std::sort(files.begin(), files.end());
                for (const auto& f : files) {
                    try {
                        if (extract && is_readme(f))
                            add_readme(f);
                        else if (!extract && f.extension() == ".js")
                            add_js(f, fs::relative(f, input).generic_string());
                    } catch (const std::exception& e) {
                        out.failed.push_back({f.string(), e.what()});
                    }
                }
            } else if (!fs::exists(input, ec)) {
                out.failed.push_back({input.string(), "no such file or directory"});
            } else if (input.extension() == ".jsonl") {
                ingest_jsonl(read_file(input), input.string(), out);
            } else if (lower(input.extension().string()) == ".md") {
                add_readme(input);
            } else {
                add_js(input, input.filename().string());
            }
        } catch (const std::exception& e) {
            out.failed.push_back({input.string(), e.what()});
        }
    }

    std::set<std::string> seen;
    std::vector<IngestRecord> unique;
    for (auto& r : out.records) {
        if (!seen.insert(r.id).second) {
            out.failed.push_back({r.id, "duplicate snippet id"});
            continue;
        }
        unique.push_back(std::move(r));
    }
    out.records = std::move(unique);
    return out;
}

struct HistogramEntry {
    int code = 0;
    std::size_t count = 0;
    std::string label;
    friend bool operator==(const HistogramEntry&, const HistogramEntry&) = default;
};

struct StageStats {
    Stage stage = Stage::initial;
    std::size_t error_free_count = 0;
    std::size_t erroneous_count = 0;
    std::size_t total_errors = 0;
    double avg_errors_per_snippet = 0;
    double avg_errors_per_erroneous_snippet = 0;
    std::vector<HistogramEntry> histogram;  // count descending, then code ascending
    friend bool operator==(const StageStats&, const StageStats&) = default;
};

struct CorpusReport {
    std::size_t snippet_count = 0;
    std::vector<StageStats> stages;  // one per Stage, in pipeline order
    std::size_t emptied_count = 0;
    std::size_t lines_total = 0;      // non-blank lines of the ingested snippets
    std::size_t lines_commented = 0;  // sum of per-snippet deletion counts
    std::size_t timed_out_count = 0;
    std::size_t aborted_count = 0;
    std::vector<FailedInput> failed;

    [[nodiscard]] const StageStats& stage(Stage s) const { return stages.at(static_cast<std::size_t>(s)); }
    friend bool operator==(const CorpusReport&, const CorpusReport&) = default;
};

inline std::size_t non_blank_lines(std::string_view text) {
    std::size_t n = 0;
    for (const auto& l : build_line_index(text))
        if (!is_blank_line(line_text(text, l))) ++n;
    return n;
}

inline StageStats stage_stats(Stage stage, const std::vector<const std::vector<Diagnostic>*>& per_snippet) {
    StageStats s;
    s.stage = stage;
    std::map<int, std::size_t> counts;
    for (const auto* diags : per_snippet) {
        if (diags->empty())
            ++s.error_free_count;
        else
            ++s.erroneous_count;
        s.total_errors += diags->size();
        for (const auto& d : *diags) ++counts[d.code];
    }
    if (!per_snippet.empty())
        s.avg_errors_per_snippet = static_cast<double>(s.total_errors) / static_cast<double>(per_snippet.size());
    if (s.erroneous_count)
        s.avg_errors_per_erroneous_snippet =
            static_cast<double>(s.total_errors) / static_cast<double>(s.erroneous_count);
    for (const auto& [code, n] : counts) s.histogram.push_back({code, n, std::string(code_label(code))});
    std::stable_sort(s.histogram.begin(), s.histogram.end(),
                     [](const HistogramEntry& a, const HistogramEntry& b) { return a.count > b.count; });
    return s;
}

inline CorpusReport build_report(const std::vector<PipelineResult>& results, std::vector<FailedInput> failed = {}) {
    CorpusReport r;
    r.snippet_count = results.size();
    r.failed = std::move(failed);
    for (Stage st : kStages) {
        std::vector<const std::vector<Diagnostic>*> diags;
        for (const auto& res : results) diags.push_back(&res.stage(st).diagnostics);
        r.stages.push_back(stage_stats(st, diags));
    }
    for (const auto& res : results) {
        if (res.emptied) ++r.emptied_count;
        if (res.timed_out) ++r.timed_out_count;
        if (res.analyzer_abort) ++r.aborted_count;
        r.lines_total += non_blank_lines(res.stage(Stage::initial).text);
        r.lines_commented += static_cast<std::size_t>(res.lines_commented);
    }
    return r;
}

struct CorpusRun {
    std::vector<PipelineResult> results;  // input order
    CorpusReport report;
};

/// Runs every record through run_contained on `parallelism` workers. Results
/// and the report are ordered by input position, independent of scheduling.
inline CorpusRun run_corpus(const std::vector<IngestRecord>& inputs, const PipelineConfig& config, int parallelism = 1,
                            std::vector<FailedInput> failed = {}) {
    config.validate();
    if (parallelism < 1) throw UsageError("parallelism must be at least 1");
    CorpusRun run;
    run.results.resize(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) {
            Snippet s = inputs[i].snippet();
            try {
                run.results[i] = run_contained(s, config);
            } catch (const std::exception& e) {
                PipelineResult r;
                r.snippet_id = s.id();
                StageSnapshot s0;
                s0.text = s.text();
                s0.skipped = true;
                r.stages.push_back(std::move(s0));
                pipeline_detail::finalize(r);
                r.analyzer_abort = true;
                r.abort_reason = e.what();
                run.results[i] = std::move(r);
            }
        }
    };
    auto n = static_cast<std::size_t>(parallelism);
    if (n > inputs.size()) n = std::max<std::size_t>(inputs.size(), 1);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    run.report = build_report(run.results, std::move(failed));
    return run;
}

// ---- JSON ----

inline nlohmann::json to_json(const StageStats& s) {
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& h : s.histogram) hist.push_back({{"code", h.code}, {"count", h.count}, {"label", h.label}});
    return {{"stage", std::string(to_string(s.stage))},
            {"error_free_count", s.error_free_count},
            {"erroneous_count", s.erroneous_count},
            {"total_errors", s.total_errors},
            {"avg_errors_per_snippet", s.avg_errors_per_snippet},
            {"avg_errors_per_erroneous_snippet", s.avg_errors_per_erroneous_snippet},
            {"histogram", hist}};
}

inline nlohmann::json to_json(const CorpusReport& r) {
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& s : r.stages) stages.push_back(to_json(s));
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& f : r.failed) failed.push_back({{"source", f.source}, {"error", f.error}});
    return {{"schema", std::string(kReportSchema)},
            {"snippet_count", r.snippet_count},
            {"stages", stages},
            {"emptied_count", r.emptied_count},
            {"lines_total", r.lines_total},
            {"lines_commented", r.lines_commented},
            {"timed_out_count", r.timed_out_count},
            {"aborted_count", r.aborted_count},
            {"failed", failed}};
}

inline CorpusReport report_from_json(const nlohmann::json& j) {
    if (j.value("schema", std::string()) != kReportSchema)
        throw UsageError("report lacks schema \"" + std::string(kReportSchema) + "\"");
    CorpusReport r;
    r.snippet_count = j.at("snippet_count").get<std::size_t>();
    for (const auto& s : j.at("stages")) {
        StageStats st;
        auto stage = parse_stage(s.at("stage").get<std::string>());
        if (!stage) throw UsageError("unknown stage in report");
        st.stage = *stage;
        st.error_free_count = s.at("error_free_count").get<std::size_t>();
        st.erroneous_count = s.at("erroneous_count").get<std::size_t>();
        st.total_errors = s.at("total_errors").get<std::size_t>();
        st.avg_errors_per_snippet = s.at("avg_errors_per_snippet").get<double>();
        st.avg_errors_per_erroneous_snippet = s.at("avg_errors_per_erroneous_snippet").get<double>();
        for (const auto& h : s.at("histogram"))
            st.histogram.push_back(
                {h.at("code").get<int>(), h.at("count").get<std::size_t>(), h.at("label").get<std::string>()});
        r.stages.push_back(std::move(st));
    }
    if (r.stages.size() != std::size(kStages)) throw UsageError("report must list every stage");
    r.emptied_count = j.value("emptied_count", std::size_t{0});
    r.lines_total = j.value("lines_total", std::size_t{0});
    r.lines_commented = j.value("lines_commented", std::size_t{0});
    r.timed_out_count = j.value("timed_out_count", std::size_t{0});
    r.aborted_count = j.value("aborted_count", std::size_t{0});
    for (const auto& f : j.value("failed", nlohmann::json::array()))
        r.failed.push_back({f.value("source", std::string()), f.value("error", std::string())});
    return r;
}

// ---- diff ----

struct CodeDelta {
    int code = 0;
    std::string label;
    long before = 0;
    long after = 0;
    long delta = 0;
};

struct ReportDiff {
    std::size_t snippet_count = 0;
    Stage stage_before = Stage::deletion;
    Stage stage_after = Stage::deletion;
    std::vector<CodeDelta> codes;  // every code present on either side, ascending
    long total_before = 0;
    long total_after = 0;
    long total_delta = 0;
    double error_free_rate_before = 0;
    double error_free_rate_after = 0;
    double error_free_rate_delta = 0;
    double avg_errors_delta = 0;
};

/// Compares one stage of `before` with one stage of `after`. Both reports
/// must describe the same number of snippets.
inline ReportDiff diff_report(const CorpusReport& before, const CorpusReport& after,
                              Stage stage_before = Stage::deletion, Stage stage_after = Stage::deletion) {
    if (before.snippet_count != after.snippet_count)
        throw UsageError("reports cover different snippet counts (" + std::to_string(before.snippet_count) + " vs " +
                         std::to_string(after.snippet_count) + ")");
    const StageStats& a = before.stage(stage_before);
    const StageStats& b = after.stage(stage_after);
    ReportDiff d;
    d.snippet_count = before.snippet_count;
    d.stage_before = stage_before;
    d.stage_after = stage_after;
    std::map<int, CodeDelta> by_code;
    for (const auto& h : a.histogram) {
        auto& c = by_code[h.code];
        c.code = h.code;
        c.label = h.label;
        c.before = static_cast<long>(h.count);
    }
    for (const auto& h : b.histogram) {
        auto& c = by_code[h.code];
        c.code = h.code;
        c.label = h.label;
        c.after = static_cast<long>(h.count);
    }
    for (auto& [code, c] : by_code) {
        c.delta = c.after - c.before;
        d.codes.push_back(c);
    }
    d.total_before = static_cast<long>(a.total_errors);
    d.total_after = static_cast<long>(b.total_errors);
    d.total_delta = d.total_after - d.total_before;
    if (d.snippet_count) {
        auto n = static_cast<double>(d.snippet_count);
        d.error_free_rate_before = static_cast<double>(a.error_free_count) / n;
        d.error_free_rate_after = static_cast<double>(b.error_free_count) / n;
    }
    d.error_free_rate_delta = d.error_free_rate_after - d.error_free_rate_before;
    d.avg_errors_delta = b.avg_errors_per_snippet - a.avg_errors_per_snippet;
    return d;
}

inline nlohmann::json to_json(const ReportDiff& d) {
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& c : d.codes)
        codes.push_back(
            {{"code", c.code}, {"label", c.label}, {"before", c.before}, {"after", c.after}, {"delta", c.delta}});
    return {{"schema", std::string(kReportSchema)},
            {"kind", "diff"},
            {"snippet_count", d.snippet_count},
            {"stage_before", std::string(to_string(d.stage_before))},
            {"stage_after", std::string(to_string(d.stage_after))},
            {"codes", codes},
            {"total_before", d.total_before},
            {"total_after", d.total_after},
            {"total_delta", d.total_delta},
            {"error_free_rate_before", d.error_free_rate_before},
            {"error_free_rate_after", d.error_free_rate_after},
            {"error_free_rate_delta", d.error_free_rate_delta},
            {"avg_errors_delta", d.avg_errors_delta}};
}

// ---- tables ----

namespace corpus_detail {

inline std::string percent(std::size_t n, std::size_t of) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(1) << (of ? 100.0 * static_cast<double>(n) / static_cast<double>(of) : 0.0)
       << "%";
    return ss.str();
}

inline std::string fixed(double v, int digits = 2) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(digits) << v;
    return ss.str();
}

}  // namespace corpus_detail

/// Top-`k` codes of one stage (k == 0 lists all).
inline std::string format_histogram(const StageStats& s, std::size_t k = 10) {
    std::ostringstream out;
    out << "Top errors after " << to_string(s.stage) << " (" << s.total_errors << " total)\n";
    std::size_t shown = 0;
    for (const auto& h : s.histogram) {
        if (k && shown++ == k) break;
        out << "  " << std::setw(5) << h.code << "  " << std::setw(7) << h.count << "  "
            << corpus_detail::percent(h.count, s.total_errors) << "  " << h.label << "\n";
    }
    return out.str();
}

inline std::string format_report(const CorpusReport& r, std::size_t top_k = 10) {
    using corpus_detail::fixed;
    using corpus_detail::percent;
    std::ostringstream out;
    out << "snippets: " << r.snippet_count << "\n";
    out << std::left << std::setw(10) << "stage" << std::right << std::setw(12) << "error-free" << std::setw(9) << "rate"
        << std::setw(10) << "errors" << std::setw(10) << "avg" << std::setw(14) << "avg (erron.)" << "\n";
    for (const auto& s : r.stages) {
        out << std::left << std::setw(10) << to_string(s.stage) << std::right << std::setw(12) << s.error_free_count
            << std::setw(9) << percent(s.error_free_count, r.snippet_count) << std::setw(10) << s.total_errors
            << std::setw(10) << fixed(s.avg_errors_per_snippet) << std::setw(14)
            << fixed(s.avg_errors_per_erroneous_snippet) << "\n";
    }
    out << "emptied: " << r.emptied_count << " (" << percent(r.emptied_count, r.snippet_count) << ")\n";
    out << "lines commented: " << r.lines_commented << " of " << r.lines_total << " ("
        << percent(r.lines_commented, r.lines_total) << ")\n";
    out << "timed out: " << r.timed_out_count << ", aborted: " << r.aborted_count << "\n";
    if (!r.failed.empty()) {
        out << "failed inputs: " << r.failed.size() << "\n";
        for (const auto& f : r.failed) out << "  " << f.source << ": " << f.error << "\n";
    }
    if (!r.stages.empty()) {
        out << "\n" << format_histogram(r.stages.front(), top_k);
        out << "\n" << format_histogram(r.stages.back(), top_k);
    }
    return out.str();
}

inline std::string format_diff(const ReportDiff& d) {
    std::ostringstream out;
    out << "diff " << to_string(d.stage_before) << " -> " << to_string(d.stage_after) << " over " << d.snippet_count
        << " snippets\n";
    out << std::setw(6) << "code" << std::setw(9) << "before" << std::setw(9) << "after" << std::setw(9) << "delta"
        << "  label\n";
    for (const auto& c : d.codes)
        out << std::setw(6) << c.code << std::setw(9) << c.before << std::setw(9) << c.after << std::setw(9)
            << std::showpos << c.delta << std::noshowpos << "  " << c.label << "\n";
    out << std::setw(6) << "total" << std::setw(9) << d.total_before << std::setw(9) << d.total_after << std::setw(9)
        << std::showpos << d.total_delta << std::noshowpos << "\n";
    out << "error-free rate: " << corpus_detail::fixed(100 * d.error_free_rate_before, 1) << "% -> "
        << corpus_detail::fixed(100 * d.error_free_rate_after, 1) << "% ("
        << (d.error_free_rate_delta > 0 ? "+" : "") << corpus_detail::fixed(100 * d.error_free_rate_delta, 1)
        << " pts)\n";
    out << "avg errors per snippet delta: " << corpus_detail::fixed(d.avg_errors_delta) << "\n";
    return out.str();
}

}  // namespace ncc
