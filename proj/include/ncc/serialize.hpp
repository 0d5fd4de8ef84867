#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ncc/pipeline.hpp"

namespace ncc {

inline constexpr std::string_view kResultSchema = "ncc-result/1";

inline nlohmann::json to_json(const Span& s) { return {{"start", s.start}, {"length", s.length}}; }

inline nlohmann::json to_json(const Diagnostic& d) {
    return {{"code", d.code},          {"category", std::string(to_string(d.category))},
            {"message", d.message},    {"start", d.span.start},
            {"length", d.span.length}, {"line", d.line}};
}

inline Diagnostic diagnostic_from_json(const nlohmann::json& j) {
    Diagnostic d;
    d.code = j.at("code").get<int>();
    d.category = j.at("category").get<std::string>() == "syntax" ? DiagnosticCategory::syntax
                                                                  : DiagnosticCategory::semantic;
    d.message = j.at("message").get<std::string>();
    d.span = Span{j.at("start").get<std::size_t>(), j.at("length").get<std::size_t>()};
    d.line = j.at("line").get<int>();
    return d;
}

inline nlohmann::json to_json(const TextChange& c) {
    return {{"start", c.span.start}, {"length", c.span.length}, {"new_text", c.new_text}};
}

inline nlohmann::json to_json(const FixAction& a) {
    nlohmann::json changes = nlohmann::json::array();
    for (const auto& c : a.changes) changes.push_back(to_json(c));
    return {{"fix_id", a.fix_id}, {"description", a.description}, {"changes", changes}, {"target", to_json(a.target)}};
}

inline FixAction fix_action_from_json(const nlohmann::json& j) {
    FixAction a;
    a.fix_id = j.at("fix_id").get<std::string>();
    a.description = j.at("description").get<std::string>();
    for (const auto& c : j.at("changes"))
        a.changes.push_back(TextChange{Span{c.at("start").get<std::size_t>(), c.at("length").get<std::size_t>()},
                                       c.at("new_text").get<std::string>()});
    a.target = diagnostic_from_json(j.at("target"));
    return a;
}

template <class T, class F>
nlohmann::json array_of(const std::vector<T>& items, F&& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& i : items) out.push_back(f(i));
    return out;
}

inline nlohmann::json to_json(const Origin& o) {
    if (auto* m = std::get_if<MarkdownOrigin>(&o)) return {{"kind", "markdown-readme"}, {"package", m->package}};
    if (auto* f = std::get_if<FileOrigin>(&o)) return {{"kind", "file"}, {"path", f->path}};
    return {{"kind", "inline"}};
}

/// Accepts the object form written by to_json, or the strings
/// "inline", "file:<path>", "markdown:<package>".
inline Origin origin_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s.rfind("file:", 0) == 0) return FileOrigin{s.substr(5)};
        if (s.rfind("markdown:", 0) == 0) return MarkdownOrigin{s.substr(9)};
        return InlineOrigin{};
    }
    if (!j.is_object()) return InlineOrigin{};
    auto kind = j.value("kind", std::string("inline"));
    if (kind == "file") return FileOrigin{j.value("path", std::string())};
    if (kind == "markdown-readme" || kind == "markdown") return MarkdownOrigin{j.value("package", std::string())};
    return InlineOrigin{};
}

inline nlohmann::json to_json(const StageSnapshot& s) {
    return {{"stage", std::string(to_string(s.stage))},
            {"text", s.text},
            {"diagnostics", array_of(s.diagnostics, [](const Diagnostic& d) { return to_json(d); })},
            {"changes", array_of(s.changes, [](const FixAction& a) { return to_json(a); })},
            {"commented_lines", s.commented_lines},
            {"skipped", s.skipped},
            {"ms", s.ms}};
}

inline StageSnapshot snapshot_from_json(const nlohmann::json& j) {
    StageSnapshot s;
    auto stage = parse_stage(j.at("stage").get<std::string>());
    if (!stage) throw UsageError("unknown stage '" + j.at("stage").get<std::string>() + "'");
    s.stage = *stage;
    s.text = j.at("text").get<std::string>();
    for (const auto& d : j.at("diagnostics")) s.diagnostics.push_back(diagnostic_from_json(d));
    for (const auto& a : j.value("changes", nlohmann::json::array())) s.changes.push_back(fix_action_from_json(a));
    s.commented_lines = j.value("commented_lines", std::vector<int>{});
    s.skipped = j.value("skipped", false);
    s.ms = j.value("ms", 0.0);
    return s;
}

/// One line of the results file.
inline nlohmann::json to_json(const PipelineResult& r, const Origin& origin = InlineOrigin{}) {
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& s : r.skipped_fixes) {
        nlohmann::json e = {{"diagnostic", to_json(s.diagnostic)}, {"reason", s.reason}};
        if (s.action) e["action"] = to_json(*s.action);
        skipped.push_back(e);
    }
    return {{"schema", std::string(kResultSchema)},
            {"id", r.snippet_id},
            {"origin", to_json(origin)},
            {"stages", array_of(r.stages, [](const StageSnapshot& s) { return to_json(s); })},
            {"final_text", r.final_text},
            {"final_diagnostics", array_of(r.final_diagnostics, [](const Diagnostic& d) { return to_json(d); })},
            {"skipped_fixes", skipped},
            {"lines_commented", r.lines_commented},
            {"emptied", r.emptied},
            {"timed_out", r.timed_out},
            {"analyzer_abort", r.analyzer_abort},
            {"abort_reason", r.abort_reason}};
}

inline PipelineResult result_from_json(const nlohmann::json& j) {
    if (j.value("schema", std::string()) != kResultSchema)
        throw UsageError("result line lacks schema \"" + std::string(kResultSchema) + "\"");
    PipelineResult r;
    r.snippet_id = j.at("id").get<std::string>();
    for (const auto& s : j.at("stages")) r.stages.push_back(snapshot_from_json(s));
    r.final_text = j.at("final_text").get<std::string>();
    for (const auto& d : j.at("final_diagnostics")) r.final_diagnostics.push_back(diagnostic_from_json(d));
    for (const auto& s : j.value("skipped_fixes", nlohmann::json::array())) {
        SkippedFix k;
        k.diagnostic = diagnostic_from_json(s.at("diagnostic"));
        k.reason = s.value("reason", std::string());
        if (s.contains("action")) k.action = fix_action_from_json(s.at("action"));
        r.skipped_fixes.push_back(std::move(k));
    }
    r.lines_commented = j.value("lines_commented", 0);
    r.emptied = j.value("emptied", false);
    r.timed_out = j.value("timed_out", false);
    r.analyzer_abort = j.value("analyzer_abort", false);
    r.abort_reason = j.value("abort_reason", std::string());
    return r;
}

}  // namespace ncc
