#pragma once

#include <chrono>
#include <future>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "ncc/analyzer.hpp"
#include "ncc/deletion.hpp"
#include "ncc/fixes.hpp"

namespace ncc {

enum class Stage { initial, targeted, codefix, deletion };

inline constexpr Stage kStages[] = {Stage::initial, Stage::targeted, Stage::codefix, Stage::deletion};

inline std::string_view to_string(Stage s) {
    switch (s) {
        case Stage::initial: return "initial";
        case Stage::targeted: return "targeted";
        case Stage::codefix: return "codefix";
        case Stage::deletion: return "deletion";
    }
    return "?";
}

inline std::optional<Stage> parse_stage(std::string_view s) {
    for (Stage st : kStages)
        if (to_string(st) == s) return st;
    return std::nullopt;
}

struct StageToggles {
    bool targeted = true;
    bool codefix = true;
    bool deletion = true;
};

struct PipelineConfig {
    std::chrono::milliseconds timeout{60000};
    int max_compiles = 500;
    StageToggles stages;
    TargetedOptions targeted;
    int codefix_rounds = 8;
    const AmbientEnvironment* env = nullptr;       // default_environment() when null
    const CodefixRegistry* registry = nullptr;     // CodefixRegistry::standard() when null

    void validate() const {
        if (timeout.count() <= 0) throw UsageError("timeout must be positive");
        if (max_compiles <= 0) throw UsageError("compile budget must be positive");
        if (codefix_rounds <= 0) throw UsageError("codefix rounds must be positive");
    }
    [[nodiscard]] const AmbientEnvironment& environment() const { return env ? *env : default_environment(); }
    [[nodiscard]] const CodefixRegistry& codefixes() const {
        return registry ? *registry : CodefixRegistry::standard();
    }
};

struct StageSnapshot {
    Stage stage = Stage::initial;
    std::string text;
    std::vector<Diagnostic> diagnostics;
    std::vector<FixAction> changes;
    std::vector<int> commented_lines;  // deletion only
    bool skipped = false;              // stage did not run; text and diagnostics carried over
    double ms = 0;
};

struct PipelineResult {
    std::string snippet_id;
    std::vector<StageSnapshot> stages;  // always initial, targeted, codefix, deletion
    std::string final_text;
    std::vector<Diagnostic> final_diagnostics;
    std::vector<SkippedFix> skipped_fixes;
    int lines_commented = 0;
    bool emptied = false;
    bool timed_out = false;
    bool analyzer_abort = false;
    std::string abort_reason;

    [[nodiscard]] const StageSnapshot& stage(Stage s) const { return stages.at(static_cast<std::size_t>(s)); }
    [[nodiscard]] bool changed() const { return !stages.empty() && final_text != stages.front().text; }
};

namespace pipeline_detail {

using ms_clock = std::chrono::steady_clock;

inline double elapsed_ms(ms_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(ms_clock::now() - since).count();
}

/// Completed snapshots, readable from a watchdog while the run is in flight.
struct Progress {
    std::mutex mutex;
    std::vector<StageSnapshot> stages;

    void publish(const StageSnapshot& s) {
        std::lock_guard lock(mutex);
        stages.push_back(s);
    }
    std::vector<StageSnapshot> copy() {
        std::lock_guard lock(mutex);
        return stages;
    }
};

inline StageSnapshot carried(Stage stage, const StageSnapshot& prev) {
    StageSnapshot s;
    s.stage = stage;
    s.text = prev.text;
    s.diagnostics = prev.diagnostics;
    s.skipped = true;
    return s;
}

/// Fills the result's stage list up to deletion and derives the summary fields.
inline void finalize(PipelineResult& r) {
    if (r.stages.empty()) return;
    while (r.stages.size() < 4) r.stages.push_back(carried(kStages[r.stages.size()], r.stages.back()));
    r.final_text = r.stages.back().text;
    r.final_diagnostics = r.stages.back().diagnostics;
    r.lines_commented = static_cast<int>(r.stages.back().commented_lines.size());
    r.emptied = all_lines_commented(r.final_text) && r.lines_commented > 0;
}

inline PipelineResult run_with(const Snippet& snippet, const PipelineConfig& config, const Deadline& deadline,
                               Progress* progress) {
    config.validate();
    const AmbientEnvironment& env = config.environment();
    PipelineResult r;
    r.snippet_id = snippet.id();
    auto push = [&](StageSnapshot s) {
        if (progress) progress->publish(s);
        r.stages.push_back(std::move(s));
    };
    auto skip_rest = [&] {
        while (r.stages.size() < 4) push(carried(kStages[r.stages.size()], r.stages.back()));
    };

    try {
        auto t0 = ms_clock::now();
        Analysis initial = check(snippet.text(), env, deadline);
        StageSnapshot s0;
        s0.stage = Stage::initial;
        s0.text = snippet.text();
        s0.diagnostics = initial.diagnostics;
        s0.ms = elapsed_ms(t0);
        push(std::move(s0));

        if (initial.diagnostics.empty()) {
            skip_rest();
            finalize(r);
            return r;
        }

        Analysis current = std::move(initial);

        // targeted
        if (config.stages.targeted) {
            auto t = ms_clock::now();
            FixOutcome o = targeted_fixes(current, env, deadline, config.targeted);
            StageSnapshot s;
            s.stage = Stage::targeted;
            s.text = o.text_after;
            s.diagnostics = o.diagnostics_after;
            s.changes = std::move(o.applied);
            s.ms = elapsed_ms(t);
            r.skipped_fixes = std::move(o.skipped);
            if (!s.changes.empty()) current = check(s.text, env, deadline);
            push(std::move(s));
        } else {
            push(carried(Stage::targeted, r.stages.back()));
        }

        // codefix
        if (config.stages.codefix && !current.diagnostics.empty()) {
            auto t = ms_clock::now();
            FixOutcome o = apply_codefixes(current, env, deadline, config.codefixes(), config.codefix_rounds);
            StageSnapshot s;
            s.stage = Stage::codefix;
            s.text = o.text_after;
            s.diagnostics = o.diagnostics_after;
            s.changes = std::move(o.applied);
            s.ms = elapsed_ms(t);
            for (auto& k : o.skipped) r.skipped_fixes.push_back(std::move(k));
            push(std::move(s));
        } else {
            push(carried(Stage::codefix, r.stages.back()));
        }

        // deletion
        const StageSnapshot& before = r.stages.back();
        if (config.stages.deletion && !before.diagnostics.empty()) {
            auto t = ms_clock::now();
            DeletionBudget budget{config.max_compiles, deadline};
            CheckFunction fn = [&](std::string_view text) { return check(text, env, deadline).diagnostics; };
            DeletionResult d = delete_lines(before.text, fn, budget, &before.diagnostics);
            StageSnapshot s;
            s.stage = Stage::deletion;
            s.text = std::move(d.text);
            s.diagnostics = std::move(d.diagnostics);
            s.commented_lines = std::move(d.commented_lines);
            s.ms = elapsed_ms(t);
            if (d.timed_out) r.timed_out = true;
            push(std::move(s));
        } else {
            push(carried(Stage::deletion, r.stages.back()));
        }
    } catch (const Cancelled&) {
        r.timed_out = true;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        r.analyzer_abort = true;
        r.abort_reason = e.what();
    }
    if (r.stages.empty()) {
        // nothing completed, not even the first check
        StageSnapshot s;
        s.text = snippet.text();
        s.skipped = true;
        r.stages.push_back(std::move(s));
        if (!r.timed_out) r.analyzer_abort = true;
    }
    skip_rest();
    finalize(r);
    return r;
}

}  // namespace pipeline_detail

/// Runs every enabled stage in order under one wall-clock deadline.
inline PipelineResult run(const Snippet& snippet, const PipelineConfig& config, const Deadline& deadline) {
    return pipeline_detail::run_with(snippet, config, deadline, nullptr);
}

inline PipelineResult run(const Snippet& snippet, const PipelineConfig& config = {}) {
    config.validate();
    return run(snippet, config, Deadline(config.timeout));
}

/// True when a second run over the first run's output changes nothing.
inline bool run_twice_fixed_point(const Snippet& snippet, const PipelineConfig& config = {}) {
    PipelineResult first = run(snippet, config);
    PipelineResult second = run(snippet.with_text(first.final_text), config);
    return !second.changed();
}

/// run() on a worker thread under a watchdog. If the worker has not
/// finished `grace` after the deadline, it is cancelled and abandoned; the
/// result then holds the last completed snapshot with analyzer_abort and
/// timed_out set.
inline PipelineResult run_contained(const Snippet& snippet, const PipelineConfig& config = {},
                                    std::chrono::milliseconds grace = std::chrono::milliseconds(1000)) {
    config.validate();
    Deadline deadline(config.timeout);
    auto progress = std::make_shared<pipeline_detail::Progress>();
    std::promise<PipelineResult> promise;
    std::future<PipelineResult> future = promise.get_future();
    std::thread worker([snippet, config, deadline, progress, p = std::move(promise)]() mutable {
        try {
            p.set_value(pipeline_detail::run_with(snippet, config, deadline, progress.get()));
        } catch (...) {
            p.set_exception(std::current_exception());
        }
    });
    if (future.wait_for(config.timeout + grace) == std::future_status::ready) {
        worker.join();
        return future.get();
    }
    deadline.cancel();
    worker.detach();
    PipelineResult r;
    r.snippet_id = snippet.id();
    r.stages = progress->copy();
    if (r.stages.empty()) {
        StageSnapshot s;
        s.text = snippet.text();
        s.skipped = true;
        r.stages.push_back(std::move(s));
    }
    pipeline_detail::finalize(r);
    r.timed_out = true;
    r.analyzer_abort = true;
    r.abort_reason = "analysis did not stop within the grace period";
    return r;
}

}  // namespace ncc
