#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncc/deadline.hpp"
#include "ncc/source.hpp"

namespace ncc {

/// Any deterministic diagnostics provider. May throw Cancelled.
using CheckFunction = std::function<std::vector<Diagnostic>(std::string_view text)>;

struct DeletionBudget {
    int max_compiles = 500;  // includes the initial compile
    Deadline deadline;       // unlimited by default
};

struct DeletionResult {
    std::string text;
    std::vector<Diagnostic> diagnostics;
    int lines_commented = 0;
    std::vector<int> commented_lines;  // 1-based, in the order they were adopted
    bool emptied = false;
    int compile_count = 0;
    bool timed_out = false;
    bool budget_exhausted = false;
    bool out_of_range_stop = false;
};

/// True when the text has at least one non-blank line and every non-blank
/// line is a "//" comment.
inline bool all_lines_commented(std::string_view text) {
    bool any = false;
    for (const auto& l : build_line_index(text)) {
        std::string_view line = line_text(text, l);
        if (is_blank_line(line)) continue;
        if (!is_commented_line(line)) return false;
        any = true;
    }
    return any;
}

/// Greedy error-guided line deletion. Comments out the line of the current
/// error; keeps the edit when the error count does not grow (ties included)
/// and restarts from the first error, otherwise moves to the next error.
/// `initial`, when given, must equal check(text) and saves one compile.
inline DeletionResult delete_lines(std::string_view text, const CheckFunction& check, const DeletionBudget& budget = {},
                                   const std::vector<Diagnostic>* initial = nullptr) {
    DeletionResult r;
    r.text = std::string(text);
    try {
        if (initial) {
            r.diagnostics = *initial;
        } else {
            r.diagnostics = check(r.text);
            r.compile_count = 1;
        }
        std::set<std::vector<int>> visited{{}};
        std::vector<int> commented;  // sorted line set of the adopted text
        std::size_t error_no = 0;
        while (error_no < r.diagnostics.size()) {
            const Diagnostic& target = r.diagnostics[error_no];
            if (!target.span.in_range(r.text) || target.span.start >= r.text.size()) {
                r.out_of_range_stop = true;
                break;
            }
            auto lines = build_line_index(r.text);
            int line = line_of_offset(lines, r.text.size(), target.span.start).value_or(0);
            if (line < 1 || is_commented_line(line_text(r.text, lines[static_cast<std::size_t>(line - 1)]))) {
                ++error_no;
                continue;
            }
            std::vector<int> next_set = commented;
            next_set.insert(std::lower_bound(next_set.begin(), next_set.end(), line), line);
            if (visited.count(next_set)) {
                ++error_no;
                continue;
            }
            if (r.compile_count >= budget.max_compiles) {
                r.budget_exhausted = true;
                break;
            }
            budget.deadline.check();
            std::string candidate = comment_out_line(r.text, line);
            std::vector<Diagnostic> diags = check(candidate);
            ++r.compile_count;
            if (diags.size() <= r.diagnostics.size()) {
                r.text = std::move(candidate);
                r.diagnostics = std::move(diags);
                commented = std::move(next_set);
                visited.insert(commented);
                r.commented_lines.push_back(line);
                error_no = 0;
            } else {
                ++error_no;
            }
        }
    } catch (const Cancelled&) {
        r.timed_out = true;
    }
    r.lines_commented = static_cast<int>(r.commented_lines.size());
    r.emptied = all_lines_commented(r.text);
    return r;
}

}  // namespace ncc
