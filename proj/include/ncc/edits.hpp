#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "ncc/source.hpp"

namespace ncc {

/// Two edits conflict when their ranges share a byte, when both insert at
/// the same offset, or when an insertion lands strictly inside a replaced range.
inline bool changes_conflict(const Span& a, const Span& b) {
    if (a.length == 0 && b.length == 0) return a.start == b.start;
    if (a.length == 0) return b.start < a.start && a.start < b.end();
    if (b.length == 0) return a.start < b.start && b.start < a.end();
    return a.start < b.end() && b.start < a.end();
}

struct BatchResult {
    std::string text;
    std::vector<FixAction> applied;  // actions with at least one kept change
    std::vector<TextChange> kept;    // in application order (ascending start)
};

/// Applies pairwise non-conflicting changes; `changes` must be sorted by
/// start and must not conflict. Out-of-range spans raise UsageError.
inline std::string apply_disjoint(std::string_view text, const std::vector<TextChange>& changes) {
    std::string out;
    out.reserve(text.size());
    std::size_t cursor = 0;
    for (const auto& c : changes) {
        if (!c.span.in_range(text)) throw UsageError("text change out of range");
        if (c.span.start < cursor) throw UsageError("text changes overlap");
        out.append(text.substr(cursor, c.span.start - cursor));
        out += c.new_text;
        cursor = c.span.end();
    }
    out.append(text.substr(cursor));
    return out;
}

/// Flattens every action's changes, orders them by (start, length) with
/// earlier actions winning ties, keeps each change that does not conflict
/// with one already kept, and applies the survivors.
inline BatchResult apply_batch(std::string_view text, const std::vector<FixAction>& actions) {
    struct Item {
        std::size_t action;
        std::size_t order;
        const TextChange* change;
    };
    std::vector<Item> items;
    for (std::size_t a = 0; a < actions.size(); ++a) {
        for (const auto& c : actions[a].changes) {
            if (!c.span.in_range(text))
                throw UsageError("change span [" + std::to_string(c.span.start) + ", " +
                                 std::to_string(c.span.end()) + ") out of range for text of " +
                                 std::to_string(text.size()) + " bytes");
            items.push_back({a, items.size(), &c});
        }
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        if (x.change->span.start != y.change->span.start) return x.change->span.start < y.change->span.start;
        return x.change->span.length < y.change->span.length;
    });

    BatchResult result;
    std::vector<bool> action_used(actions.size(), false);
    std::vector<Span> kept_spans;
    for (const auto& it : items) {
        const Span& s = it.change->span;
        bool clash = std::any_of(kept_spans.rbegin(), kept_spans.rend(),
                                 [&](const Span& k) { return changes_conflict(k, s); });
        if (clash) continue;
        kept_spans.push_back(s);
        result.kept.push_back(*it.change);
        action_used[it.action] = true;
    }
    result.text = apply_disjoint(text, result.kept);
    for (std::size_t a = 0; a < actions.size(); ++a)
        if (action_used[a]) result.applied.push_back(actions[a]);
    return result;
}

}  // namespace ncc
