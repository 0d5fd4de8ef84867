#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncc/analyzer.hpp"
#include "ncc/edits.hpp"

namespace ncc {

/// A fix that was considered but not kept.
struct SkippedFix {
    Diagnostic diagnostic;
    std::optional<FixAction> action;  // absent when a rule declined before building one
    std::string reason;
};

struct FixOutcome {
    std::vector<FixAction> applied;
    std::vector<SkippedFix> skipped;
    std::string text_after;
    std::vector<Diagnostic> diagnostics_after;
};

struct TargetedOptions {
    std::string placeholder = "YOUR VALUE HERE";
    std::string require_keyword = "const";
    char quote = '"';
};

namespace fix_detail {

inline std::string wrap_in_quotes(std::string_view s, char q) {
    std::string out(1, q);
    out += s;
    out += q;
    return out;
}

inline std::string placeholder_declaration(std::string_view name, const TypeHint& hint, const TargetedOptions& o) {
    std::string decl = "var " + std::string(name) + " = ";
    std::string str = wrap_in_quotes(o.placeholder, o.quote);
    switch (hint.kind) {
        case HintKind::number: return decl + "0;";
        case HintKind::string_array: return decl + "[" + str + "];";
        case HintKind::number_array: return decl + "[0];";
        case HintKind::complex:
        case HintKind::callable:
        case HintKind::constructable:
            return decl + str + "; // Suggested Type: " + hint.description;
        case HintKind::string:
        case HintKind::unknown:
            break;
    }
    return decl + str + ";";
}

/// Offset just past a leading "#!" line, else 0.
inline std::size_t after_shebang(std::string_view text) {
    if (text.substr(0, 2) != "#!") return 0;
    auto nl = text.find('\n');
    return nl == std::string_view::npos ? text.size() : nl + 1;
}

inline bool is_member_base(const SyntaxTree& tree, NodeId id) {
    NodeId p = tree.node(id).parent;
    return p != kNoNode && tree.node(p).kind == NodeKind::member_expression && tree.node(p).child(0) == id;
}

inline bool is_callee(const SyntaxTree& tree, NodeId id) {
    NodeId p = tree.node(id).parent;
    return p != kNoNode && tree.node(p).kind == NodeKind::call_expression && tree.node(p).child(0) == id;
}

inline std::vector<NodeId> unresolved_uses(const Analysis& a, std::string_view name) {
    std::vector<NodeId> out;
    for (const auto& r : a.scopes.references)
        if (r.unresolved() && a.tree.node(r.node).text == name) out.push_back(r.node);
    std::sort(out.begin(), out.end(),
              [&](NodeId x, NodeId y) { return a.tree.node(x).span.start < a.tree.node(y).span.start; });
    return out;
}

inline TextChange require_change(const Analysis& a, std::string_view module, const TargetedOptions& o) {
    std::string_view text = a.text();
    std::size_t at = after_shebang(text);
    std::string line = o.require_keyword + " " + std::string(module) + " = require(" + wrap_in_quotes(module, o.quote) + ");";
    if (at == text.size() && at > 0 && text.back() != '\n') return {Span{at, 0}, "\n" + line};
    return {Span{at, 0}, line + "\n"};
}

inline TextChange placeholder_change(const Analysis& a, NodeId first_use, const std::string& decl) {
    std::string_view text = a.text();
    NodeId stmt = a.tree.top_level_statement(first_use);
    std::size_t pos = stmt == kNoNode ? a.tree.node(first_use).span.start : a.tree.node(stmt).span.start;
    std::size_t line_start = pos;
    while (line_start > 0 && text[line_start - 1] != '\n') --line_start;
    std::size_t indent_end = line_start;
    while (indent_end < text.size() && (text[indent_end] == ' ' || text[indent_end] == '\t')) ++indent_end;
    std::string indent(text.substr(line_start, indent_end - line_start));
    if (indent_end >= pos) return {Span{line_start, 0}, indent + decl + "\n"};
    return {Span{pos, 0}, decl + "\n" + indent};
}

inline std::string identifier_of(const Diagnostic& d, std::string_view text) {
    return std::string(text.substr(d.span.start, d.span.length));
}

}  // namespace fix_detail

/// Repairs undeclared names: a require for builtin modules used as objects,
/// otherwise a placeholder declaration. Every candidate is validated by a
/// fresh check and kept only if the diagnostic total does not grow. Passes
/// repeat until one keeps nothing, so the output is a fixed point.
inline FixOutcome targeted_fixes(const Analysis& input, const AmbientEnvironment& env = default_environment(),
                                 const Deadline& deadline = {}, const TargetedOptions& options = {}) {
    using namespace fix_detail;
    FixOutcome out;
    Analysis current = check(input.text(), env, deadline);

    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<SkippedFix> pass_skipped;
        std::set<std::string> done;  // names handled this pass

        for (std::size_t i = 0; i < current.diagnostics.size(); ++i) {
            const Diagnostic d = current.diagnostics[i];
            if (d.code != codes::cannot_find_name) continue;
            std::string name = identifier_of(d, current.text());
            if (done.count(name)) continue;

            bool noisy_line = std::any_of(current.diagnostics.begin(), current.diagnostics.end(), [&](const Diagnostic& o) {
                return o.line == d.line &&
                       (o.code == codes::expression_expected || o.code == codes::unexpected_keyword_or_identifier);
            });
            if (noisy_line) {
                pass_skipped.push_back({d, std::nullopt, "line has other syntax errors"});
                continue;
            }
            NodeId use = current.reference_node_at(d.span);
            if (use == kNoNode) continue;
            auto uses = unresolved_uses(current, name);

            FixAction action;
            action.target = d;
            bool member_base = std::any_of(uses.begin(), uses.end(),
                                           [&](NodeId u) { return is_member_base(current.tree, u); });
            if (member_base && env.module(name) && name.find(':') == std::string::npos) {
                action.fix_id = "insertRequire";
                action.description = "Add require(\"" + name + "\")";
                action.changes.push_back(require_change(current, name, options));
            } else if (is_callee(current.tree, use)) {
                pass_skipped.push_back({d, std::nullopt, "undefined function"});
                continue;
            } else {
                TypeHint hint = expected_type_at(current, uses.front());
                if (hint.kind == HintKind::unknown) hint = expected_type_at(current, use);
                action.fix_id = "declarePlaceholder";
                action.description = "Declare placeholder '" + name + "'";
                action.changes.push_back(placeholder_change(current, uses.front(), placeholder_declaration(name, hint, options)));
            }
            done.insert(name);

            std::string candidate = apply_batch(current.text(), {action}).text;
            Analysis next = check(candidate, env, deadline);
            if (next.count() <= current.count()) {
                out.applied.push_back(std::move(action));
                current = std::move(next);
                progress = true;
                break;  // offsets moved; rescan the fresh diagnostics
            }
            pass_skipped.push_back({d, std::move(action),
                                    "diagnostics increased from " + std::to_string(current.count()) + " to " +
                                        std::to_string(next.count())});
        }
        if (!progress) out.skipped = std::move(pass_skipped);
    }
    out.text_after = current.text();
    out.diagnostics_after = current.diagnostics;
    return out;
}

/// Builds codefix actions for one diagnostic.
using CodefixFactory = std::function<std::vector<FixAction>(const Diagnostic&, const Analysis&)>;

/// Diagnostic code -> codefix factories. Extend with add().
class CodefixRegistry {
public:
    void add(int code, CodefixFactory factory) { factories_[code].push_back(std::move(factory)); }

    [[nodiscard]] std::vector<FixAction> fixes_for(const Diagnostic& d, const Analysis& a) const {
        std::vector<FixAction> out;
        auto it = factories_.find(d.code);
        if (it == factories_.end()) return out;
        for (const auto& f : it->second)
            for (auto& action : f(d, a))
                if (!action.changes.empty()) out.push_back(std::move(action));
        return out;
    }

    [[nodiscard]] std::vector<int> codes() const {
        std::vector<int> out;
        for (const auto& [code, f] : factories_) out.push_back(code);
        return out;
    }

    /// Registry shipped with the engine: spelling and missing closers.
    static const CodefixRegistry& standard() {
        static const CodefixRegistry registry = [] {
            CodefixRegistry r;
            r.add(codes::cannot_find_name_did_you_mean, [](const Diagnostic& d, const Analysis& a) {
                std::vector<FixAction> out;
                NodeId use = a.reference_node_at(d.span);
                if (use == kNoNode) return out;
                const Reference* ref = a.scopes.reference_at(use);
                auto s = name_suggestion(a.tree.node(use).text, a.scopes, ref->scope, *a.env);
                if (!s) return out;
                out.push_back(FixAction{"fixSpelling", "Change spelling to '" + *s + "'", {TextChange{d.span, *s}}, d});
                return out;
            });
            r.add(codes::token_expected, [](const Diagnostic& d, const Analysis& a) {
                std::vector<FixAction> out;
                for (const auto& c : a.tree.missing_closers()) {
                    if (c.diagnostic_start != d.span.start) continue;
                    out.push_back(FixAction{"insertExpectedToken", "Insert '" + c.text + "'",
                                            {TextChange{Span{c.insert_at, 0}, c.text}}, d});
                    break;
                }
                return out;
            });
            return r;
        }();
        return registry;
    }

private:
    std::map<int, std::vector<CodefixFactory>> factories_;
};

inline std::vector<FixAction> codefixes_for(const Diagnostic& d, const Analysis& a,
                                            const CodefixRegistry& registry = CodefixRegistry::standard()) {
    return registry.fixes_for(d, a);
}

/// Collects codefixes for every diagnostic, applies them as one batch and
/// re-checks; the whole batch is reverted if the total grew. Rounds repeat
/// while a batch is kept, up to `max_rounds`.
inline FixOutcome apply_codefixes(const Analysis& input, const AmbientEnvironment& env = default_environment(),
                                  const Deadline& deadline = {},
                                  const CodefixRegistry& registry = CodefixRegistry::standard(), int max_rounds = 8) {
    FixOutcome out;
    Analysis current = check(input.text(), env, deadline);
    for (int round = 0; round < max_rounds; ++round) {
        std::vector<FixAction> actions;
        for (const auto& d : current.diagnostics)
            for (auto& a : codefixes_for(d, current, registry)) actions.push_back(std::move(a));
        if (actions.empty()) break;
        BatchResult batch = apply_batch(current.text(), actions);
        if (batch.applied.empty() || batch.text == current.text()) break;
        Analysis next = check(batch.text, env, deadline);
        if (next.count() > current.count()) {
            std::string reason = "batch increased diagnostics from " + std::to_string(current.count()) + " to " +
                                 std::to_string(next.count());
            for (auto& a : batch.applied) out.skipped.push_back({a.target, a, reason});
            break;
        }
        for (auto& a : batch.applied) out.applied.push_back(std::move(a));
        current = std::move(next);
    }
    out.text_after = current.text();
    out.diagnostics_after = current.diagnostics;
    return out;
}

}  // namespace ncc
