#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncc/ambient.hpp"
#include "ncc/deadline.hpp"
#include "ncc/diagnostic_codes.hpp"
#include "ncc/parser.hpp"
#include "ncc/source.hpp"
#include "ncc/syntax_tree.hpp"

namespace ncc {

/// Optimal string alignment distance (Damerau-Levenshtein restricted to
/// adjacent transpositions without further edits of the moved pair).
inline std::size_t edit_distance(std::string_view a, std::string_view b) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1));
    for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
    for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
                d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
        }
    }
    return d[n][m];
}

enum class ScopeKind { global, function, block };
enum class DeclKind { var, let, const_, function, parameter, class_, catch_parameter, import, implicit };

/// Static type the engine is willing to vouch for. Anything else is unknown.
struct ValueType {
    enum class Kind { unknown, string, number, string_array, number_array, any_array, module, object, callable };
    Kind kind = Kind::unknown;
    const BuiltinModule* module = nullptr;  // Kind::module
    const AmbientValue* value = nullptr;    // Kind::object, Kind::callable

    [[nodiscard]] bool known() const { return kind != Kind::unknown; }

    /// Printable name as it appears in diagnostics.
    [[nodiscard]] std::string name() const {
        switch (kind) {
            case Kind::string: return "string";
            case Kind::number: return "number";
            case Kind::string_array: return "string[]";
            case Kind::number_array: return "number[]";
            case Kind::any_array: return "any[]";
            case Kind::module: return module->type_name();
            case Kind::object: return value->type_name;
            case Kind::callable: return "Function";
            case Kind::unknown: break;
        }
        return "any";
    }

    /// Name of the apparent (wrapper) type used in call/construct errors.
    [[nodiscard]] std::string apparent_name() const {
        if (kind == Kind::string) return "String";
        if (kind == Kind::number) return "Number";
        return name();
    }

    [[nodiscard]] bool primitive() const {
        return kind == Kind::string || kind == Kind::number || kind == Kind::string_array ||
               kind == Kind::number_array || kind == Kind::any_array;
    }
};

struct Symbol {
    std::string name;
    DeclKind kind = DeclKind::var;
    Span span;              // the binding identifier; empty for implicit symbols
    NodeId node = kNoNode;  // binding identifier node
    int scope = 0;
    NodeId declarator = kNoNode;  // variable_declarator when declared by one
    bool reassigned = false;
    ValueType type;
};

struct Scope {
    ScopeKind kind = ScopeKind::global;
    int parent = -1;
    NodeId node = kNoNode;
    std::map<std::string, std::vector<int>, std::less<>> names;  // name -> symbols, declaration order
};

enum class IdentifierClass { declaration, local_reference, ambient_reference, unresolved, non_reference, unvisited };

struct Reference {
    NodeId node = kNoNode;
    int scope = 0;
    int symbol = -1;  // -1 for ambient and unresolved
    bool ambient = false;
    bool write = false;

    [[nodiscard]] bool unresolved() const { return symbol < 0 && !ambient; }
};

/// Scopes, declared symbols, and every identifier occurrence classified.
class ScopeTable {
public:
    std::vector<Scope> scopes;
    std::vector<Symbol> symbols;
    std::vector<Reference> references;
    std::vector<IdentifierClass> classes;  // indexed by NodeId; meaningful for identifiers
    std::vector<int> reference_of;         // NodeId -> index into references, or -1
    std::vector<int> scope_of_node;        // NodeId -> scope the node opens, or -1

    /// Innermost symbol named `name` visible from `scope`, or -1.
    [[nodiscard]] int resolve(std::string_view name, int scope) const {
        for (int s = scope; s >= 0; s = scopes[static_cast<std::size_t>(s)].parent) {
            const auto& names = scopes[static_cast<std::size_t>(s)].names;
            auto it = names.find(name);
            if (it != names.end() && !it->second.empty()) return it->second.front();
        }
        return -1;
    }

    /// Every distinct name declared in `scope` or an enclosing scope.
    [[nodiscard]] std::set<std::string> visible_names(int scope) const {
        std::set<std::string> out;
        for (int s = scope; s >= 0; s = scopes[static_cast<std::size_t>(s)].parent)
            for (const auto& [name, ids] : scopes[static_cast<std::size_t>(s)].names) out.insert(name);
        return out;
    }

    [[nodiscard]] const Reference* reference_at(NodeId node) const {
        if (node >= reference_of.size() || reference_of[node] < 0) return nullptr;
        return &references[static_cast<std::size_t>(reference_of[node])];
    }
};

/// Result of one compilation-equivalent pass over a text.
struct Analysis {
    SyntaxTree tree;
    ScopeTable scopes;
    std::vector<Diagnostic> diagnostics;  // syntax and semantic, sorted by start then code
    const AmbientEnvironment* env = nullptr;
    LineIndex lines;

    [[nodiscard]] const std::string& text() const { return tree.text(); }
    [[nodiscard]] std::size_t count() const { return diagnostics.size(); }

    /// The identifier reference a name diagnostic points at, or kNoNode.
    [[nodiscard]] NodeId reference_node_at(Span span) const {
        for (const auto& r : scopes.references)
            if (tree.node(r.node).span == span) return r.node;
        return kNoNode;
    }
};

/// Unique name within edit distance 1 of `name` among the names visible
/// from `scope` and the ambient globals. Names shorter than 3 characters
/// are never offered.
inline std::optional<std::string> name_suggestion(std::string_view name, const ScopeTable& scopes, int scope,
                                                  const AmbientEnvironment& env) {
    std::set<std::string> candidates = scopes.visible_names(scope);
    for (auto& g : env.global_names()) candidates.insert(g);
    std::optional<std::string> found;
    for (const auto& c : candidates) {
        if (c == name || c.size() < 3) continue;
        std::size_t diff = c.size() > name.size() ? c.size() - name.size() : name.size() - c.size();
        if (diff > 1) continue;
        if (edit_distance(name, c) <= 1) {
            if (found) return std::nullopt;
            found = c;
        }
    }
    return found;
}

namespace analyze_detail {

inline constexpr int kMaxWalkDepth = 3000;

inline ValueType value_type(const AmbientValue& v) {
    ValueType t;
    switch (v.kind) {
        case AmbientValue::Kind::object:
            t.kind = ValueType::Kind::object;
            t.value = &v;
            break;
        case AmbientValue::Kind::function:
        case AmbientValue::Kind::constructor:
            t.kind = ValueType::Kind::callable;
            t.value = &v;
            break;
        case AmbientValue::Kind::value:
            if (v.type_name == "string") t.kind = ValueType::Kind::string;
            else if (v.type_name == "number") t.kind = ValueType::Kind::number;
            else if (v.type_name == "string[]") t.kind = ValueType::Kind::string_array;
            break;
    }
    return t;
}

inline ValueType member_type(const ValueType& object, std::string_view name) {
    const std::map<std::string, AmbientValue, std::less<>>* members = nullptr;
    if (object.kind == ValueType::Kind::module) members = &object.module->members;
    else if (object.kind == ValueType::Kind::object) members = &object.value->members;
    else if (name == "length" && object.primitive()) return {ValueType::Kind::number};
    if (!members) return {};
    auto it = members->find(name);
    return it == members->end() ? ValueType{} : value_type(it->second);
}

/// `require("<builtin>")` with an unshadowed require, else nullptr.
inline const BuiltinModule* required_module(const SyntaxTree& tree, const ScopeTable& table,
                                            const AmbientEnvironment& env, NodeId call) {
    const Node& c = tree.node(call);
    if (c.kind != NodeKind::call_expression || c.children.size() != 2) return nullptr;
    NodeId callee = c.child(0);
    if (callee == kNoNode || tree.node(callee).kind != NodeKind::identifier || tree.node(callee).text != "require")
        return nullptr;
    const Reference* r = table.reference_at(callee);
    if (!r || !r->ambient) return nullptr;
    NodeId arg = c.child(1);
    if (arg == kNoNode || tree.node(arg).kind != NodeKind::literal) return nullptr;
    std::string_view lit = tree.node(arg).text;
    if (lit.size() < 2 || (lit.front() != '"' && lit.front() != '\'')) return nullptr;
    return env.module(lit.substr(1, lit.size() - 2));
}

inline ValueType evaluate_type(const SyntaxTree& tree, const ScopeTable& table, const AmbientEnvironment& env,
                               NodeId id) {
    if (id == kNoNode) return {};
    const Node& n = tree.node(id);
    switch (n.kind) {
        case NodeKind::identifier: {
            const Reference* r = table.reference_at(id);
            if (!r) return {};
            if (r->symbol >= 0) return table.symbols[static_cast<std::size_t>(r->symbol)].type;
            if (r->ambient) return value_type(*env.global(n.text));
            return {};
        }
        case NodeKind::literal: {
            if (n.text.empty()) return {};
            char c = n.text.front();
            if (c == '"' || c == '\'') return {ValueType::Kind::string};
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return {ValueType::Kind::number};
            return {};
        }
        case NodeKind::template_literal:
            return {ValueType::Kind::string};
        case NodeKind::parenthesized:
            return evaluate_type(tree, table, env, n.child(0));
        case NodeKind::call_expression:
            if (const BuiltinModule* m = required_module(tree, table, env, id)) {
                ValueType t{ValueType::Kind::module};
                t.module = m;
                return t;
            }
            return {};
        case NodeKind::member_expression: {
            NodeId prop = n.child(1);
            if (prop == kNoNode || tree.node(prop).kind != NodeKind::identifier) return {};
            return member_type(evaluate_type(tree, table, env, n.child(0)), tree.node(prop).text);
        }
        default:
            return {};
    }
}

class Binder {
public:
    Binder(const SyntaxTree& tree, const AmbientEnvironment& env, const Deadline& deadline)
        : tree_(tree), env_(env), deadline_(deadline) {
        table_.classes.assign(tree.size(), IdentifierClass::unvisited);
        table_.reference_of.assign(tree.size(), -1);
        table_.scope_of_node.assign(tree.size(), -1);
        declaration_.assign(tree.size(), false);
    }

    ScopeTable run(std::vector<Diagnostic>& diags) {
        if (tree_.root() == kNoNode) return std::move(table_);
        table_.scopes.push_back(Scope{ScopeKind::global, -1, tree_.root(), {}});
        table_.scope_of_node[tree_.root()] = 0;
        for (NodeId c : node(tree_.root()).children) declare_walk(c, 0, 0);
        for (NodeId c : node(tree_.root()).children) resolve_walk(c, 0, 0);
        infer_types();
        semantic_checks(diags);
        return std::move(table_);
    }

private:
    const SyntaxTree& tree_;
    const AmbientEnvironment& env_;
    const Deadline& deadline_;
    ScopeTable table_;
    std::vector<bool> declaration_;
    std::vector<bool> function_async_;  // stack of enclosing non-arrow/arrow functions
    std::vector<Diagnostic> pending_;
    std::vector<NodeId> member_nodes_, call_nodes_;

    [[nodiscard]] const Node& node(NodeId id) const { return tree_.node(id); }

    static bool is_function(NodeKind k) {
        return k == NodeKind::function_declaration || k == NodeKind::function_expression ||
               k == NodeKind::arrow_function;
    }

    int new_scope(ScopeKind kind, int parent, NodeId owner) {
        table_.scopes.push_back(Scope{kind, parent, owner, {}});
        int id = static_cast<int>(table_.scopes.size() - 1);
        table_.scope_of_node[owner] = id;
        return id;
    }

    [[nodiscard]] int function_scope_of(int scope) const {
        while (scope > 0 && table_.scopes[static_cast<std::size_t>(scope)].kind == ScopeKind::block)
            scope = table_.scopes[static_cast<std::size_t>(scope)].parent;
        return scope;
    }

    int declare(std::string_view name, DeclKind kind, NodeId id, int scope, NodeId declarator = kNoNode) {
        Symbol s;
        s.name = std::string(name);
        s.kind = kind;
        s.node = id;
        s.span = id == kNoNode ? Span{} : node(id).span;
        s.scope = scope;
        s.declarator = declarator;
        table_.symbols.push_back(std::move(s));
        int sid = static_cast<int>(table_.symbols.size() - 1);
        table_.scopes[static_cast<std::size_t>(scope)].names[std::string(name)].push_back(sid);
        if (id != kNoNode) declaration_[id] = true;
        return sid;
    }

    void declare_pattern(NodeId id, int scope, DeclKind kind, NodeId declarator) {
        if (id == kNoNode) return;
        const Node& n = node(id);
        switch (n.kind) {
            case NodeKind::identifier:
                declare(n.text, kind, id, scope, declarator);
                break;
            case NodeKind::object_pattern:
                for (NodeId p : n.children) {
                    if (p == kNoNode) continue;
                    const Node& prop = node(p);
                    if (prop.kind == NodeKind::rest_element) declare_pattern(prop.child(0), scope, kind, declarator);
                    else if (prop.kind == NodeKind::property && prop.has(node_flags::shorthand))
                        declare_pattern(prop.child(0), scope, kind, declarator);
                    else if (prop.kind == NodeKind::property)
                        declare_pattern(prop.child(1), scope, kind, declarator);
                }
                break;
            case NodeKind::array_pattern:
                for (NodeId e : n.children) declare_pattern(e, scope, kind, declarator);
                break;
            case NodeKind::assignment_pattern:
            case NodeKind::rest_element:
                declare_pattern(n.child(0), scope, kind, declarator);
                break;
            default:
                break;
        }
    }

    // ---- pass 1: scopes and declarations ---------------------------------

    void declare_children(NodeId id, int scope, int depth) {
        for (NodeId c : node(id).children) declare_walk(c, scope, depth + 1);
    }

    void declare_function(NodeId id, int scope, int depth) {
        const Node& n = node(id);
        int fscope = new_scope(ScopeKind::function, scope, id);
        std::size_t first_param = 0;
        if (n.kind != NodeKind::arrow_function) {
            first_param = 1;
            NodeId name = n.child(0);
            if (name != kNoNode) {
                if (n.kind == NodeKind::function_declaration) {
                    declare(node(name).text, DeclKind::function, name, scope);
                    int hoist = function_scope_of(scope);
                    if (hoist != scope) declare(node(name).text, DeclKind::function, kNoNode, hoist);
                } else {
                    declare(node(name).text, DeclKind::function, name, fscope);
                }
            }
            declare("arguments", DeclKind::implicit, kNoNode, fscope);
        }
        if (n.children.empty()) return;
        std::size_t body_index = n.children.size() - 1;
        for (std::size_t i = first_param; i < body_index; ++i) {
            declare_pattern(n.children[i], fscope, DeclKind::parameter, kNoNode);
            declare_walk(n.children[i], fscope, depth + 1);
        }
        NodeId body = n.children[body_index];
        if (body == kNoNode) return;
        if (node(body).kind == NodeKind::block) {
            table_.scope_of_node[body] = fscope;
            declare_children(body, fscope, depth + 1);
        } else {
            declare_walk(body, fscope, depth + 1);
        }
    }

    void declare_walk(NodeId id, int scope, int depth) {
        if (id == kNoNode || depth > kMaxWalkDepth) return;
        deadline_.poll();
        const Node& n = node(id);
        switch (n.kind) {
            case NodeKind::function_declaration:
            case NodeKind::function_expression:
            case NodeKind::arrow_function:
                declare_function(id, scope, depth);
                return;
            case NodeKind::class_declaration:
                if (n.child(0) != kNoNode) declare(node(n.child(0)).text, DeclKind::class_, n.child(0), scope);
                declare_walk(n.child(1), scope, depth + 1);
                return;
            case NodeKind::class_expression:
                declare_walk(n.child(1), scope, depth + 1);
                return;
            case NodeKind::variable_declaration: {
                DeclKind kind = n.text == "var" ? DeclKind::var : n.text == "let" ? DeclKind::let : DeclKind::const_;
                int target = kind == DeclKind::var ? function_scope_of(scope) : scope;
                for (NodeId d : n.children) {
                    if (d == kNoNode) continue;
                    declare_pattern(node(d).child(0), target, kind, d);
                    declare_children(d, scope, depth + 1);
                }
                return;
            }
            case NodeKind::catch_clause: {
                int cscope = new_scope(ScopeKind::block, scope, id);
                declare_pattern(n.child(0), cscope, DeclKind::catch_parameter, kNoNode);
                declare_children(id, cscope, depth);
                return;
            }
            case NodeKind::block:
            case NodeKind::for_statement:
            case NodeKind::for_in_statement:
            case NodeKind::switch_statement: {
                int bscope = new_scope(ScopeKind::block, scope, id);
                declare_children(id, bscope, depth);
                return;
            }
            case NodeKind::import_declaration:
                for (NodeId c : n.children)
                    if (c != kNoNode) declare(node(c).text, DeclKind::import, c, 0);
                return;
            default:
                declare_children(id, scope, depth);
        }
    }

    // ---- pass 2: references ----------------------------------------------

    void classify(NodeId id, IdentifierClass c) { table_.classes[id] = c; }

    void reference(NodeId id, int scope, bool write) {
        const Node& n = node(id);
        if (declaration_[id] && !write) {
            classify(id, IdentifierClass::declaration);
            return;
        }
        Reference r;
        r.node = id;
        r.scope = scope;
        r.write = write;
        r.symbol = table_.resolve(n.text, scope);
        if (r.symbol < 0 && env_.is_global(n.text)) r.ambient = true;
        if (r.symbol >= 0 && write) table_.symbols[static_cast<std::size_t>(r.symbol)].reassigned = true;
        classify(id, r.symbol >= 0 ? IdentifierClass::local_reference
                     : r.ambient   ? IdentifierClass::ambient_reference
                                   : IdentifierClass::unresolved);
        table_.reference_of[id] = static_cast<int>(table_.references.size());
        table_.references.push_back(r);
    }

    int scope_for(NodeId id, int scope) const {
        int s = table_.scope_of_node[id];
        return s >= 0 ? s : scope;
    }

    void resolve_children(NodeId id, int scope, int depth) {
        for (NodeId c : node(id).children) resolve_walk(c, scope, depth + 1);
    }

    // Identifiers inside a pattern: bindings in declarations, writes in assignments.
    void resolve_pattern(NodeId id, int scope, int depth) {
        if (id == kNoNode || depth > kMaxWalkDepth) return;
        const Node& n = node(id);
        switch (n.kind) {
            case NodeKind::identifier:
                if (declaration_[id]) classify(id, IdentifierClass::declaration);
                else reference(id, scope, true);
                return;
            case NodeKind::object_pattern:
                for (NodeId p : n.children) {
                    if (p == kNoNode) continue;
                    const Node& prop = node(p);
                    if (prop.kind != NodeKind::property) {
                        resolve_pattern(p, scope, depth + 1);
                        continue;
                    }
                    if (prop.has(node_flags::shorthand)) {
                        resolve_pattern(prop.child(0), scope, depth + 1);
                        if (prop.has(node_flags::has_default)) resolve_walk(prop.child(1), scope, depth + 1);
                        continue;
                    }
                    if (prop.has(node_flags::computed)) resolve_walk(prop.child(0), scope, depth + 1);
                    else if (prop.child(0) != kNoNode && node(prop.child(0)).kind == NodeKind::identifier)
                        classify(prop.child(0), IdentifierClass::non_reference);
                    resolve_pattern(prop.child(1), scope, depth + 1);
                }
                return;
            case NodeKind::array_pattern:
                for (NodeId e : n.children) resolve_pattern(e, scope, depth + 1);
                return;
            case NodeKind::assignment_pattern:
                resolve_pattern(n.child(0), scope, depth + 1);
                resolve_walk(n.child(1), scope, depth + 1);
                return;
            case NodeKind::rest_element:
                resolve_pattern(n.child(0), scope, depth + 1);
                return;
            default:
                resolve_walk(id, scope, depth + 1);
        }
    }

    void keyword_diagnostic(int code, NodeId id, std::size_t keyword_length) {
        pending_.push_back(make_diagnostic(code, Span{node(id).span.start, keyword_length}));
    }

    void resolve_function(NodeId id, int scope, int depth) {
        const Node& n = node(id);
        int fscope = scope_for(id, scope);
        std::size_t first_param = 0;
        if (n.kind != NodeKind::arrow_function) {
            first_param = 1;
            if (n.child(0) != kNoNode) classify(n.child(0), IdentifierClass::declaration);
        }
        function_async_.push_back(n.has(node_flags::async));
        if (!n.children.empty()) {
            std::size_t body_index = n.children.size() - 1;
            for (std::size_t i = first_param; i < body_index; ++i) resolve_pattern(n.children[i], fscope, depth + 1);
            NodeId body = n.children[body_index];
            if (body != kNoNode && node(body).kind == NodeKind::block) resolve_children(body, fscope, depth + 1);
            else resolve_walk(body, fscope, depth + 1);
        }
        function_async_.pop_back();
    }

    void resolve_walk(NodeId id, int scope, int depth) {
        if (id == kNoNode || depth > kMaxWalkDepth) return;
        deadline_.poll();
        const Node& n = node(id);
        switch (n.kind) {
            case NodeKind::identifier:
                reference(id, scope, false);
                return;
            case NodeKind::function_declaration:
            case NodeKind::function_expression:
            case NodeKind::arrow_function:
                resolve_function(id, scope, depth);
                return;
            case NodeKind::class_declaration:
            case NodeKind::class_expression:
                if (n.child(0) != kNoNode) classify(n.child(0), IdentifierClass::declaration);
                resolve_walk(n.child(1), scope, depth + 1);
                return;
            case NodeKind::member_expression:
                resolve_walk(n.child(0), scope, depth + 1);
                if (n.child(1) != kNoNode && node(n.child(1)).kind == NodeKind::identifier)
                    classify(n.child(1), IdentifierClass::non_reference);
                member_nodes_.push_back(id);
                return;
            case NodeKind::property:
                if (n.has(node_flags::computed)) {
                    resolve_walk(n.child(0), scope, depth + 1);
                } else if (n.has(node_flags::shorthand)) {
                    reference(n.child(0), scope, false);
                } else if (n.child(0) != kNoNode && node(n.child(0)).kind == NodeKind::identifier) {
                    classify(n.child(0), IdentifierClass::non_reference);
                }
                for (std::size_t i = 1; i < n.children.size(); ++i) resolve_walk(n.children[i], scope, depth + 1);
                return;
            case NodeKind::labeled_statement:
                classify(n.child(0), IdentifierClass::non_reference);
                resolve_walk(n.child(1), scope, depth + 1);
                return;
            case NodeKind::break_statement:
            case NodeKind::continue_statement:
                if (n.child(0) != kNoNode) classify(n.child(0), IdentifierClass::non_reference);
                return;
            case NodeKind::variable_declarator:
                resolve_pattern(n.child(0), scope, depth + 1);
                resolve_walk(n.child(1), scope, depth + 1);
                return;
            case NodeKind::catch_clause: {
                int cscope = scope_for(id, scope);
                resolve_pattern(n.child(0), cscope, depth + 1);
                resolve_walk(n.child(1), cscope, depth + 1);
                return;
            }
            case NodeKind::assignment_expression:
            case NodeKind::assignment_pattern:
                resolve_pattern(n.child(0), scope, depth + 1);
                resolve_walk(n.child(1), scope, depth + 1);
                return;
            case NodeKind::object_pattern:
            case NodeKind::array_pattern:
            case NodeKind::rest_element:
                resolve_pattern(id, scope, depth);
                return;
            case NodeKind::update_expression:
                if (n.child(0) != kNoNode && node(n.child(0)).kind == NodeKind::identifier)
                    reference(n.child(0), scope, true);
                else
                    resolve_walk(n.child(0), scope, depth + 1);
                return;
            case NodeKind::for_in_statement: {
                int fscope = scope_for(id, scope);
                NodeId left = n.child(0);
                if (left != kNoNode && node(left).kind == NodeKind::variable_declaration)
                    resolve_walk(left, fscope, depth + 1);
                else
                    resolve_pattern(left, fscope, depth + 1);
                resolve_walk(n.child(1), fscope, depth + 1);
                resolve_walk(n.child(2), fscope, depth + 1);
                return;
            }
            case NodeKind::call_expression:
            case NodeKind::new_expression:
                call_nodes_.push_back(id);
                resolve_children(id, scope, depth);
                return;
            case NodeKind::await_expression:
                if (function_async_.empty()) keyword_diagnostic(codes::top_level_await, id, 5);
                else if (!function_async_.back()) keyword_diagnostic(codes::await_outside_async, id, 5);
                resolve_children(id, scope, depth);
                return;
            case NodeKind::return_statement:
                if (function_async_.empty()) keyword_diagnostic(codes::return_outside_function, id, 6);
                resolve_children(id, scope, depth);
                return;
            case NodeKind::import_declaration:
                keyword_diagnostic(codes::module_syntax_in_script, id, 6);
                for (NodeId c : n.children)
                    if (c != kNoNode) classify(c, IdentifierClass::declaration);
                return;
            case NodeKind::export_declaration:
                keyword_diagnostic(codes::module_syntax_in_script, id, 6);
                resolve_children(id, scope, depth);
                return;
            default:
                resolve_children(id, scope_for(id, scope), depth);
        }
    }

    // ---- pass 3: types and semantic diagnostics ----------------------------

    [[nodiscard]] ValueType type_of(NodeId id) const { return evaluate_type(tree_, table_, env_, id); }

    [[nodiscard]] ValueType literal_array_type(NodeId id) const {
        bool all_strings = true, all_numbers = true;
        const Node& n = node(id);
        for (NodeId e : n.children) {
            ValueType t = e == kNoNode ? ValueType{} : type_of(e);
            if (e != kNoNode && node(e).kind == NodeKind::template_literal) t = {};
            all_strings = all_strings && t.kind == ValueType::Kind::string;
            all_numbers = all_numbers && t.kind == ValueType::Kind::number;
        }
        if (n.children.empty()) return {ValueType::Kind::any_array};
        if (all_strings) return {ValueType::Kind::string_array};
        if (all_numbers) return {ValueType::Kind::number_array};
        return {ValueType::Kind::any_array};
    }

    void infer_types() {
        for (auto& sym : table_.symbols) {
            if (sym.declarator == kNoNode || sym.reassigned) continue;
            const auto& same = table_.scopes[static_cast<std::size_t>(sym.scope)].names.at(sym.name);
            if (same.size() != 1) continue;
            const Node& decl = node(sym.declarator);
            NodeId target = decl.child(0);
            NodeId init = decl.child(1);
            if (init == kNoNode) continue;
            const Node& in = node(init);
            if (target == sym.node) {
                if (in.kind == NodeKind::array_literal) {
                    sym.type = literal_array_type(init);
                } else if (in.kind == NodeKind::literal || in.kind == NodeKind::call_expression ||
                           in.kind == NodeKind::template_literal) {
                    sym.type = type_of(init);
                }
            } else if (node(target).kind == NodeKind::object_pattern) {
                ValueType source = type_of(init);
                if (source.kind != ValueType::Kind::module) continue;
                // `const {get} = require("http")`: the binding takes the member's type
                for (NodeId p : node(target).children) {
                    if (p == kNoNode || node(p).kind != NodeKind::property || node(p).has(node_flags::computed))
                        continue;
                    const Node& prop = node(p);
                    NodeId bound = prop.has(node_flags::shorthand) ? prop.child(0) : prop.child(1);
                    if (bound == sym.node) sym.type = member_type(source, node(prop.child(0)).text);
                }
            }
        }
    }

    [[nodiscard]] bool member_exists(const ValueType& t, std::string_view name) const {
        switch (t.kind) {
            case ValueType::Kind::module:
                return t.module->members.count(std::string(name)) != 0 || env_.object_has(name);
            case ValueType::Kind::object:
                return !t.value->closed || t.value->members.count(std::string(name)) != 0 || env_.object_has(name);
            case ValueType::Kind::string: return env_.string_has(name);
            case ValueType::Kind::number: return env_.number_has(name);
            case ValueType::Kind::string_array:
            case ValueType::Kind::number_array:
            case ValueType::Kind::any_array: return env_.array_has(name);
            default: return true;
        }
    }

    void semantic_checks(std::vector<Diagnostic>& diags) {
        for (auto& d : pending_) diags.push_back(std::move(d));

        for (const auto& r : table_.references) {
            if (!r.unresolved()) continue;
            const Node& n = node(r.node);
            if (auto s = name_suggestion(n.text, table_, r.scope, env_))
                diags.push_back(make_diagnostic(codes::cannot_find_name_did_you_mean, n.span, {n.text, *s}));
            else
                diags.push_back(make_diagnostic(codes::cannot_find_name, n.span, {n.text}));
        }

        for (NodeId m : member_nodes_) {
            deadline_.poll();
            const Node& n = node(m);
            NodeId prop = n.child(1);
            if (prop == kNoNode || node(prop).kind != NodeKind::identifier) continue;
            ValueType t = type_of(n.child(0));
            if (!t.known() || member_exists(t, node(prop).text)) continue;
            std::string tn = t.name();
            diags.push_back(make_diagnostic(codes::property_does_not_exist, node(prop).span, {node(prop).text, tn}));
        }

        for (NodeId c : call_nodes_) {
            const Node& n = node(c);
            NodeId callee = n.child(0);
            if (callee == kNoNode) continue;
            ValueType t = type_of(callee);
            if (!t.primitive()) continue;
            std::string tn = t.apparent_name();
            int code = n.kind == NodeKind::call_expression ? codes::not_callable : codes::not_constructable;
            diags.push_back(make_diagnostic(code, node(callee).span, {tn}));
        }

        for (const auto& scope : table_.scopes) {
            for (const auto& [name, ids] : scope.names) {
                if (ids.size() < 2) continue;
                bool block_scoped = std::any_of(ids.begin(), ids.end(), [&](int s) {
                    auto k = table_.symbols[static_cast<std::size_t>(s)].kind;
                    return k == DeclKind::let || k == DeclKind::const_ || k == DeclKind::class_;
                });
                if (!block_scoped) continue;
                for (int s : ids) {
                    const Symbol& sym = table_.symbols[static_cast<std::size_t>(s)];
                    if (sym.node == kNoNode) continue;
                    diags.push_back(make_diagnostic(codes::cannot_redeclare, sym.span, {name}));
                }
            }
        }
    }
};

}  // namespace analyze_detail

/// Parses and checks `text` as a CommonJS script against `env`.
/// Throws Cancelled when the deadline expires.
inline Analysis check(std::string_view text, const AmbientEnvironment& env = default_environment(),
                      const Deadline& deadline = {}) {
    ParseResult parsed = parse(text, deadline);
    Analysis a;
    a.env = &env;
    a.diagnostics = std::move(parsed.diagnostics);
    a.tree = std::move(parsed.tree);
    analyze_detail::Binder binder(a.tree, env, deadline);
    a.scopes = binder.run(a.diagnostics);
    a.lines = build_line_index(a.tree.text());
    for (auto& d : a.diagnostics) d.line = line_of_offset(a.lines, a.tree.text().size(), d.span.start).value_or(0);
    std::sort(a.diagnostics.begin(), a.diagnostics.end(), diagnostic_order);
    return a;
}

inline Analysis check(const Snippet& snippet, const AmbientEnvironment& env = default_environment(),
                      const Deadline& deadline = {}) {
    return check(snippet.text(), env, deadline);
}

/// Static type of expression `id` in an analyzed tree.
inline ValueType type_of(const Analysis& a, NodeId id) {
    return analyze_detail::evaluate_type(a.tree, a.scopes, *a.env, id);
}

inline TypeHint expected_type_at(const Analysis& a, NodeId use) {
    if (use == kNoNode) return TypeHint::unknown();
    NodeId parent = a.tree.node(use).parent;
    if (parent == kNoNode) return TypeHint::unknown();
    const Node& p = a.tree.node(parent);
    if (p.kind != NodeKind::call_expression && p.kind != NodeKind::new_expression) return TypeHint::unknown();
    auto it = std::find(p.children.begin(), p.children.end(), use);
    if (it == p.children.begin() || it == p.children.end()) return TypeHint::unknown();
    auto index = static_cast<std::size_t>(it - p.children.begin() - 1);
    ValueType callee = type_of(a, p.child(0));
    if (callee.kind != ValueType::Kind::callable || !callee.value) return TypeHint::unknown();
    auto param = callee.value->signature.param(index);
    return param ? TypeHint::from_param(*param) : TypeHint::unknown();
}

}  // namespace ncc
