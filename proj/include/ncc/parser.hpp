#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncc/deadline.hpp"
#include "ncc/diagnostic_codes.hpp"
#include "ncc/lexer.hpp"
#include "ncc/syntax_tree.hpp"

namespace ncc {

struct ParseResult {
    SyntaxTree tree;
    std::vector<Diagnostic> diagnostics;  // syntax only, sorted by start then code
};

namespace parse_detail {

// Recursion budget in parser frames; beyond it a region is skipped flat.
inline constexpr int kMaxRecursion = 1000;
// Node height beyond which the analyzer stops descending.
inline constexpr std::uint32_t kMaxTreeDepth = 4000;

inline bool is_assignment_operator(const Token& t) {
    if (t.kind != TokenKind::punctuation) return false;
    static constexpr std::string_view ops[] = {"=",   "+=",  "-=",   "*=", "/=", "%=",
                                               "**=", "<<=", ">>=",  ">>>=", "&=", "|=",
                                               "^=",  "&&=", "||=", "?\?="};
    return std::find(std::begin(ops), std::end(ops), t.text) != std::end(ops);
}

inline int binary_precedence(const Token& t, bool no_in) {
    if (t.kind == TokenKind::keyword) {
        if (t.text == "instanceof") return 8;
        if (t.text == "in") return no_in ? 0 : 8;
        return 0;
    }
    if (t.kind != TokenKind::punctuation) return 0;
    auto s = t.text;
    if (s == "??") return 1;
    if (s == "||") return 2;
    if (s == "&&") return 3;
    if (s == "|") return 4;
    if (s == "^") return 5;
    if (s == "&") return 6;
    if (s == "==" || s == "!=" || s == "===" || s == "!==") return 7;
    if (s == "<" || s == ">" || s == "<=" || s == ">=") return 8;
    if (s == "<<" || s == ">>" || s == ">>>") return 9;
    if (s == "+" || s == "-") return 10;
    if (s == "*" || s == "/" || s == "%") return 11;
    if (s == "**") return 12;
    return 0;
}

inline bool can_start_expression(const Token& t) {
    switch (t.kind) {
        case TokenKind::identifier:
        case TokenKind::number:
        case TokenKind::string:
        case TokenKind::template_full:
        case TokenKind::template_head:
        case TokenKind::regex:
            return true;
        case TokenKind::keyword:
            return t.text == "this" || t.text == "super" || t.text == "null" || t.text == "true" ||
                   t.text == "false" || t.text == "function" || t.text == "class" ||
                   t.text == "new" || t.text == "typeof" || t.text == "void" ||
                   t.text == "delete" || t.text == "import";
        case TokenKind::punctuation:
            return t.text == "(" || t.text == "[" || t.text == "{" || t.text == "+" ||
                   t.text == "-" || t.text == "!" || t.text == "~" || t.text == "++" ||
                   t.text == "--";
        default:
            return false;
    }
}

inline bool is_property_name_start(const Token& t) {
    return t.kind == TokenKind::identifier || t.kind == TokenKind::keyword ||
           t.kind == TokenKind::string || t.kind == TokenKind::number || t.punct("[");
}

class Parser {
public:
    Parser(std::shared_ptr<const std::string> source, const Deadline& deadline)
        : tree_(std::move(source)), deadline_(deadline) {}

    ParseResult run() {
        TokenStream stream = tokenize(tree_.text(), deadline_);
        tree_.mutable_tokens() = std::move(stream.tokens);
        const auto& toks = tree_.tokens();
        for (std::uint32_t i = 0; i < toks.size(); ++i)
            if (toks[i].kind != TokenKind::comment && toks[i].kind != TokenKind::error)
                sig_.push_back(i);

        NodeId root = open(NodeKind::program);
        while (!at_eof()) {
            auto before = p_;
            add(root, parse_statement());
            if (p_ == before) advance();  // never loop without progress
        }
        finish(root);
        Node& r = nodes()[root];
        r.first_token = 0;
        r.end_token = static_cast<std::uint32_t>(toks.size());
        r.span = Span{0, tree_.text().size()};
        tree_.set_root(root);
        tree_.compute_owners();

        std::vector<Diagnostic> all = std::move(stream.diagnostics);
        all.insert(all.end(), diags_.begin(), diags_.end());
        std::stable_sort(all.begin(), all.end(), [](const Diagnostic& a, const Diagnostic& b) {
            return a.span.start < b.span.start;
        });
        std::vector<Diagnostic> unique;
        for (auto& d : all)
            if (unique.empty() || unique.back().span.start != d.span.start) unique.push_back(std::move(d));
        std::sort(unique.begin(), unique.end(), diagnostic_order);
        return ParseResult{std::move(tree_), std::move(unique)};
    }

private:
    struct FunctionContext {
        bool in_function = false;
        bool async = false;
        bool generator = false;
    };

    class DepthGuard {
    public:
        explicit DepthGuard(Parser& p) : p_(p) { ++p_.recursion_; }
        ~DepthGuard() { --p_.recursion_; }
        DepthGuard(const DepthGuard&) = delete;
        DepthGuard& operator=(const DepthGuard&) = delete;
        [[nodiscard]] bool too_deep() const { return p_.recursion_ > kMaxRecursion; }

    private:
        Parser& p_;
    };

    SyntaxTree tree_;
    const Deadline& deadline_;
    std::vector<std::uint32_t> sig_;  // significant token indices (no comments, no error tokens)
    std::size_t p_ = 0;
    std::vector<std::size_t> open_sig_;  // per node: value of p_ when opened
    std::vector<Diagnostic> diags_;
    std::size_t last_error_start_ = SIZE_MAX;
    int recursion_ = 0;
    bool deep_reported_ = false;
    FunctionContext ctx_;

    // ---- token cursor ----------------------------------------------------

    std::vector<Node>& nodes() { return tree_.mutable_nodes(); }
    Node& n(NodeId id) { return tree_.mutable_nodes()[id]; }

    [[nodiscard]] const Token& tok(std::size_t sig_index) const {
        return tree_.tokens()[sig_[std::min(sig_index, sig_.size() - 1)]];
    }
    [[nodiscard]] const Token& cur() const { return tok(p_); }
    [[nodiscard]] const Token& peek(std::size_t k = 1) const { return tok(p_ + k); }
    [[nodiscard]] const Token& prev() const { return p_ > 0 ? tok(p_ - 1) : cur(); }
    [[nodiscard]] bool at_eof() const { return cur().kind == TokenKind::eof; }
    [[nodiscard]] bool at_punct(std::string_view s) const { return cur().punct(s); }
    [[nodiscard]] bool at_keyword(std::string_view s) const { return cur().keyword(s); }
    [[nodiscard]] bool at_ident(std::string_view s) const {
        return cur().is(TokenKind::identifier, s);
    }

    void advance() {
        deadline_.poll();
        if (!at_eof()) ++p_;
    }

    // ---- node construction -----------------------------------------------

    NodeId open(NodeKind kind) {
        Node node;
        node.kind = kind;
        node.first_token = sig_[std::min(p_, sig_.size() - 1)];
        node.end_token = node.first_token;
        node.span = Span{cur().span.start, 0};
        nodes().push_back(std::move(node));
        open_sig_.push_back(p_);
        return static_cast<NodeId>(nodes().size() - 1);
    }

    NodeId open_from(NodeKind kind, NodeId first) {
        Node node;
        node.kind = kind;
        node.first_token = n(first).first_token;
        node.end_token = node.first_token;
        node.span = Span{n(first).span.start, 0};
        std::size_t os = open_sig_[first];
        nodes().push_back(std::move(node));
        open_sig_.push_back(os);
        auto id = static_cast<NodeId>(nodes().size() - 1);
        add(id, first);
        return id;
    }

    NodeId finish(NodeId id) {
        std::size_t os = open_sig_[id];
        if (p_ > os) {
            std::uint32_t last = sig_[p_ - 1];
            n(id).end_token = last + 1;
            n(id).span.length = tree_.tokens()[last].span.end() - n(id).span.start;
        } else {
            n(id).end_token = n(id).first_token;
            n(id).span.length = 0;
        }
        std::uint32_t depth = 1;
        for (NodeId c : n(id).children) {
            if (c == kNoNode) continue;
            n(c).parent = id;
            depth = std::max(depth, n(c).depth + 1);
        }
        n(id).depth = depth;
        if (depth > kMaxTreeDepth && !deep_reported_) {
            deep_reported_ = true;
            error(codes::nesting_too_deep, Span{n(id).span.start, 0});
        }
        return id;
    }

    void add(NodeId parent, NodeId child) { n(parent).children.push_back(child); }

    NodeId leaf(NodeKind kind) {
        NodeId id = open(kind);
        n(id).text = cur().text;
        advance();
        return finish(id);
    }

    NodeId missing() {
        NodeId id = open(NodeKind::missing);
        return finish(id);
    }

    // Detaches a node that was built speculatively.
    void orphan(NodeId id) {
        n(id).kind = NodeKind::missing;
        n(id).end_token = n(id).first_token;
        n(id).children.clear();
        n(id).parent = kNoNode;
    }

    // ---- diagnostics -------------------------------------------------------

    [[nodiscard]] Span error_span() const {
        if (at_eof()) return p_ > 0 ? prev().span : Span{0, 0};
        return cur().span;
    }

    bool error(int code, Span span, std::initializer_list<std::string_view> args = {}) {
        if (span.start == last_error_start_) return false;
        last_error_start_ = span.start;
        diags_.push_back(make_diagnostic(code, span, args));
        return true;
    }

    bool expect(std::string_view punct) {
        if (at_punct(punct)) {
            advance();
            return true;
        }
        error(codes::token_expected, error_span(), {punct});
        return false;
    }

    bool expect_closer(std::string_view punct) {
        if (at_punct(punct)) {
            advance();
            return true;
        }
        Span span = error_span();
        if (error(codes::token_expected, span, {punct})) {
            std::size_t insert_at = p_ > 0 ? prev().span.end() : cur().span.start;
            tree_.mutable_closers().push_back(MissingCloser{span.start, insert_at, std::string(punct)});
        }
        return false;
    }

    void consume_semicolon(NodeId expression = kNoNode) {
        if (at_punct(";")) {
            advance();
            return;
        }
        if (at_punct("}") || at_eof() || cur().newline_before) return;
        if (expression != kNoNode && n(expression).kind == NodeKind::identifier)
            error(codes::unexpected_keyword_or_identifier, n(expression).span);
        else
            error(codes::token_expected, error_span(), {";"});
    }

    // Panic mode: skip to the next statement boundary at bracket depth 0.
    NodeId skip_to_boundary() {
        NodeId id = open(NodeKind::error);
        int depth = 0;
        bool first = true;
        while (!at_eof()) {
            const Token& t = cur();
            if (!first && depth == 0) {
                if (t.newline_before) break;
                if (t.punct(";")) {
                    advance();
                    break;
                }
                if (t.punct("}") || t.punct(")") || t.punct("]")) break;
            }
            if (t.punct("(") || t.punct("[") || t.punct("{") || t.kind == TokenKind::template_head)
                ++depth;
            else if ((t.punct(")") || t.punct("]") || t.punct("}") ||
                      t.kind == TokenKind::template_tail) &&
                     depth > 0)
                --depth;
            first = false;
            advance();
        }
        return finish(id);
    }

    // Flat skip used once the recursion budget is spent.
    NodeId skip_deep() {
        if (!deep_reported_) {
            deep_reported_ = true;
            error(codes::nesting_too_deep, error_span());
        }
        NodeId id = open(NodeKind::error);
        int depth = 0;
        while (!at_eof()) {
            const Token& t = cur();
            bool closer = t.punct(")") || t.punct("]") || t.punct("}") ||
                          t.kind == TokenKind::template_middle || t.kind == TokenKind::template_tail;
            if (depth == 0 && (closer || t.punct(",") || t.punct(";"))) break;
            if (t.punct("(") || t.punct("[") || t.punct("{") || t.kind == TokenKind::template_head)
                ++depth;
            else if (closer && t.kind != TokenKind::template_middle)
                --depth;
            advance();
        }
        return finish(id);
    }

    // ---- statements --------------------------------------------------------

    NodeId parse_statement() {
        DepthGuard guard(*this);
        if (guard.too_deep()) {
            NodeId skipped = skip_deep();
            if (n(skipped).span.length == 0 && !at_eof()) {
                advance();
                finish(skipped);
            }
            return skipped;
        }
        const Token& t = cur();
        if (t.punct("{")) return parse_block();
        if (t.punct(";")) return leaf(NodeKind::empty_statement);
        if (t.kind == TokenKind::keyword) {
            auto k = t.text;
            if (k == "var" || k == "const") return parse_variable_statement();
            if (k == "if") return parse_if();
            if (k == "for") return parse_for();
            if (k == "while") return parse_while();
            if (k == "do") return parse_do_while();
            if (k == "return") return parse_return();
            if (k == "break") return parse_jump(NodeKind::break_statement);
            if (k == "continue") return parse_jump(NodeKind::continue_statement);
            if (k == "throw") return parse_throw();
            if (k == "try") return parse_try();
            if (k == "switch") return parse_switch();
            if (k == "function") return parse_function(NodeKind::function_declaration, false);
            if (k == "class") return parse_class(NodeKind::class_declaration);
            if (k == "with") return parse_with();
            if (k == "debugger") {
                NodeId id = open(NodeKind::debugger_statement);
                advance();
                consume_semicolon();
                return finish(id);
            }
            if (k == "import" && !peek().punct("(") && !peek().punct(".")) return parse_import();
            if (k == "export") return parse_export();
        }
        if (t.kind == TokenKind::identifier) {
            const Token& next = peek();
            if (t.text == "let" && (next.kind == TokenKind::identifier || next.punct("[") ||
                                    next.punct("{")))
                return parse_variable_statement();
            if (t.text == "async" && next.keyword("function") && !next.newline_before)
                return parse_function(NodeKind::function_declaration, true);
            if (next.punct(":")) return parse_labeled();
        }
        if (t.punct("}")) {
            error(codes::statement_expected, t.span);
            NodeId id = open(NodeKind::error);
            advance();
            return finish(id);
        }
        if (!can_start_expression(t)) {
            error(codes::statement_expected, error_span());
            return skip_to_boundary();
        }
        NodeId id = open(NodeKind::expression_statement);
        NodeId expr = parse_expression();
        add(id, expr);
        consume_semicolon(expr);
        return finish(id);
    }

    NodeId parse_block() {
        NodeId id = open(NodeKind::block);
        if (!at_punct("{")) {
            error(codes::token_expected, error_span(), {"{"});
            return finish(id);
        }
        advance();
        while (!at_punct("}") && !at_eof()) {
            auto before = p_;
            add(id, parse_statement());
            if (p_ == before) advance();
        }
        expect_closer("}");
        return finish(id);
    }

    NodeId parse_function_body(bool async, bool generator) {
        FunctionContext saved = ctx_;
        ctx_ = FunctionContext{true, async, generator};
        NodeId body = parse_block();
        ctx_ = saved;
        return body;
    }

    NodeId parse_variable_statement() {
        NodeId decl = parse_variable_declaration(false);
        consume_semicolon();
        n(decl).span.length = prev().span.end() - n(decl).span.start;
        if (p_ > open_sig_[decl]) n(decl).end_token = sig_[p_ - 1] + 1;
        return decl;
    }

    NodeId parse_variable_declaration(bool no_in) {
        NodeId id = open(NodeKind::variable_declaration);
        n(id).text = cur().text;
        advance();
        while (true) {
            NodeId d = open(NodeKind::variable_declarator);
            NodeId target = parse_binding_target();
            add(d, target);
            bool have_target = n(target).kind != NodeKind::missing;
            if (!have_target) error(codes::variable_declaration_expected, error_span());
            if (at_punct("=")) {
                advance();
                add(d, parse_assignment(no_in));
            }
            finish(d);
            add(id, d);
            if (!have_target && n(d).span.length == 0) break;
            if (!at_punct(",")) break;
            advance();
        }
        return finish(id);
    }

    NodeId parse_if() {
        NodeId id = open(NodeKind::if_statement);
        advance();
        expect("(");
        add(id, parse_expression());
        expect_closer(")");
        add(id, parse_statement());
        if (at_keyword("else")) {
            advance();
            add(id, parse_statement());
        }
        return finish(id);
    }

    NodeId parse_for() {
        NodeId id = open(NodeKind::for_statement);
        advance();
        if (at_ident("await")) advance();
        expect("(");
        NodeId init = kNoNode;
        if (at_punct(";")) {
            // empty initializer
        } else if (at_keyword("var") || at_keyword("const") ||
                   (at_ident("let") && (peek().kind == TokenKind::identifier || peek().punct("[") ||
                                        peek().punct("{")))) {
            init = parse_variable_declaration(true);
        } else {
            init = parse_expression(true);
        }
        if (init != kNoNode && (at_ident("of") || at_keyword("in"))) {
            n(id).kind = NodeKind::for_in_statement;
            n(id).text = cur().text;
            bool of = at_ident("of");
            advance();
            to_pattern(init);
            add(id, init);
            add(id, of ? parse_assignment() : parse_expression());
            expect_closer(")");
            add(id, parse_statement());
            return finish(id);
        }
        add(id, init);
        expect(";");
        add(id, at_punct(";") ? kNoNode : parse_expression());
        expect(";");
        add(id, at_punct(")") ? kNoNode : parse_expression());
        expect_closer(")");
        add(id, parse_statement());
        return finish(id);
    }

    NodeId parse_while() {
        NodeId id = open(NodeKind::while_statement);
        advance();
        expect("(");
        add(id, parse_expression());
        expect_closer(")");
        add(id, parse_statement());
        return finish(id);
    }

    NodeId parse_do_while() {
        NodeId id = open(NodeKind::do_while_statement);
        advance();
        add(id, parse_statement());
        if (at_keyword("while")) {
            advance();
        } else {
            error(codes::token_expected, error_span(), {"while"});
        }
        expect("(");
        add(id, parse_expression());
        expect_closer(")");
        if (at_punct(";")) advance();
        return finish(id);
    }

    NodeId parse_return() {
        NodeId id = open(NodeKind::return_statement);
        advance();
        if (!at_punct(";") && !at_punct("}") && !at_eof() && !cur().newline_before)
            add(id, parse_expression());
        consume_semicolon();
        return finish(id);
    }

    NodeId parse_jump(NodeKind kind) {
        NodeId id = open(kind);
        advance();
        if (cur().kind == TokenKind::identifier && !cur().newline_before)
            add(id, leaf(NodeKind::identifier));
        consume_semicolon();
        return finish(id);
    }

    NodeId parse_throw() {
        NodeId id = open(NodeKind::throw_statement);
        advance();
        add(id, parse_expression());
        consume_semicolon();
        return finish(id);
    }

    NodeId parse_try() {
        NodeId id = open(NodeKind::try_statement);
        advance();
        add(id, parse_block());
        NodeId handler = kNoNode;
        NodeId finalizer = kNoNode;
        if (at_keyword("catch")) {
            handler = open(NodeKind::catch_clause);
            advance();
            if (at_punct("(")) {
                advance();
                NodeId param = parse_binding_target();
                add(handler, param);
                expect_closer(")");
            } else {
                add(handler, kNoNode);
            }
            add(handler, parse_block());
            finish(handler);
        }
        if (at_keyword("finally")) {
            advance();
            finalizer = parse_block();
        }
        if (handler == kNoNode && finalizer == kNoNode)
            error(codes::token_expected, error_span(), {"catch"});
        add(id, handler);
        add(id, finalizer);
        return finish(id);
    }

    NodeId parse_switch() {
        NodeId id = open(NodeKind::switch_statement);
        advance();
        expect("(");
        add(id, parse_expression());
        expect_closer(")");
        if (!expect("{")) return finish(id);
        while (!at_punct("}") && !at_eof()) {
            auto before = p_;
            if (at_keyword("case") || at_keyword("default")) {
                NodeId c = open(NodeKind::switch_case);
                bool is_case = at_keyword("case");
                advance();
                add(c, is_case ? parse_expression() : kNoNode);
                expect(":");
                while (!at_keyword("case") && !at_keyword("default") && !at_punct("}") && !at_eof()) {
                    auto inner = p_;
                    add(c, parse_statement());
                    if (p_ == inner) advance();
                }
                add(id, finish(c));
            } else {
                error(codes::statement_expected, error_span());
                add(id, skip_to_boundary());
            }
            if (p_ == before) advance();
        }
        expect_closer("}");
        return finish(id);
    }

    NodeId parse_labeled() {
        NodeId id = open(NodeKind::labeled_statement);
        add(id, leaf(NodeKind::identifier));
        advance();  // ':'
        if (at_punct("}") || at_eof()) return finish(id);
        add(id, parse_statement());
        return finish(id);
    }

    NodeId parse_with() {
        NodeId id = open(NodeKind::with_statement);
        advance();
        expect("(");
        add(id, parse_expression());
        expect_closer(")");
        add(id, parse_statement());
        return finish(id);
    }

    NodeId parse_import() {
        NodeId id = open(NodeKind::import_declaration);
        advance();
        auto bail = [&] {
            if (!at_punct(";") && !at_eof() && !cur().newline_before) add(id, skip_to_boundary());
            else consume_semicolon();
            return finish(id);
        };
        if (cur().kind == TokenKind::string) {
            advance();
            consume_semicolon();
            return finish(id);
        }
        if (cur().kind == TokenKind::identifier && !at_ident("from")) {
            add(id, leaf(NodeKind::identifier));
            if (at_punct(",")) advance();
        }
        if (at_punct("*")) {
            advance();
            if (!at_ident("as")) return bail();
            advance();
            if (cur().kind != TokenKind::identifier) return bail();
            add(id, leaf(NodeKind::identifier));
        } else if (at_punct("{")) {
            advance();
            while (!at_punct("}") && !at_eof()) {
                auto before = p_;
                const Token& name = cur();
                bool plain = name.kind == TokenKind::identifier;
                if (peek().is(TokenKind::identifier, "as")) {
                    advance();
                    advance();
                    if (cur().kind != TokenKind::identifier) return bail();
                    add(id, leaf(NodeKind::identifier));
                } else if (plain) {
                    add(id, leaf(NodeKind::identifier));
                } else {
                    return bail();
                }
                if (at_punct(",")) advance();
                if (p_ == before) return bail();
            }
            expect_closer("}");
        }
        if (!at_ident("from")) return bail();
        advance();
        if (cur().kind != TokenKind::string) return bail();
        advance();
        consume_semicolon();
        return finish(id);
    }

    NodeId parse_export() {
        NodeId id = open(NodeKind::export_declaration);
        advance();
        if (at_keyword("default")) {
            advance();
            if (at_keyword("function") || at_keyword("class") ||
                (at_ident("async") && peek().keyword("function"))) {
                add(id, parse_statement());
            } else {
                add(id, parse_assignment());
                consume_semicolon();
            }
            return finish(id);
        }
        if (at_keyword("var") || at_keyword("const") || at_ident("let") || at_keyword("function") ||
            at_keyword("class") || at_ident("async")) {
            add(id, parse_statement());
            return finish(id);
        }
        if (!at_eof() && !at_punct(";")) add(id, skip_to_boundary());
        else consume_semicolon();
        return finish(id);
    }

    // ---- functions and classes ---------------------------------------------

    NodeId parse_function(NodeKind kind, bool async) {
        NodeId id = open(kind);
        if (async) {
            n(id).flags |= node_flags::async;
            advance();
        }
        advance();  // 'function'
        if (at_punct("*")) {
            n(id).flags |= node_flags::generator;
            advance();
        }
        if (cur().kind == TokenKind::identifier) {
            add(id, leaf(NodeKind::identifier));
        } else {
            if (kind == NodeKind::function_declaration) error(codes::identifier_expected, error_span());
            add(id, kNoNode);
        }
        parse_function_rest(id);
        return finish(id);
    }

    // Parameters and body; the caller has already added the name slot.
    void parse_function_rest(NodeId id) {
        bool async = n(id).has(node_flags::async);
        bool generator = n(id).has(node_flags::generator);
        if (expect("(")) {
            while (!at_punct(")") && !at_eof()) {
                auto before = p_;
                if (at_punct("...")) {
                    NodeId rest = open(NodeKind::rest_element);
                    advance();
                    add(rest, parse_binding_target());
                    add(id, finish(rest));
                } else {
                    NodeId param = parse_binding_element();
                    if (n(param).kind == NodeKind::missing) {
                        error(codes::identifier_expected, error_span());
                        break;
                    }
                    add(id, param);
                }
                if (at_punct(",")) advance();
                else break;
                if (p_ == before) break;
            }
            expect_closer(")");
        }
        add(id, parse_function_body(async, generator));
    }

    NodeId parse_class(NodeKind kind) {
        NodeId id = open(kind);
        advance();
        if (cur().kind == TokenKind::identifier) add(id, leaf(NodeKind::identifier));
        else add(id, kNoNode);
        if (at_keyword("extends")) {
            advance();
            add(id, parse_lhs());
        } else {
            add(id, kNoNode);
        }
        NodeId body = open(NodeKind::class_body);
        if (!at_punct("{")) {
            error(codes::token_expected, error_span(), {"{"});
        } else {
            int depth = 0;
            while (!at_eof()) {
                if (at_punct("{")) ++depth;
                if (at_punct("}")) {
                    --depth;
                    advance();
                    if (depth == 0) break;
                    continue;
                }
                advance();
            }
            if (depth != 0) expect_closer("}");
        }
        add(id, finish(body));
        return finish(id);
    }

    // ---- binding patterns --------------------------------------------------

    NodeId parse_binding_target() {
        if (cur().kind == TokenKind::identifier) return leaf(NodeKind::identifier);
        if (at_punct("{")) return parse_object_binding();
        if (at_punct("[")) return parse_array_binding();
        return missing();
    }

    NodeId parse_binding_element() {
        NodeId target = parse_binding_target();
        if (n(target).kind != NodeKind::missing && at_punct("=")) {
            NodeId pat = open_from(NodeKind::assignment_pattern, target);
            advance();
            add(pat, parse_assignment());
            return finish(pat);
        }
        return target;
    }

    NodeId parse_object_binding() {
        NodeId id = open(NodeKind::object_pattern);
        advance();
        while (!at_punct("}") && !at_eof()) {
            auto before = p_;
            if (at_punct("...")) {
                NodeId rest = open(NodeKind::rest_element);
                advance();
                add(rest, parse_binding_target());
                add(id, finish(rest));
            } else if (is_property_name_start(cur())) {
                NodeId prop = open(NodeKind::property);
                bool ident = cur().kind == TokenKind::identifier;
                add(prop, parse_property_key(prop));
                if (at_punct(":")) {
                    advance();
                    add(prop, parse_binding_element());
                } else if (ident) {
                    n(prop).flags |= node_flags::shorthand;
                    if (at_punct("=")) {
                        advance();
                        n(prop).flags |= node_flags::has_default;
                        add(prop, parse_assignment());
                    }
                } else {
                    error(codes::token_expected, error_span(), {":"});
                }
                add(id, finish(prop));
            } else {
                error(codes::identifier_expected, error_span());
                break;
            }
            if (at_punct(",")) advance();
            else break;
            if (p_ == before) break;
        }
        expect_closer("}");
        return finish(id);
    }

    NodeId parse_array_binding() {
        NodeId id = open(NodeKind::array_pattern);
        advance();
        while (!at_punct("]") && !at_eof()) {
            auto before = p_;
            if (at_punct(",")) {
                add(id, kNoNode);
                advance();
                continue;
            }
            if (at_punct("...")) {
                NodeId rest = open(NodeKind::rest_element);
                advance();
                add(rest, parse_binding_target());
                add(id, finish(rest));
            } else {
                NodeId el = parse_binding_element();
                if (n(el).kind == NodeKind::missing) {
                    error(codes::identifier_expected, error_span());
                    break;
                }
                add(id, el);
            }
            if (at_punct(",")) advance();
            else break;
            if (p_ == before) break;
        }
        expect_closer("]");
        return finish(id);
    }

    // Rewrites an expression parsed with the cover grammar into a pattern.
    void to_pattern(NodeId id) {
        if (id == kNoNode) return;
        Node& node = n(id);
        switch (node.kind) {
            case NodeKind::object_literal:
                node.kind = NodeKind::object_pattern;
                for (NodeId c : std::vector<NodeId>(node.children)) {
                    if (c == kNoNode) continue;
                    if (n(c).kind == NodeKind::spread_element) {
                        n(c).kind = NodeKind::rest_element;
                        to_pattern(n(c).child(0));
                    } else if (n(c).kind == NodeKind::property && !n(c).has(node_flags::shorthand)) {
                        to_pattern(n(c).child(1));
                    }
                }
                break;
            case NodeKind::array_literal:
                node.kind = NodeKind::array_pattern;
                for (NodeId c : std::vector<NodeId>(node.children)) {
                    if (c == kNoNode) continue;
                    if (n(c).kind == NodeKind::spread_element) {
                        n(c).kind = NodeKind::rest_element;
                        to_pattern(n(c).child(0));
                    } else {
                        to_pattern(c);
                    }
                }
                break;
            case NodeKind::assignment_expression:
                if (node.text == "=") {
                    node.kind = NodeKind::assignment_pattern;
                    to_pattern(node.child(0));
                }
                break;
            case NodeKind::spread_element:
                node.kind = NodeKind::rest_element;
                to_pattern(node.child(0));
                break;
            default:
                break;
        }
    }

    // ---- expressions -------------------------------------------------------

    NodeId parse_expression(bool no_in = false) {
        NodeId first = parse_assignment(no_in);
        if (!at_punct(",")) return first;
        NodeId seq = open_from(NodeKind::sequence_expression, first);
        while (at_punct(",")) {
            advance();
            add(seq, parse_assignment(no_in));
        }
        return finish(seq);
    }

    NodeId parse_assignment(bool no_in = false) {
        DepthGuard guard(*this);
        if (guard.too_deep()) return skip_deep();
        const Token& t = cur();
        if (t.kind == TokenKind::identifier) {
            if (peek().punct("=>") && !peek().newline_before) {
                NodeId arrow = open(NodeKind::arrow_function);
                add(arrow, leaf(NodeKind::identifier));
                parse_arrow_body(arrow);
                return finish(arrow);
            }
            if (t.text == "async" && peek().kind == TokenKind::identifier &&
                !peek().newline_before && peek(2).punct("=>")) {
                NodeId arrow = open(NodeKind::arrow_function);
                n(arrow).flags |= node_flags::async;
                advance();
                add(arrow, leaf(NodeKind::identifier));
                parse_arrow_body(arrow);
                return finish(arrow);
            }
            if (t.text == "yield" && ctx_.generator) return parse_yield(no_in);
        }
        NodeId left = parse_conditional(no_in);
        if (is_assignment_operator(cur()) && n(left).kind != NodeKind::arrow_function) {
            NodeId assign = open_from(NodeKind::assignment_expression, left);
            n(assign).text = cur().text;
            if (cur().text == "=") to_pattern(left);
            advance();
            add(assign, parse_assignment(no_in));
            return finish(assign);
        }
        return left;
    }

    NodeId parse_yield(bool no_in) {
        NodeId id = open(NodeKind::yield_expression);
        advance();
        if (at_punct("*")) advance();
        if (!cur().newline_before && can_start_expression(cur())) add(id, parse_assignment(no_in));
        return finish(id);
    }

    void parse_arrow_body(NodeId arrow) {
        advance();  // '=>'
        bool async = n(arrow).has(node_flags::async);
        if (at_punct("{")) {
            add(arrow, parse_function_body(async, false));
            return;
        }
        n(arrow).flags |= node_flags::expression_body;
        FunctionContext saved = ctx_;
        ctx_ = FunctionContext{true, async, false};
        add(arrow, parse_assignment());
        ctx_ = saved;
    }

    NodeId parse_conditional(bool no_in) {
        NodeId test = parse_binary(0, no_in);
        if (!at_punct("?")) return test;
        NodeId id = open_from(NodeKind::conditional_expression, test);
        advance();
        add(id, parse_assignment());
        expect(":");
        add(id, parse_assignment(no_in));
        return finish(id);
    }

    NodeId parse_binary(int min_precedence, bool no_in) {
        DepthGuard guard(*this);
        if (guard.too_deep()) return skip_deep();
        NodeId left = parse_unary();
        while (true) {
            int prec = binary_precedence(cur(), no_in);
            if (prec == 0 || prec <= min_precedence) break;
            if (n(left).kind == NodeKind::arrow_function) break;
            NodeId bin = open_from(NodeKind::binary_expression, left);
            n(bin).text = cur().text;
            bool right_assoc = cur().text == "**";
            advance();
            add(bin, parse_binary(right_assoc ? prec - 1 : prec, no_in));
            left = finish(bin);
        }
        return left;
    }

    [[nodiscard]] bool await_starts_expression() const {
        if (!at_ident("await")) return false;
        if (ctx_.async) return true;
        const Token& next = peek();
        if (next.newline_before) return false;
        switch (next.kind) {
            case TokenKind::identifier:
            case TokenKind::keyword:
            case TokenKind::string:
            case TokenKind::number:
            case TokenKind::template_full:
            case TokenKind::template_head:
                return !(next.keyword("in") || next.keyword("instanceof"));
            default:
                return false;
        }
    }

    NodeId parse_unary() {
        DepthGuard guard(*this);
        if (guard.too_deep()) return skip_deep();
        const Token& t = cur();
        bool unary_punct = t.punct("!") || t.punct("~") || t.punct("+") || t.punct("-");
        bool unary_keyword = t.keyword("typeof") || t.keyword("void") || t.keyword("delete");
        if (unary_punct || unary_keyword) {
            NodeId id = open(NodeKind::unary_expression);
            n(id).text = t.text;
            advance();
            add(id, parse_unary());
            return finish(id);
        }
        if (t.punct("++") || t.punct("--")) {
            NodeId id = open(NodeKind::update_expression);
            n(id).text = t.text;
            n(id).flags |= node_flags::prefix;
            advance();
            add(id, parse_unary());
            return finish(id);
        }
        if (await_starts_expression()) {
            NodeId id = open(NodeKind::await_expression);
            advance();
            add(id, parse_unary());
            return finish(id);
        }
        NodeId operand = parse_lhs();
        if ((at_punct("++") || at_punct("--")) && !cur().newline_before &&
            n(operand).kind != NodeKind::arrow_function) {
            NodeId id = open_from(NodeKind::update_expression, operand);
            n(id).text = cur().text;
            advance();
            return finish(id);
        }
        return operand;
    }

    NodeId parse_lhs() {
        NodeId expr = at_keyword("new") ? parse_new() : parse_primary();
        if (n(expr).kind == NodeKind::arrow_function) return expr;
        return parse_call_tail(expr, true);
    }

    NodeId parse_member_name(NodeId object, std::uint16_t flags) {
        NodeId id = open_from(NodeKind::member_expression, object);
        n(id).flags |= flags;
        if (cur().kind == TokenKind::identifier || cur().kind == TokenKind::keyword) {
            bool kw = cur().kind == TokenKind::keyword;
            NodeId name = leaf(NodeKind::identifier);
            if (kw) n(name).flags |= node_flags::keyword_name;
            add(id, name);
        } else {
            error(codes::identifier_expected, error_span());
            add(id, missing());
        }
        return finish(id);
    }

    NodeId parse_call_tail(NodeId expr, bool allow_call) {
        while (true) {
            deadline_.poll();
            if (at_punct(".")) {
                advance();
                expr = parse_member_name(expr, 0);
            } else if (at_punct("?.")) {
                advance();
                if (at_punct("(") && allow_call) {
                    NodeId call = open_from(NodeKind::call_expression, expr);
                    n(call).flags |= node_flags::optional;
                    parse_arguments(call);
                    expr = finish(call);
                } else if (at_punct("[")) {
                    expr = parse_index(expr, node_flags::optional);
                } else {
                    expr = parse_member_name(expr, node_flags::optional);
                }
            } else if (at_punct("[")) {
                expr = parse_index(expr, 0);
            } else if (at_punct("(") && allow_call) {
                NodeId call = open_from(NodeKind::call_expression, expr);
                parse_arguments(call);
                expr = finish(call);
                if (n(expr).child(0) != kNoNode &&
                    n(n(expr).child(0)).kind == NodeKind::identifier &&
                    n(n(expr).child(0)).text == "async" && at_punct("=>") &&
                    !cur().newline_before) {
                    return convert_async_arrow(expr);
                }
            } else if ((cur().kind == TokenKind::template_full ||
                        cur().kind == TokenKind::template_head) &&
                       !cur().newline_before) {
                NodeId tagged = open_from(NodeKind::tagged_template, expr);
                add(tagged, parse_template());
                expr = finish(tagged);
            } else {
                return expr;
            }
        }
    }

    NodeId convert_async_arrow(NodeId call) {
        NodeId callee = n(call).children.front();
        std::vector<NodeId> args(n(call).children.begin() + 1, n(call).children.end());
        orphan(callee);
        n(call).kind = NodeKind::arrow_function;
        n(call).flags = node_flags::async;
        n(call).children.clear();
        for (NodeId a : args) {
            to_pattern(a);
            add(call, a);
        }
        parse_arrow_body(call);
        return finish(call);
    }

    NodeId parse_index(NodeId object, std::uint16_t flags) {
        NodeId id = open_from(NodeKind::index_expression, object);
        n(id).flags |= flags;
        advance();
        add(id, parse_expression());
        expect_closer("]");
        return finish(id);
    }

    void parse_arguments(NodeId call) {
        advance();  // '('
        while (!at_punct(")") && !at_eof()) {
            auto before = p_;
            if (at_punct("...")) {
                NodeId spread = open(NodeKind::spread_element);
                advance();
                add(spread, parse_assignment());
                add(call, finish(spread));
            } else {
                add(call, parse_assignment());
            }
            if (at_punct(",")) {
                advance();
                continue;
            }
            if (at_punct(")") || p_ == before) break;
            if (can_start_expression(cur()) && !cur().newline_before) {
                error(codes::token_expected, error_span(), {","});
                continue;
            }
            break;
        }
        expect_closer(")");
    }

    NodeId parse_new() {
        NodeId id = open(NodeKind::new_expression);
        advance();
        if (at_punct(".")) {
            advance();
            if (cur().kind == TokenKind::identifier) advance();
            n(id).kind = NodeKind::literal;
            n(id).text = "new.target";
            return finish(id);
        }
        NodeId callee = at_keyword("new") ? parse_new() : parse_primary();
        callee = parse_call_tail(callee, false);
        add(id, callee);
        if (at_punct("(")) parse_arguments(id);
        return finish(id);
    }

    NodeId parse_primary() {
        const Token& t = cur();
        switch (t.kind) {
            case TokenKind::identifier:
                if (t.text == "async" && peek().keyword("function") && !peek().newline_before)
                    return parse_function(NodeKind::function_expression, true);
                return leaf(NodeKind::identifier);
            case TokenKind::number:
            case TokenKind::string:
            case TokenKind::regex:
                return leaf(NodeKind::literal);
            case TokenKind::template_full:
            case TokenKind::template_head:
                return parse_template();
            case TokenKind::keyword:
                if (t.text == "this") return leaf(NodeKind::this_expression);
                if (t.text == "super") return leaf(NodeKind::super_expression);
                if (t.text == "null" || t.text == "true" || t.text == "false")
                    return leaf(NodeKind::literal);
                if (t.text == "function") return parse_function(NodeKind::function_expression, false);
                if (t.text == "class") return parse_class(NodeKind::class_expression);
                if (t.text == "import") {
                    NodeId id = open(NodeKind::literal);
                    n(id).text = "import";
                    advance();
                    if (at_punct(".")) {
                        advance();
                        if (cur().kind == TokenKind::identifier) advance();
                    }
                    return finish(id);
                }
                break;
            case TokenKind::punctuation:
                if (t.text == "(") return parse_parenthesized();
                if (t.text == "[") return parse_array_literal();
                if (t.text == "{") return parse_object_literal();
                break;
            default:
                break;
        }
        error(codes::expression_expected, error_span());
        return missing();
    }

    NodeId parse_template() {
        NodeId id = open(NodeKind::template_literal);
        if (cur().kind == TokenKind::template_full) {
            advance();
            return finish(id);
        }
        advance();  // head
        while (true) {
            add(id, parse_expression());
            if (cur().kind == TokenKind::template_middle) {
                advance();
                continue;
            }
            if (cur().kind == TokenKind::template_tail) {
                advance();
                break;
            }
            error(codes::token_expected, error_span(), {"}"});
            while (!at_eof() && cur().kind != TokenKind::template_middle &&
                   cur().kind != TokenKind::template_tail)
                advance();
            if (at_eof()) break;
            bool tail = cur().kind == TokenKind::template_tail;
            advance();
            if (tail) break;
        }
        return finish(id);
    }

    NodeId parse_parenthesized() {
        NodeId id = open(NodeKind::parenthesized);
        advance();  // '('
        std::vector<NodeId> items;
        bool empty = at_punct(")");
        while (!at_punct(")") && !at_eof()) {
            auto before = p_;
            if (at_punct("...")) {
                NodeId spread = open(NodeKind::spread_element);
                advance();
                add(spread, parse_binding_element());
                items.push_back(finish(spread));
            } else {
                items.push_back(parse_assignment());
            }
            if (!at_punct(",") || p_ == before) break;
            advance();
        }
        expect_closer(")");
        if (at_punct("=>") && !cur().newline_before) {
            n(id).kind = NodeKind::arrow_function;
            for (NodeId item : items) {
                to_pattern(item);
                add(id, item);
            }
            parse_arrow_body(id);
            return finish(id);
        }
        if (empty) {
            error(codes::expression_expected, prev().span);
            add(id, missing());
        } else if (items.size() == 1) {
            add(id, items.front());
        } else {
            NodeId seq = open_from(NodeKind::sequence_expression, items.front());
            for (std::size_t i = 1; i < items.size(); ++i) add(seq, items[i]);
            // span runs to the last item, not the closing paren
            std::size_t saved = p_;
            while (p_ > 0 && n(items.back()).end_token <= sig_[p_ - 1] &&
                   n(items.back()).end_token != n(items.back()).first_token)
                --p_;
            finish(seq);
            p_ = saved;
            add(id, seq);
        }
        return finish(id);
    }

    NodeId parse_array_literal() {
        NodeId id = open(NodeKind::array_literal);
        advance();
        while (!at_punct("]") && !at_eof()) {
            auto before = p_;
            if (at_punct(",")) {
                add(id, kNoNode);
                advance();
                continue;
            }
            if (at_punct("...")) {
                NodeId spread = open(NodeKind::spread_element);
                advance();
                add(spread, parse_assignment());
                add(id, finish(spread));
            } else {
                add(id, parse_assignment());
            }
            if (at_punct(",")) {
                advance();
                continue;
            }
            if (at_punct("]") || p_ == before) break;
            if (can_start_expression(cur()) && !cur().newline_before) {
                error(codes::token_expected, error_span(), {","});
                continue;
            }
            break;
        }
        expect_closer("]");
        return finish(id);
    }

    NodeId parse_property_key(NodeId property) {
        if (at_punct("[")) {
            n(property).flags |= node_flags::computed;
            advance();
            NodeId key = parse_assignment();
            expect_closer("]");
            return key;
        }
        if (cur().kind == TokenKind::identifier || cur().kind == TokenKind::keyword) {
            bool kw = cur().kind == TokenKind::keyword;
            NodeId key = leaf(NodeKind::identifier);
            if (kw) n(key).flags |= node_flags::keyword_name;
            return key;
        }
        return leaf(NodeKind::literal);
    }

    NodeId parse_object_literal() {
        NodeId id = open(NodeKind::object_literal);
        advance();
        while (!at_punct("}") && !at_eof()) {
            auto before = p_;
            if (at_punct("...")) {
                NodeId spread = open(NodeKind::spread_element);
                advance();
                add(spread, parse_assignment());
                add(id, finish(spread));
            } else {
                NodeId prop = open(NodeKind::property);
                const Token& next = peek();
                bool modifier_follows = is_property_name_start(next) || next.punct("*");
                if ((at_ident("get") || at_ident("set")) && is_property_name_start(next)) {
                    n(prop).flags |= node_flags::accessor;
                    advance();
                } else if (at_ident("async") && modifier_follows && !next.newline_before) {
                    n(prop).flags |= node_flags::async;
                    advance();
                }
                if (at_punct("*")) {
                    n(prop).flags |= node_flags::generator;
                    advance();
                }
                if (!is_property_name_start(cur())) {
                    error(codes::identifier_expected, error_span());
                    finish(prop);
                    orphan(prop);
                    break;
                }
                bool plain_ident = cur().kind == TokenKind::identifier;
                NodeId key = parse_property_key(prop);
                add(prop, key);
                if (at_punct("(")) {
                    n(prop).flags |= node_flags::method;
                    NodeId fn = open(NodeKind::function_expression);
                    n(fn).flags |= n(prop).flags & (node_flags::async | node_flags::generator);
                    add(fn, kNoNode);
                    parse_function_rest(fn);
                    add(prop, finish(fn));
                } else if (at_punct(":")) {
                    advance();
                    add(prop, parse_assignment());
                } else if (plain_ident && !n(prop).has(node_flags::computed)) {
                    n(prop).flags |= node_flags::shorthand;
                    if (at_punct("=")) {
                        advance();
                        n(prop).flags |= node_flags::has_default;
                        add(prop, parse_assignment());
                    }
                } else {
                    error(codes::token_expected, error_span(), {":"});
                }
                add(id, finish(prop));
            }
            if (at_punct(",")) {
                advance();
                continue;
            }
            if (at_punct("}") || p_ == before) break;
            if (is_property_name_start(cur())) {
                error(codes::token_expected, error_span(), {","});
                continue;
            }
            break;
        }
        expect_closer("}");
        return finish(id);
    }
};

}  // namespace parse_detail

/// Parses `text` into a tolerant tree. Never fails: errors are reported as
/// diagnostics and recovery continues so independent errors all surface.
inline ParseResult parse(std::string_view text, const Deadline& deadline = {}) {
    auto source = std::make_shared<const std::string>(text);
    return parse_detail::Parser(std::move(source), deadline).run();
}

}  // namespace ncc
