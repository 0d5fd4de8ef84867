#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncc/lexer.hpp"
#include "ncc/source.hpp"

namespace ncc {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

enum class NodeKind : std::uint8_t {
    program,               // statements...
    block,                 // statements...
    empty_statement,
    expression_statement,  // [expr]
    variable_declaration,  // text = var|let|const; [declarator...]
    variable_declarator,   // [target, init?]
    function_declaration,  // [name|none, param..., body]
    class_declaration,     // [name|none, heritage|none, class_body]
    class_body,            // opaque; no children
    if_statement,          // [test, consequent, alternate?]
    for_statement,         // [init|none, test|none, update|none, body]
    for_in_statement,      // text = in|of; [left, right, body]
    while_statement,       // [test, body]
    do_while_statement,    // [body, test]
    return_statement,      // [argument?]
    break_statement,       // [label?]
    continue_statement,    // [label?]
    throw_statement,       // [argument]
    try_statement,         // [block, catch|none, finalizer|none]
    catch_clause,          // [param|none, body]
    switch_statement,      // [discriminant, case...]
    switch_case,           // [test|none, statements...]
    labeled_statement,     // [label, body]
    with_statement,        // [object, body]
    debugger_statement,
    import_declaration,    // [binding identifiers...]
    export_declaration,    // [declaration|expression?]
    error,                 // tokens skipped during recovery

    identifier,            // text = name
    this_expression,
    super_expression,
    literal,               // text = raw lexeme
    template_literal,      // [substitution...]
    tagged_template,       // [tag, template]
    array_literal,         // [element|none...]
    object_literal,        // [property...]
    property,              // [key, value?]; see NodeFlags
    spread_element,        // [argument]
    function_expression,   // [name|none, param..., body]
    arrow_function,        // [param..., body]
    class_expression,      // [name|none, heritage|none, class_body]
    call_expression,       // [callee, argument...]
    new_expression,        // [callee, argument...]
    member_expression,     // [object, property identifier]
    index_expression,      // [object, index]
    unary_expression,      // text = operator; [argument]
    update_expression,     // text = operator; [argument]
    binary_expression,     // text = operator; [left, right]
    assignment_expression, // text = operator; [target, value]
    conditional_expression,// [test, consequent, alternate]
    sequence_expression,   // [expr...]
    await_expression,      // [argument]
    yield_expression,      // [argument?]
    parenthesized,         // [expr]

    object_pattern,        // [property...]
    array_pattern,         // [element|none...]
    assignment_pattern,    // [target, default]
    rest_element,          // [target]

    missing,               // zero-width stand-in for an absent expression or name
};

std::string_view to_string(NodeKind kind);

namespace node_flags {
inline constexpr std::uint16_t async = 1u << 0;
inline constexpr std::uint16_t generator = 1u << 1;
inline constexpr std::uint16_t computed = 1u << 2;
inline constexpr std::uint16_t shorthand = 1u << 3;
inline constexpr std::uint16_t method = 1u << 4;
inline constexpr std::uint16_t accessor = 1u << 5;
inline constexpr std::uint16_t optional = 1u << 6;
inline constexpr std::uint16_t prefix = 1u << 7;
inline constexpr std::uint16_t has_default = 1u << 8;
inline constexpr std::uint16_t spread = 1u << 9;
inline constexpr std::uint16_t expression_body = 1u << 10;
inline constexpr std::uint16_t keyword_name = 1u << 11;  // identifier spelled as a keyword (property names)
}  // namespace node_flags

struct Node {
    NodeKind kind = NodeKind::missing;
    std::uint16_t flags = 0;
    NodeId parent = kNoNode;
    std::uint32_t depth = 1;
    Span span;
    std::uint32_t first_token = 0;  // [first_token, end_token) into SyntaxTree::tokens()
    std::uint32_t end_token = 0;
    std::string_view text;
    std::vector<NodeId> children;

    [[nodiscard]] bool has(std::uint16_t f) const { return (flags & f) != 0; }
    [[nodiscard]] NodeId child(std::size_t i) const {
        return i < children.size() ? children[i] : kNoNode;
    }
};

/// A closing token the parser expected but did not find. Used by the
/// insert-expected-character codefix.
struct MissingCloser {
    std::size_t diagnostic_start = 0;
    std::size_t insert_at = 0;
    std::string text;
};

/// Tolerant AST over an owned copy of the source. Tokens are the leaves:
/// every token is owned by exactly one node (the innermost one covering it).
class SyntaxTree {
public:
    SyntaxTree() : source_(std::make_shared<const std::string>()) {}
    explicit SyntaxTree(std::shared_ptr<const std::string> source) : source_(std::move(source)) {}

    [[nodiscard]] const std::string& text() const { return *source_; }
    [[nodiscard]] const std::shared_ptr<const std::string>& source() const { return source_; }
    [[nodiscard]] const std::vector<Token>& tokens() const { return tokens_; }
    [[nodiscard]] const Node& node(NodeId id) const { return nodes_[id]; }
    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    [[nodiscard]] NodeId root() const { return root_; }
    [[nodiscard]] const std::vector<MissingCloser>& missing_closers() const { return closers_; }
    [[nodiscard]] NodeId owner_of_token(std::size_t token) const { return owners_.at(token); }

    /// Concatenation of every token with its leading trivia.
    [[nodiscard]] std::string reprint() const {
        std::string out;
        out.reserve(source_->size());
        for (const auto& t : tokens_) {
            out += source_->substr(t.leading.start, t.leading.length);
            out += t.text;
        }
        return out;
    }

    /// Innermost identifier node whose span equals `span`, or kNoNode.
    [[nodiscard]] NodeId identifier_at(Span span) const {
        for (NodeId id = 0; id < nodes_.size(); ++id)
            if (nodes_[id].kind == NodeKind::identifier && nodes_[id].span == span) return id;
        return kNoNode;
    }

    /// The ancestor of `id` that is a direct child of the program node.
    [[nodiscard]] NodeId top_level_statement(NodeId id) const {
        while (id != kNoNode && nodes_[id].parent != root_) id = nodes_[id].parent;
        return id;
    }

    // Builder interface used by the parser.
    std::vector<Node>& mutable_nodes() { return nodes_; }
    std::vector<Token>& mutable_tokens() { return tokens_; }
    std::vector<MissingCloser>& mutable_closers() { return closers_; }
    void set_root(NodeId id) { root_ = id; }

    void compute_owners() {
        owners_.assign(tokens_.size(), root_);
        std::vector<NodeId> kids;
        for (NodeId id = 0; id < nodes_.size(); ++id) {
            const Node& n = nodes_[id];
            kids.clear();
            for (NodeId c : n.children)
                if (c != kNoNode) kids.push_back(c);
            std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
                return nodes_[a].first_token < nodes_[b].first_token;
            });
            std::uint32_t t = n.first_token;
            for (NodeId c : kids) {
                for (; t < nodes_[c].first_token && t < n.end_token; ++t) owners_[t] = id;
                t = std::max(t, nodes_[c].end_token);
            }
            for (; t < n.end_token; ++t) owners_[t] = id;
        }
    }

private:
    std::shared_ptr<const std::string> source_;
    std::vector<Token> tokens_;
    std::vector<Node> nodes_;
    std::vector<MissingCloser> closers_;
    std::vector<NodeId> owners_;
    NodeId root_ = kNoNode;
};

inline std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::program: return "Program";
        case NodeKind::block: return "Block";
        case NodeKind::empty_statement: return "EmptyStatement";
        case NodeKind::expression_statement: return "ExpressionStatement";
        case NodeKind::variable_declaration: return "VariableDeclaration";
        case NodeKind::variable_declarator: return "VariableDeclarator";
        case NodeKind::function_declaration: return "FunctionDeclaration";
        case NodeKind::class_declaration: return "ClassDeclaration";
        case NodeKind::class_body: return "ClassBody";
        case NodeKind::if_statement: return "IfStatement";
        case NodeKind::for_statement: return "ForStatement";
        case NodeKind::for_in_statement: return "ForInStatement";
        case NodeKind::while_statement: return "WhileStatement";
        case NodeKind::do_while_statement: return "DoWhileStatement";
        case NodeKind::return_statement: return "ReturnStatement";
        case NodeKind::break_statement: return "BreakStatement";
        case NodeKind::continue_statement: return "ContinueStatement";
        case NodeKind::throw_statement: return "ThrowStatement";
        case NodeKind::try_statement: return "TryStatement";
        case NodeKind::catch_clause: return "CatchClause";
        case NodeKind::switch_statement: return "SwitchStatement";
        case NodeKind::switch_case: return "SwitchCase";
        case NodeKind::labeled_statement: return "LabeledStatement";
        case NodeKind::with_statement: return "WithStatement";
        case NodeKind::debugger_statement: return "DebuggerStatement";
        case NodeKind::import_declaration: return "ImportDeclaration";
        case NodeKind::export_declaration: return "ExportDeclaration";
        case NodeKind::error: return "Error";
        case NodeKind::identifier: return "Identifier";
        case NodeKind::this_expression: return "ThisExpression";
        case NodeKind::super_expression: return "Super";
        case NodeKind::literal: return "Literal";
        case NodeKind::template_literal: return "TemplateLiteral";
        case NodeKind::tagged_template: return "TaggedTemplate";
        case NodeKind::array_literal: return "ArrayLiteral";
        case NodeKind::object_literal: return "ObjectLiteral";
        case NodeKind::property: return "Property";
        case NodeKind::spread_element: return "SpreadElement";
        case NodeKind::function_expression: return "FunctionExpression";
        case NodeKind::arrow_function: return "ArrowFunction";
        case NodeKind::class_expression: return "ClassExpression";
        case NodeKind::call_expression: return "CallExpression";
        case NodeKind::new_expression: return "NewExpression";
        case NodeKind::member_expression: return "MemberExpression";
        case NodeKind::index_expression: return "IndexExpression";
        case NodeKind::unary_expression: return "UnaryExpression";
        case NodeKind::update_expression: return "UpdateExpression";
        case NodeKind::binary_expression: return "BinaryExpression";
        case NodeKind::assignment_expression: return "AssignmentExpression";
        case NodeKind::conditional_expression: return "ConditionalExpression";
        case NodeKind::sequence_expression: return "SequenceExpression";
        case NodeKind::await_expression: return "AwaitExpression";
        case NodeKind::yield_expression: return "YieldExpression";
        case NodeKind::parenthesized: return "Parenthesized";
        case NodeKind::object_pattern: return "ObjectPattern";
        case NodeKind::array_pattern: return "ArrayPattern";
        case NodeKind::assignment_pattern: return "AssignmentPattern";
        case NodeKind::rest_element: return "RestElement";
        case NodeKind::missing: return "Missing";
    }
    return "?";
}

}  // namespace ncc
