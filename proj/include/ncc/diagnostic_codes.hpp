#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <string_view>

#include "ncc/source.hpp"

namespace ncc {

// Published code table. Codes that have a TypeScript counterpart keep its
// number; engine-specific codes live in the 9xxx range.
namespace codes {
inline constexpr int unterminated_string = 1002;
inline constexpr int identifier_expected = 1003;
inline constexpr int token_expected = 1005;
inline constexpr int close_comment_expected = 1010;
inline constexpr int unexpected_token = 1012;
inline constexpr int return_outside_function = 1108;
inline constexpr int expression_expected = 1109;
inline constexpr int invalid_character = 1127;
inline constexpr int statement_expected = 1128;
inline constexpr int variable_declaration_expected = 1134;
inline constexpr int unterminated_template = 1160;
inline constexpr int unterminated_regex = 1161;
inline constexpr int await_outside_async = 1308;
inline constexpr int top_level_await = 1375;
inline constexpr int unexpected_keyword_or_identifier = 1434;
inline constexpr int property_does_not_exist = 2339;
inline constexpr int cannot_find_name = 2304;
inline constexpr int not_callable = 2349;
inline constexpr int not_constructable = 2351;
inline constexpr int cannot_redeclare = 2451;
inline constexpr int cannot_find_name_did_you_mean = 2552;
inline constexpr int module_syntax_in_script = 9001;
inline constexpr int nesting_too_deep = 9003;
}  // namespace codes

struct CodeInfo {
    int code;
    DiagnosticCategory category;
    std::string_view label;     // short histogram label
    std::string_view message;   // template; "{0}", "{1}" are substituted
};

inline constexpr std::array kCodeTable{
    CodeInfo{codes::unterminated_string, DiagnosticCategory::syntax, "Unterminated string",
             "Unterminated string literal."},
    CodeInfo{codes::identifier_expected, DiagnosticCategory::syntax, "Identifier expected",
             "Identifier expected."},
    CodeInfo{codes::token_expected, DiagnosticCategory::syntax, "Character expected",
             "'{0}' expected."},
    CodeInfo{codes::close_comment_expected, DiagnosticCategory::syntax, "Comment not closed",
             "'*/' expected."},
    CodeInfo{codes::unexpected_token, DiagnosticCategory::syntax, "Unexpected token",
             "Unexpected token."},
    CodeInfo{codes::return_outside_function, DiagnosticCategory::semantic,
             "Return outside function",
             "A 'return' statement can only be used within a function body."},
    CodeInfo{codes::expression_expected, DiagnosticCategory::syntax, "Expression expected",
             "Expression expected."},
    CodeInfo{codes::invalid_character, DiagnosticCategory::syntax, "Invalid character",
             "Invalid character."},
    CodeInfo{codes::statement_expected, DiagnosticCategory::syntax, "Statement expected",
             "Declaration or statement expected."},
    CodeInfo{codes::variable_declaration_expected, DiagnosticCategory::syntax,
             "Variable declaration expected", "Variable declaration expected."},
    CodeInfo{codes::unterminated_template, DiagnosticCategory::syntax, "Unterminated template",
             "Unterminated template literal."},
    CodeInfo{codes::unterminated_regex, DiagnosticCategory::syntax, "Unterminated regex",
             "Unterminated regular expression literal."},
    CodeInfo{codes::await_outside_async, DiagnosticCategory::semantic, "Await outside async",
             "'await' expressions are only allowed within async functions and at the top "
             "levels of modules."},
    CodeInfo{codes::top_level_await, DiagnosticCategory::semantic, "Top level await",
             "'await' expressions are only allowed at the top level of a file when that file "
             "is a module, but this file has no imports or exports."},
    CodeInfo{codes::unexpected_keyword_or_identifier, DiagnosticCategory::syntax,
             "Unexpected keyword or identifier", "Unexpected keyword or identifier."},
    CodeInfo{codes::property_does_not_exist, DiagnosticCategory::semantic,
             "Property does not exist on type", "Property '{0}' does not exist on type '{1}'."},
    CodeInfo{codes::cannot_find_name, DiagnosticCategory::semantic, "Cannot find name",
             "Cannot find name '{0}'."},
    CodeInfo{codes::not_callable, DiagnosticCategory::semantic, "Expression not callable",
             "This expression is not callable. Type '{0}' has no call signatures."},
    CodeInfo{codes::not_constructable, DiagnosticCategory::semantic,
             "Expression not constructable",
             "This expression is not constructable. Type '{0}' has no construct signatures."},
    CodeInfo{codes::cannot_redeclare, DiagnosticCategory::semantic, "Cannot redeclare variable",
             "Cannot redeclare block-scoped variable '{0}'."},
    CodeInfo{codes::cannot_find_name_did_you_mean, DiagnosticCategory::semantic,
             "Cannot find name (suggestion)", "Cannot find name '{0}'. Did you mean '{1}'?"},
    CodeInfo{codes::module_syntax_in_script, DiagnosticCategory::semantic,
             "Module syntax in script",
             "Import and export declarations are not allowed in a CommonJS script."},
    CodeInfo{codes::nesting_too_deep, DiagnosticCategory::syntax, "Nesting too deep",
             "Nesting is too deep to analyze."},
};

inline const CodeInfo* find_code(int code) {
    for (const auto& info : kCodeTable)
        if (info.code == code) return &info;
    return nullptr;
}

inline std::string_view code_label(int code) {
    const auto* info = find_code(code);
    return info ? info->label : std::string_view("Unknown error");
}

inline std::string format_message(int code, std::initializer_list<std::string_view> args = {}) {
    const auto* info = find_code(code);
    if (!info) throw UsageError("unpublished diagnostic code " + std::to_string(code));
    std::string out;
    std::string_view tmpl = info->message;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] == '{' && i + 2 < tmpl.size() && tmpl[i + 2] == '}') {
            auto n = static_cast<std::size_t>(tmpl[i + 1] - '0');
            if (n < args.size()) out += *(args.begin() + n);
            i += 2;
        } else {
            out.push_back(tmpl[i]);
        }
    }
    return out;
}

/// Builds a diagnostic with category and message taken from the table.
/// `line` is left at 0; the analyzer fills it from the line index.
inline Diagnostic make_diagnostic(int code, Span span,
                                  std::initializer_list<std::string_view> args = {}) {
    const auto* info = find_code(code);
    if (!info) throw UsageError("unpublished diagnostic code " + std::to_string(code));
    return Diagnostic{code, info->category, format_message(code, args), span, 0};
}

}  // namespace ncc
