#pragma once

#include <cctype>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ncc/deadline.hpp"
#include "ncc/diagnostic_codes.hpp"
#include "ncc/source.hpp"

namespace ncc {

enum class TokenKind : std::uint8_t {
    identifier,
    keyword,
    punctuation,
    string,
    number,
    template_full,    // `...` without substitutions
    template_head,    // `...${
    template_middle,  // }...${
    template_tail,    // }...`
    regex,
    comment,
    error,
    eof,
};

std::string_view to_string(TokenKind kind);

/// One lexeme. `leading` is the whitespace run immediately before the token,
/// so leading + span over all tokens tiles the input exactly.
struct Token {
    TokenKind kind = TokenKind::eof;
    Span span;
    Span leading;
    std::string_view text;
    bool newline_before = false;  // a line break since the previous non-comment token

    [[nodiscard]] bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    [[nodiscard]] bool punct(std::string_view t) const { return is(TokenKind::punctuation, t); }
    [[nodiscard]] bool keyword(std::string_view t) const { return is(TokenKind::keyword, t); }
    [[nodiscard]] bool significant() const { return kind != TokenKind::comment; }
};

struct TokenStream {
    std::vector<Token> tokens;  // always ends with eof
    std::vector<Diagnostic> diagnostics;
};

namespace lex_detail {

inline constexpr std::string_view kKeywords[] = {
    "break",  "case",       "catch",   "class",    "const",  "continue", "debugger", "default",
    "delete", "do",         "else",    "export",   "extends", "false",   "finally",  "for",
    "function", "if",       "import",  "in",       "instanceof", "new",  "null",     "return",
    "super",  "switch",     "this",    "throw",    "true",   "try",      "typeof",   "var",
    "void",   "while",      "with",    "let",      "yield",  "enum",
};

inline bool is_keyword(std::string_view word) {
    // `let` and `yield` are contextual; the parser decides how to treat them.
    if (word == "let" || word == "yield") return false;
    for (auto k : kKeywords)
        if (k == word) return true;
    return false;
}

inline constexpr std::string_view kPunctuators[] = {
    ">>>=", "...", "===", "!==", "**=", "<<=", ">>=", ">>>", "&&=", "||=", "?\?=",
    "=>",   "==",  "!=",  "<=",  ">=",  "&&",  "||",  "??",  "?.",  "++",  "--",
    "+=",   "-=",  "*=",  "/=",  "%=",  "&=",  "|=",  "^=",  "<<",  ">>",  "**",
    "{",    "}",   "(",   ")",   "[",   "]",   ";",   ",",   "<",   ">",   "+",
    "-",    "*",   "/",   "%",   "&",   "|",   "^",
};

inline bool is_ident_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}
inline bool is_ident_part(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
inline bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

inline std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead & 0xE0) == 0xC0) return 2;
    if ((lead & 0xF0) == 0xE0) return 3;
    if ((lead & 0xF8) == 0xF0) return 4;
    return 1;
}

enum class Special { none, space, line_break, invalid };

/// Classifies non-ASCII sequences that are not identifier characters.
inline Special classify_unicode(std::string_view text, std::size_t i) {
    auto b = [&](std::size_t k) -> unsigned char {
        return i + k < text.size() ? static_cast<unsigned char>(text[i + k]) : 0;
    };
    if (b(0) == 0xC2 && b(1) == 0xA0) return Special::space;                 // NBSP
    if (b(0) == 0xEF && b(1) == 0xBB && b(2) == 0xBF) return Special::space;  // BOM
    if (b(0) == 0xE3 && b(1) == 0x80 && b(2) == 0x80) return Special::space;  // ideographic space
    if (b(0) == 0xE2 && b(1) == 0x80) {
        if (b(2) >= 0x80 && b(2) <= 0x8A) return Special::space;
        if (b(2) == 0xA8 || b(2) == 0xA9) return Special::line_break;
        if (b(2) == 0xAF) return Special::space;
        return Special::invalid;  // quotes, dashes, bullets, zero-width space
    }
    return Special::none;
}

class Lexer {
public:
    Lexer(std::string_view text, const Deadline& deadline) : text_(text), deadline_(deadline) {}

    TokenStream run() {
        TokenStream out;
        if (text_.starts_with("#!")) {
            std::size_t end = text_.find('\n');
            if (end == std::string_view::npos) end = text_.size();
            emit(out, TokenKind::comment, 0, end);
        }
        while (true) {
            deadline_.poll();
            skip_whitespace();
            if (pos_ >= text_.size()) {
                emit(out, TokenKind::eof, pos_, pos_);
                break;
            }
            lex_one(out);
        }
        return out;
    }

private:
    std::string_view text_;
    const Deadline& deadline_;
    std::size_t pos_ = 0;
    std::size_t trivia_start_ = 0;
    bool saw_newline_ = false;
    // Brace stack: true entries mark a `${` opened inside a template.
    std::vector<bool> braces_;
    std::size_t last_significant_index_ = SIZE_MAX;

    [[nodiscard]] unsigned char at(std::size_t i) const {
        return i < text_.size() ? static_cast<unsigned char>(text_[i]) : 0;
    }

    void skip_whitespace() {
        while (pos_ < text_.size()) {
            unsigned char c = at(pos_);
            if (c == '\n') {
                saw_newline_ = true;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
                ++pos_;
            } else if (c >= 0x80) {
                auto s = classify_unicode(text_, pos_);
                if (s == Special::space) {
                    pos_ += utf8_length(c);
                } else if (s == Special::line_break) {
                    saw_newline_ = true;
                    pos_ += 3;
                } else {
                    break;
                }
            } else {
                break;
            }
        }
    }

    void emit(TokenStream& out, TokenKind kind, std::size_t start, std::size_t end) {
        Token t;
        t.kind = kind;
        t.leading = Span{trivia_start_, start - trivia_start_};
        t.span = Span{start, end - start};
        t.text = text_.substr(start, end - start);
        t.newline_before = saw_newline_;
        out.tokens.push_back(t);
        if (kind != TokenKind::comment) {
            saw_newline_ = false;
            last_significant_index_ = out.tokens.size() - 1;
        } else if (t.text.find('\n') != std::string_view::npos) {
            saw_newline_ = true;
        }
        trivia_start_ = end;
        pos_ = end;
    }

    void error(TokenStream& out, int code, Span span) {
        out.diagnostics.push_back(make_diagnostic(code, span));
    }

    [[nodiscard]] bool regex_allowed(const TokenStream& out) const {
        if (last_significant_index_ == SIZE_MAX) return true;
        const Token& prev = out.tokens[last_significant_index_];
        switch (prev.kind) {
            case TokenKind::identifier:
                return prev.text == "yield" || prev.text == "await";
            case TokenKind::number:
            case TokenKind::string:
            case TokenKind::regex:
            case TokenKind::template_full:
            case TokenKind::template_tail:
                return false;
            case TokenKind::keyword:
                return !(prev.text == "this" || prev.text == "super" || prev.text == "null" ||
                         prev.text == "true" || prev.text == "false");
            case TokenKind::punctuation:
                return !(prev.text == ")" || prev.text == "]" || prev.text == "}" ||
                         prev.text == "++" || prev.text == "--");
            default:
                return true;
        }
    }

    void lex_one(TokenStream& out) {
        std::size_t start = pos_;
        unsigned char c = at(pos_);

        if (c == '/' && at(pos_ + 1) == '/') {
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            emit(out, TokenKind::comment, start, end);
            return;
        }
        if (c == '/' && at(pos_ + 1) == '*') {
            std::size_t close = text_.find("*/", pos_ + 2);
            if (close == std::string_view::npos) {
                error(out, codes::close_comment_expected, Span{start, 2});
                emit(out, TokenKind::comment, start, text_.size());
            } else {
                emit(out, TokenKind::comment, start, close + 2);
            }
            return;
        }
        if (c == '\'' || c == '"') return lex_string(out, c);
        if (c == '`') return lex_template(out, start + 1, start);
        if (is_digit(c) || (c == '.' && is_digit(at(pos_ + 1)))) return lex_number(out);
        if (c >= 0x80 && classify_unicode(text_, pos_) == Special::invalid) {
            std::size_t end = std::min(text_.size(), pos_ + utf8_length(c));
            error(out, codes::invalid_character, Span{start, end - start});
            emit(out, TokenKind::error, start, end);
            return;
        }
        bool private_name = c == '#' && (is_ident_start(at(pos_ + 1)) || at(pos_ + 1) >= 0x80);
        if (is_ident_start(c) || private_name) {
            std::size_t end = private_name ? pos_ + 1 : pos_;
            while (end < text_.size()) {
                unsigned char d = at(end);
                if (d >= 0x80) {
                    if (classify_unicode(text_, end) != Special::none) break;
                    end += utf8_length(d);
                } else if (is_ident_part(d)) {
                    ++end;
                } else {
                    break;
                }
            }
            end = std::min(end, text_.size());
            auto word = text_.substr(start, end - start);
            emit(out, is_keyword(word) ? TokenKind::keyword : TokenKind::identifier, start, end);
            return;
        }
        if (c == '}' && !braces_.empty() && braces_.back()) {
            braces_.pop_back();
            return lex_template(out, start + 1, start);
        }
        if (c == '/' && regex_allowed(out)) return lex_regex(out);

        for (auto p : kPunctuators) {
            if (text_.substr(pos_).starts_with(p)) {
                if (p == "?." && is_digit(at(pos_ + 2))) continue;
                if (p == "{") braces_.push_back(false);
                if (p == "}" && !braces_.empty()) braces_.pop_back();
                emit(out, TokenKind::punctuation, start, start + p.size());
                return;
            }
        }
        // Remaining single-character punctuators handled separately so the
        // table above stays sorted longest-first.
        if (c == '?' || c == ':' || c == '.' || c == '=' || c == '!' || c == '~') {
            emit(out, TokenKind::punctuation, start, start + 1);
            return;
        }
        std::size_t end = std::min(text_.size(), pos_ + utf8_length(c));
        error(out, codes::invalid_character, Span{start, end - start});
        emit(out, TokenKind::error, start, end);
    }

    void lex_string(TokenStream& out, unsigned char quote) {
        std::size_t start = pos_;
        std::size_t i = pos_ + 1;
        while (i < text_.size()) {
            unsigned char d = at(i);
            if (d == '\\') {
                i += 2;
                continue;
            }
            if (d == quote) {
                emit(out, TokenKind::string, start, i + 1);
                return;
            }
            if (d == '\n') break;
            ++i;
        }
        i = std::min(i, text_.size());
        error(out, codes::unterminated_string, Span{start, i - start});
        emit(out, TokenKind::string, start, i);
    }

    // `body` is the first byte after the opening ` or }.
    void lex_template(TokenStream& out, std::size_t body, std::size_t start) {
        const bool head = text_[start] == '`';
        std::size_t i = body;
        while (i < text_.size()) {
            unsigned char d = at(i);
            if (d == '\\') {
                i += 2;
                continue;
            }
            if (d == '`') {
                emit(out, head ? TokenKind::template_full : TokenKind::template_tail, start, i + 1);
                return;
            }
            if (d == '$' && at(i + 1) == '{') {
                braces_.push_back(true);
                emit(out, head ? TokenKind::template_head : TokenKind::template_middle, start, i + 2);
                return;
            }
            ++i;
        }
        i = std::min(i, text_.size());
        error(out, codes::unterminated_template, Span{start, i - start});
        emit(out, head ? TokenKind::template_full : TokenKind::template_tail, start, i);
    }

    void lex_number(TokenStream& out) {
        std::size_t start = pos_;
        std::size_t i = pos_;
        auto digits = [&](auto pred) {
            while (i < text_.size() && (pred(at(i)) || at(i) == '_')) ++i;
        };
        if (at(i) == '0' && (at(i + 1) == 'x' || at(i + 1) == 'X')) {
            i += 2;
            digits([](unsigned char d) { return std::isxdigit(d) != 0; });
        } else if (at(i) == '0' && (at(i + 1) == 'o' || at(i + 1) == 'O' || at(i + 1) == 'b' ||
                                    at(i + 1) == 'B')) {
            i += 2;
            digits([](unsigned char d) { return is_digit(d); });
        } else {
            digits([](unsigned char d) { return is_digit(d); });
            if (at(i) == '.') {
                ++i;
                digits([](unsigned char d) { return is_digit(d); });
            }
            if ((at(i) == 'e' || at(i) == 'E') &&
                (is_digit(at(i + 1)) ||
                 ((at(i + 1) == '+' || at(i + 1) == '-') && is_digit(at(i + 2))))) {
                i += 2;
                digits([](unsigned char d) { return is_digit(d); });
            }
        }
        if (at(i) == 'n') ++i;
        emit(out, TokenKind::number, start, i);
    }

    void lex_regex(TokenStream& out) {
        std::size_t start = pos_;
        std::size_t i = pos_ + 1;
        bool in_class = false;
        while (i < text_.size()) {
            unsigned char d = at(i);
            if (d == '\n') break;
            if (d == '\\') {
                i += 2;
                continue;
            }
            if (d == '[') in_class = true;
            else if (d == ']') in_class = false;
            else if (d == '/' && !in_class) {
                ++i;
                while (i < text_.size() && is_ident_part(at(i)) && at(i) < 0x80) ++i;
                emit(out, TokenKind::regex, start, i);
                return;
            }
            ++i;
        }
        i = std::min(i, text_.size());
        error(out, codes::unterminated_regex, Span{start, i - start});
        emit(out, TokenKind::regex, start, i);
    }
};

}  // namespace lex_detail

/// Splits text into a tiling token stream. Never fails: unknown characters
/// become error tokens and lexical problems are reported as diagnostics.
inline TokenStream tokenize(std::string_view text, const Deadline& deadline = {}) {
    return lex_detail::Lexer(text, deadline).run();
}

inline std::string_view to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::identifier: return "identifier";
        case TokenKind::keyword: return "keyword";
        case TokenKind::punctuation: return "punctuation";
        case TokenKind::string: return "string";
        case TokenKind::number: return "number";
        case TokenKind::template_full: return "template";
        case TokenKind::template_head: return "template-head";
        case TokenKind::template_middle: return "template-middle";
        case TokenKind::template_tail: return "template-tail";
        case TokenKind::regex: return "regex";
        case TokenKind::comment: return "comment";
        case TokenKind::error: return "error";
        case TokenKind::eof: return "eof";
    }
    return "?";
}

}  // namespace ncc
