#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ncc {

/// Thrown on contract violations by callers (bad line numbers, out-of-range edits).
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Byte range into UTF-8 text. Offsets are 0-based.
struct Span {
    std::size_t start = 0;
    std::size_t length = 0;

    [[nodiscard]] constexpr std::size_t end() const { return start + length; }
    [[nodiscard]] constexpr bool in_range(std::string_view text) const {
        return start <= text.size() && length <= text.size() - start;
    }
    [[nodiscard]] constexpr bool contains(std::size_t offset) const {
        return offset >= start && offset < end();
    }

    friend constexpr bool operator==(Span, Span) = default;
};

struct LineRecord {
    int number = 1;           // 1-based
    std::size_t start = 0;    // byte offset of the first character
    std::size_t length = 0;   // bytes, excluding the '\n'

    friend constexpr bool operator==(const LineRecord&, const LineRecord&) = default;
};

using LineIndex = std::vector<LineRecord>;

/// Splits text on '\n'. Empty text yields a single empty line; a trailing
/// newline yields a final empty line.
inline LineIndex build_line_index(std::string_view text) {
    LineIndex lines;
    std::size_t start = 0;
    int number = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n') {
            lines.push_back({number++, start, i - start});
            start = i + 1;
        }
    }
    lines.push_back({number, start, text.size() - start});
    return lines;
}

/// Line containing `offset`, or nullopt when the offset is at or past the end.
inline std::optional<int> line_of_offset(const LineIndex& lines, std::size_t text_size,
                                         std::size_t offset) {
    if (offset >= text_size) return std::nullopt;
    auto it = std::upper_bound(lines.begin(), lines.end(), offset,
                               [](std::size_t off, const LineRecord& l) { return off < l.start; });
    return std::prev(it)->number;
}

inline std::string_view line_text(std::string_view text, const LineRecord& line) {
    return text.substr(line.start, line.length);
}

/// "\r\n" and lone "\r" become "\n".
inline std::string normalize_newlines(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r') {
            out.push_back('\n');
            if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        } else {
            out.push_back(text[i]);
        }
    }
    return out;
}

struct MarkdownOrigin {
    std::string package;
    friend bool operator==(const MarkdownOrigin&, const MarkdownOrigin&) = default;
};
struct FileOrigin {
    std::string path;
    friend bool operator==(const FileOrigin&, const FileOrigin&) = default;
};
struct InlineOrigin {
    friend bool operator==(const InlineOrigin&, const InlineOrigin&) = default;
};

using Origin = std::variant<MarkdownOrigin, FileOrigin, InlineOrigin>;

/// A code fragment plus where it came from. Text is newline-normalized on
/// construction so every offset downstream refers to '\n'-only text.
class Snippet {
public:
    Snippet() : lines_(build_line_index("")) {}
    Snippet(std::string id, std::string_view text, Origin origin = InlineOrigin{})
        : id_(std::move(id)),
          text_(normalize_newlines(text)),
          origin_(std::move(origin)),
          lines_(build_line_index(text_)) {}

    [[nodiscard]] const std::string& id() const { return id_; }
    [[nodiscard]] const std::string& text() const { return text_; }
    [[nodiscard]] const Origin& origin() const { return origin_; }
    [[nodiscard]] const LineIndex& lines() const { return lines_; }
    [[nodiscard]] int line_count() const { return static_cast<int>(lines_.size()); }

    [[nodiscard]] Snippet with_text(std::string_view text) const { return {id_, text, origin_}; }

private:
    std::string id_;
    std::string text_;
    Origin origin_;
    LineIndex lines_;
};

/// Line containing span.start, or nullopt when the span starts past the text.
inline std::optional<int> line_of(Span span, const Snippet& snippet) {
    return line_of_offset(snippet.lines(), snippet.text().size(), span.start);
}

/// Prefixes line `line` (1-based) with "//". Other bytes are untouched.
inline std::string comment_out_line(std::string_view text, int line) {
    auto lines = build_line_index(text);
    if (line < 1 || line > static_cast<int>(lines.size()))
        throw UsageError("comment_out_line: line " + std::to_string(line) + " out of bounds");
    std::string out(text);
    out.insert(lines[static_cast<std::size_t>(line - 1)].start, "//");
    return out;
}

inline Snippet comment_out_line(const Snippet& snippet, int line) {
    return snippet.with_text(comment_out_line(snippet.text(), line));
}

/// True when the line, after leading whitespace, starts with "//".
inline bool is_commented_line(std::string_view line) {
    auto pos = line.find_first_not_of(" \t");
    return pos != std::string_view::npos && line.substr(pos).starts_with("//");
}

inline bool is_blank_line(std::string_view line) {
    return line.find_first_not_of(" \t\f\v") == std::string_view::npos;
}

enum class DiagnosticCategory { syntax, semantic };

inline std::string_view to_string(DiagnosticCategory c) {
    return c == DiagnosticCategory::syntax ? "syntax" : "semantic";
}

struct Diagnostic {
    int code = 0;
    DiagnosticCategory category = DiagnosticCategory::syntax;
    std::string message;
    Span span;
    int line = 0;  // 1-based; 0 when the span is out of range

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Ascending by start, ties broken by code.
inline bool diagnostic_order(const Diagnostic& a, const Diagnostic& b) {
    if (a.span.start != b.span.start) return a.span.start < b.span.start;
    return a.code < b.code;
}

struct TextChange {
    Span span;
    std::string new_text;

    friend bool operator==(const TextChange&, const TextChange&) = default;
};

struct FixAction {
    std::string fix_id;
    std::string description;
    std::vector<TextChange> changes;
    Diagnostic target;

    friend bool operator==(const FixAction&, const FixAction&) = default;
};

}  // namespace ncc
