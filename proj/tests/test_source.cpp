#include <gtest/gtest.h>

#include "ncc/source.hpp"
#include "test_support.hpp"

using namespace ncc;

TEST(LineIndex, EmptyTextHasOneEmptyLine) {
    EXPECT_EQ(build_line_index(""), (LineIndex{{1, 0, 0}}));
}

TEST(LineIndex, TwoLines) {
    EXPECT_EQ(build_line_index("a\nb"), (LineIndex{{1, 0, 1}, {2, 2, 1}}));
}

TEST(LineIndex, MotivatingSnippetHasEightLines) {
    std::string text = test::read_fixture("figures/fig1.js");
    // the file ends with a newline, so drop it to count the 8 source lines
    ASSERT_EQ(text.back(), '\n');
    text.pop_back();
    auto lines = build_line_index(text);
    ASSERT_EQ(lines.size(), 8u);
    EXPECT_EQ(line_text(text, lines[7]), "};");
    EXPECT_EQ(line_text(text, lines[0]), "http.get(url, function(res) {");
}

TEST(LineIndex, OffsetsTileTheText) {
    std::string text = "ab\n\ncd\n";
    auto lines = build_line_index(text);
    ASSERT_EQ(lines.size(), 4u);
    std::string rebuilt;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) rebuilt += '\n';
        rebuilt += line_text(text, lines[i]);
    }
    EXPECT_EQ(rebuilt, text);
}

TEST(LineOf, FirstAndSecondLine) {
    Snippet s("t", "a\nb");
    EXPECT_EQ(line_of(Span{0, 1}, s), 1);
    EXPECT_EQ(line_of(Span{2, 1}, s), 2);
}

TEST(LineOf, OutOfRange) {
    Snippet s("t", "a\nb");
    EXPECT_FALSE(line_of(Span{99, 1}, s).has_value());
}

TEST(LineOf, NewlineBelongsToItsLine) {
    Snippet s("t", "a\nb");
    EXPECT_EQ(line_of(Span{1, 0}, s), 1);
}

TEST(CommentOut, ClosingBrace) { EXPECT_EQ(comment_out_line("};", 1), "//};"); }

TEST(CommentOut, SecondLine) { EXPECT_EQ(comment_out_line("a\nb", 2), "a\n//b"); }

TEST(CommentOut, AlreadyCommentedIsPrefixedAgain) { EXPECT_EQ(comment_out_line("//x", 1), "////x"); }

TEST(CommentOut, OutOfBoundsIsUsageError) {
    EXPECT_THROW(comment_out_line("a\nb", 3), UsageError);
    EXPECT_THROW(comment_out_line("a\nb", 0), UsageError);
}

TEST(CommentOut, SnippetOverloadKeepsIdentity) {
    Snippet s("id-1", "x\ny", FileOrigin{"f.js"});
    Snippet out = comment_out_line(s, 1);
    EXPECT_EQ(out.id(), "id-1");
    EXPECT_EQ(out.text(), "//x\ny");
    EXPECT_EQ(out.origin(), Origin(FileOrigin{"f.js"}));
}

TEST(Snippet, NormalizesWindowsNewlines) {
    Snippet s("t", "a\r\nb\rc");
    EXPECT_EQ(s.text(), "a\nb\nc");
    EXPECT_EQ(s.line_count(), 3);
}

TEST(LinePredicates, CommentedAndBlank) {
    EXPECT_TRUE(is_commented_line("  // x"));
    EXPECT_FALSE(is_commented_line("x // y"));
    EXPECT_TRUE(is_blank_line(" \t"));
    EXPECT_FALSE(is_blank_line(" a"));
}

TEST(DiagnosticOrder, ByStartThenCode) {
    Diagnostic a{2304, DiagnosticCategory::semantic, "", Span{3, 1}, 1};
    Diagnostic b{1005, DiagnosticCategory::syntax, "", Span{3, 1}, 1};
    Diagnostic c{1005, DiagnosticCategory::syntax, "", Span{1, 1}, 1};
    EXPECT_TRUE(diagnostic_order(c, a));
    EXPECT_TRUE(diagnostic_order(b, a));
    EXPECT_FALSE(diagnostic_order(a, b));
}
