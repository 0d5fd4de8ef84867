#include <gtest/gtest.h>

#include "ncc/analyzer.hpp"
#include "ncc/deletion.hpp"
#include "test_support.hpp"

using namespace ncc;

namespace {

const CheckFunction real_check = [](std::string_view t) { return check(t).diagnostics; };

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto nl = text.find('\n', start);
        out.push_back(text.substr(start, nl == std::string::npos ? std::string::npos : nl - start));
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return out;
}

std::string with_commented(const std::vector<std::string>& lines, unsigned mask) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += '\n';
        if (mask & (1u << i)) out += "//";
        out += lines[i];
    }
    return out;
}

std::size_t exhaustive_minimum(const std::string& text) {
    auto lines = split_lines(text);
    std::size_t best = SIZE_MAX;
    for (unsigned mask = 0; mask < (1u << lines.size()); ++mask)
        best = std::min(best, check(with_commented(lines, mask)).diagnostics.size());
    return best;
}

Diagnostic diag_at(std::size_t start, std::size_t length = 1) {
    return Diagnostic{codes::cannot_find_name, DiagnosticCategory::semantic, "x", Span{start, length}, 0};
}

}  // namespace

TEST(Deletion, MotivatingSnippetAfterTargetedFixes) {
    std::string text = "const http = require(\"http\");\n"
                       "var url = \"YOUR VALUE HERE\"; // Suggested Type: string | RequestOptions | URL\n" +
                       test::read_fixture("figures/fig1.js");
    auto r = delete_lines(text, real_check);
    EXPECT_TRUE(r.diagnostics.empty());
    EXPECT_EQ(r.commented_lines, std::vector<int>{10});
    EXPECT_NE(r.text.find("\n//};\n"), std::string::npos);
    EXPECT_EQ(r.text, comment_out_line(text, 10));
}

TEST(Deletion, ErrorFreeInputCostsOneCompile) {
    auto r = delete_lines("var x = 1;", real_check);
    EXPECT_EQ(r.text, "var x = 1;");
    EXPECT_EQ(r.compile_count, 1);
    EXPECT_EQ(r.lines_commented, 0);
}

TEST(Deletion, TwoBrokenDeclarations) {
    std::string text = "var x = ;\nvar y = ;";
    auto r = delete_lines(text, real_check);
    EXPECT_EQ(r.text, "//var x = ;\n//var y = ;");
    EXPECT_TRUE(r.diagnostics.empty());
    EXPECT_EQ(exhaustive_minimum(text), 0u);
    EXPECT_TRUE(r.emptied);
}

TEST(Deletion, EverySingleDeletionWorsens) {
    std::string text = "if (zzz) { if (1) {\n}}";
    auto initial = check(text).diagnostics;
    ASSERT_EQ(initial.size(), 1u);
    auto lines = split_lines(text);
    for (unsigned i = 0; i < lines.size(); ++i)
        ASSERT_GT(check(with_commented(lines, 1u << i)).diagnostics.size(), initial.size()) << "line " << i + 1;
    auto r = delete_lines(text, real_check);
    EXPECT_EQ(r.text, text);
    EXPECT_EQ(r.compile_count, 1 + static_cast<int>(initial.size()));
    EXPECT_GE(r.diagnostics.size(), exhaustive_minimum(text));
}

TEST(Deletion, ProvidedInitialDiagnosticsSaveACompile) {
    std::string text = "var x = ;";
    auto initial = check(text).diagnostics;
    auto r = delete_lines(text, real_check, {}, &initial);
    EXPECT_EQ(r.compile_count, 1);
    EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Deletion, TiesAreAdopted) {
    int calls = 0;
    CheckFunction fake = [&](std::string_view t) {
        ++calls;
        // always one error, on the first uncommented line
        auto lines = build_line_index(t);
        for (const auto& l : lines)
            if (!is_commented_line(line_text(t, l))) return std::vector<Diagnostic>{diag_at(l.start)};
        return std::vector<Diagnostic>{};
    };
    auto r = delete_lines("a\nb\nc", fake);
    EXPECT_EQ(r.text, "//a\n//b\n//c");
    EXPECT_EQ(r.commented_lines, (std::vector<int>{1, 2, 3}));
}

TEST(Deletion, CommentedLinesAreNotRetried) {
    CheckFunction fake = [](std::string_view t) { return std::vector<Diagnostic>{diag_at(t.find('x'))}; };
    auto r = delete_lines("//x\ny", fake);
    EXPECT_EQ(r.text, "//x\ny");
    EXPECT_EQ(r.compile_count, 1);
}

TEST(Deletion, OutOfRangeSpanStops) {
    CheckFunction fake = [](std::string_view t) { return std::vector<Diagnostic>{diag_at(t.size() + 5)}; };
    auto r = delete_lines("abc", fake);
    EXPECT_TRUE(r.out_of_range_stop);
    EXPECT_EQ(r.text, "abc");
}

TEST(Deletion, CompileBudget) {
    CheckFunction fake = [](std::string_view t) {
        std::vector<Diagnostic> out;
        for (const auto& l : build_line_index(t))
            if (!is_commented_line(line_text(t, l))) out.push_back(diag_at(l.start));
        return out;
    };
    DeletionBudget budget;
    budget.max_compiles = 3;
    auto r = delete_lines("a\nb\nc\nd\ne", fake, budget);
    EXPECT_TRUE(r.budget_exhausted);
    EXPECT_EQ(r.compile_count, 3);
    EXPECT_EQ(r.lines_commented, 2);
}

TEST(Deletion, CancellationKeepsBestSoFar) {
    int calls = 0;
    CheckFunction fake = [&](std::string_view t) {
        if (++calls == 3) throw Cancelled();
        std::vector<Diagnostic> out;
        for (const auto& l : build_line_index(t))
            if (!is_commented_line(line_text(t, l))) out.push_back(diag_at(l.start));
        return out;
    };
    auto r = delete_lines("a\nb\nc", fake);
    EXPECT_TRUE(r.timed_out);
    EXPECT_EQ(r.text, "//a\nb\nc");
    EXPECT_EQ(r.diagnostics.size(), 2u);
}

TEST(Deletion, ProseIsEmptied) {
    auto r = delete_lines("Install it with npm", real_check);
    EXPECT_EQ(r.text, "//Install it with npm");
    EXPECT_TRUE(r.emptied);
    EXPECT_TRUE(r.diagnostics.empty());
}

TEST(AllLinesCommented, RequiresOneCommentedLine) {
    EXPECT_FALSE(all_lines_commented(""));
    EXPECT_FALSE(all_lines_commented("\n  \n"));
    EXPECT_TRUE(all_lines_commented("//a\n\n  //b"));
    EXPECT_FALSE(all_lines_commented("//a\nb"));
}
