#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ncc/parser.hpp"
#include "test_support.hpp"

using namespace ncc;

namespace {

std::vector<std::pair<TokenKind, std::string>> kinds(std::string_view text) {
    std::vector<std::pair<TokenKind, std::string>> out;
    for (const auto& t : tokenize(text).tokens) out.emplace_back(t.kind, std::string(t.text));
    return out;
}

std::vector<int> codes_of(const std::vector<Diagnostic>& ds) {
    std::vector<int> out;
    for (const auto& d : ds) out.push_back(d.code);
    return out;
}

}  // namespace

TEST(Lexer, SimpleDeclaration) {
    using K = TokenKind;
    auto got = kinds("var x = 1;");
    std::vector<std::pair<TokenKind, std::string>> want{
        {K::keyword, "var"}, {K::identifier, "x"}, {K::punctuation, "="}, {K::number, "1"}, {K::punctuation, ";"},
        {K::eof, ""}};
    EXPECT_EQ(got, want);
}

TEST(Lexer, EmptyInputIsJustEof) {
    auto ts = tokenize("");
    ASSERT_EQ(ts.tokens.size(), 1u);
    EXPECT_EQ(ts.tokens[0].kind, TokenKind::eof);
    EXPECT_TRUE(ts.diagnostics.empty());
}

TEST(Lexer, MotivatingSnippetHasNoErrorTokens) {
    auto ts = tokenize(test::read_fixture("figures/fig1.js"));
    EXPECT_TRUE(ts.diagnostics.empty());
    for (const auto& t : ts.tokens) EXPECT_NE(t.kind, TokenKind::error) << t.text;
}

TEST(Lexer, LeadingWhitespaceAndTokensTileInput) {
    std::string text = "  a /* c */ + `t${b}u` // end\n/re/g.test(x)";
    auto ts = tokenize(text);
    std::string rebuilt;
    for (const auto& t : ts.tokens) {
        rebuilt += text.substr(t.leading.start, t.leading.length);
        rebuilt += text.substr(t.span.start, t.span.length);
    }
    EXPECT_EQ(rebuilt, text);
}

TEST(Lexer, RegexVersusDivision) {
    auto a = kinds("x = a / b / c;");
    EXPECT_EQ(std::count_if(a.begin(), a.end(), [](auto& p) { return p.first == TokenKind::regex; }), 0);
    auto b = kinds("x = /a+/g.test(s);");
    EXPECT_EQ(std::count_if(b.begin(), b.end(), [](auto& p) { return p.first == TokenKind::regex; }), 1);
}

TEST(Lexer, TemplatePieces) {
    using K = TokenKind;
    auto got = kinds("`a${b}c${d}e`");
    ASSERT_GE(got.size(), 5u);
    EXPECT_EQ(got[0].first, K::template_head);
    EXPECT_EQ(got[2].first, K::template_middle);
    EXPECT_EQ(got[4].first, K::template_tail);
}

TEST(Lexer, UnterminatedLiterals) {
    EXPECT_EQ(codes_of(tokenize("'abc").diagnostics), std::vector<int>{codes::unterminated_string});
    EXPECT_EQ(codes_of(tokenize("`abc").diagnostics), std::vector<int>{codes::unterminated_template});
    EXPECT_EQ(codes_of(tokenize("/* abc").diagnostics), std::vector<int>{codes::close_comment_expected});
}

TEST(Parser, MotivatingSnippetHasOneErrorOnTheHangingBrace) {
    std::string text = test::read_fixture("figures/fig1.js");
    auto r = parse(text);
    ASSERT_EQ(r.diagnostics.size(), 1u);
    EXPECT_EQ(r.diagnostics[0].category, DiagnosticCategory::syntax);
    std::size_t last_line = text.rfind("};");
    EXPECT_EQ(r.diagnostics[0].span.start, last_line);
}

TEST(Parser, TwoIndependentExpressionErrors) {
    auto r = parse("var x = ;\nvar y = ;");
    ASSERT_EQ(r.diagnostics.size(), 2u);
    EXPECT_EQ(r.diagnostics[0].code, codes::expression_expected);
    EXPECT_EQ(r.diagnostics[1].code, codes::expression_expected);
    EXPECT_EQ(r.diagnostics[0].span.start, 8u);
    EXPECT_EQ(r.diagnostics[1].span.start, 18u);
}

TEST(Parser, CleanDeclaration) { EXPECT_TRUE(parse("var x = 1;").diagnostics.empty()); }

TEST(Parser, TreeCoversInput) {
    std::string text = "if (a) {\n  b(1, [2, {c: 3}]);\n} else d = e ? f : g;\n";
    auto r = parse(text);
    EXPECT_TRUE(r.diagnostics.empty());
    EXPECT_EQ(r.tree.reprint(), text);
    EXPECT_EQ(r.tree.node(r.tree.root()).span, (Span{0, text.size()}));
}

TEST(Parser, ReprintIsLosslessOnBrokenInput) {
    std::string text = "foo(1, 2\n}}} var = ;\n`x${";
    EXPECT_EQ(parse(text).tree.reprint(), text);
}

TEST(Parser, ModernSyntaxAccepted) {
    const char* samples[] = {
        "const {a, b: [c, ...d] = []} = obj;",
        "const f = async (x, {y}) => { await x; };",
        "class A extends B { #p = 1; static m() { return super.m?.(); } get g() { return 1; } }",
        "for (const [k, v] of Object.entries(o)) {}",
        "for (let i = 0, n = a.length; i < n; i++) continue;",
        "label: for (;;) { break label; }",
        "x ?\?= y ?? z; a ||= b; c &&= d; e **= 2;",
        "function* g() { yield* other(); }",
        "const o = { a, [k]: 1, m() {}, async *n() {}, get x() { return 1; }, ...rest };",
        "new Foo;\nnew.target;",
        "try { a(); } catch { b(); } finally { c(); }",
        "switch (x) { case 1: case 2: y(); break; default: z(); }",
        "tag`a${b}c`;",
        "do x++; while (x < 5)",
        "import('x').then(m => m);",
    };
    for (const char* s : samples) EXPECT_TRUE(parse(s).diagnostics.empty()) << s;
}

TEST(Parser, MissingCloserIsRecordedAfterPreviousToken) {
    std::string text = "foo(1, 2\nbar(3);";
    auto r = parse(text);
    ASSERT_FALSE(r.tree.missing_closers().empty());
    const auto& c = r.tree.missing_closers().front();
    EXPECT_EQ(c.text, ")");
    EXPECT_EQ(c.insert_at, text.find('2') + 1);
    ASSERT_FALSE(r.diagnostics.empty());
    EXPECT_EQ(r.diagnostics.front().code, codes::token_expected);
    EXPECT_EQ(r.diagnostics.front().message, "')' expected.");
}

TEST(Parser, BareWordsReportUnexpectedIdentifier) {
    auto r = parse("npm install foo");
    auto cs = codes_of(r.diagnostics);
    EXPECT_EQ(std::count(cs.begin(), cs.end(), codes::unexpected_keyword_or_identifier), 2);
}

TEST(Parser, StrayClosingBraceIsStatementExpected) {
    auto r = parse("a();\n}\nb();");
    ASSERT_EQ(r.diagnostics.size(), 1u);
    EXPECT_EQ(r.diagnostics[0].code, codes::statement_expected);
}

TEST(Parser, IndependentErrorsOnSeparateLinesAllSurface) {
    std::string text = "var a = ;\nfoo(1, 2;\nx = * 5;\nvar b = ;\n";
    auto r = parse(text);
    auto index = build_line_index(text);
    std::set<int> lines;
    for (const auto& d : r.diagnostics) lines.insert(line_of_offset(index, text.size(), d.span.start).value_or(0));
    EXPECT_EQ(lines.size(), 4u);
}

TEST(Parser, DeepNestingIsBoundedAndReportedOnce) {
    std::string text(200000, '[');
    auto r = parse(text);
    auto cs = codes_of(r.diagnostics);
    EXPECT_EQ(std::count(cs.begin(), cs.end(), codes::nesting_too_deep), 1);
}

TEST(Parser, DeepButLegalNestingParses) {
    std::string text = std::string(300, '(') + "1" + std::string(300, ')') + ";";
    EXPECT_TRUE(parse(text).diagnostics.empty());
}

TEST(Parser, DiagnosticsAreSortedAndUniquePerStart) {
    auto r = parse("var = = ;\n) ) (\n'x\n");
    for (std::size_t i = 1; i < r.diagnostics.size(); ++i) {
        EXPECT_TRUE(diagnostic_order(r.diagnostics[i - 1], r.diagnostics[i]));
        EXPECT_NE(r.diagnostics[i - 1].span.start, r.diagnostics[i].span.start);
    }
}

TEST(Parser, CancelledByExpiredDeadline) {
    Deadline d(std::chrono::milliseconds(0));
    std::string text;
    for (int i = 0; i < 20000; ++i) text += "a(b, c);\n";
    EXPECT_THROW(parse(text, d), Cancelled);
}
