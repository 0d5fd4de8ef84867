#include <gtest/gtest.h>

#include "ncc/fixes.hpp"
#include "test_support.hpp"

using namespace ncc;

namespace {

const Diagnostic* first_with(const Analysis& a, int code) {
    for (const auto& d : a.diagnostics)
        if (d.code == code) return &d;
    return nullptr;
}

}  // namespace

TEST(Targeted, MotivatingSnippetGetsRequireAndPlaceholder) {
    std::string text = test::read_fixture("figures/fig1.js");
    auto out = targeted_fixes(check(text));
    ASSERT_EQ(out.applied.size(), 2u);
    EXPECT_EQ(out.applied[0].fix_id, "insertRequire");
    EXPECT_EQ(out.applied[1].fix_id, "declarePlaceholder");
    std::string expected = "const http = require(\"http\");\n"
                           "var url = \"YOUR VALUE HERE\"; // Suggested Type: string | RequestOptions | URL\n" +
                           text;
    EXPECT_EQ(out.text_after, expected);
    ASSERT_EQ(out.diagnostics_after.size(), 1u);
    EXPECT_EQ(out.diagnostics_after[0].code, codes::statement_expected);
}

TEST(Targeted, MemberBaseDefaultsToString) {
    auto out = targeted_fixes(check(test::read_fixture("figures/fig9.js")));
    EXPECT_EQ(out.text_after, "var s = \"YOUR VALUE HERE\";\nvar words = s.split(\" \");\n");
    EXPECT_TRUE(out.diagnostics_after.empty());
}

TEST(Targeted, UndefinedFunctionIsIgnored) {
    auto out = targeted_fixes(check("undefFn();"));
    EXPECT_TRUE(out.applied.empty());
    EXPECT_EQ(out.text_after, "undefFn();");
    ASSERT_EQ(out.skipped.size(), 1u);
    EXPECT_EQ(out.skipped[0].reason, "undefined function");
    EXPECT_FALSE(out.skipped[0].action.has_value());
}

TEST(Targeted, NumberPlaceholderFromSignature) {
    auto out = targeted_fixes(check("var m = Math.max(n);"));
    EXPECT_EQ(out.text_after, "var n = 0;\nvar m = Math.max(n);");
}

TEST(Targeted, CallbackPlaceholderCarriesHint) {
    auto out = targeted_fixes(check("setTimeout(cb, 10);"));
    ASSERT_EQ(out.applied.size(), 1u);
    EXPECT_EQ(out.text_after, "var cb = \"YOUR VALUE HERE\"; // Suggested Type: Function\nsetTimeout(cb, 10);");
}

TEST(Targeted, RequireGoesAfterShebang) {
    auto out = targeted_fixes(check("#!/usr/bin/env node\nconsole.log(os.platform());"));
    EXPECT_EQ(out.text_after, "#!/usr/bin/env node\nconst os = require(\"os\");\nconsole.log(os.platform());");
}

TEST(Targeted, PlaceholderKeepsIndentOfStatement) {
    auto out = targeted_fixes(check("  var words = s.split(\" \");"));
    EXPECT_EQ(out.text_after, "  var s = \"YOUR VALUE HERE\";\n  var words = s.split(\" \");");
}

TEST(Targeted, NoisyLineIsSkipped) {
    auto out = targeted_fixes(check("npm install foo"));
    EXPECT_TRUE(out.applied.empty());
    ASSERT_FALSE(out.skipped.empty());
    EXPECT_EQ(out.skipped[0].reason, "line has other syntax errors");
}

TEST(Targeted, IncreaseIsRejected) {
    // placeholder text is inserted verbatim, so a stray quote breaks the literal
    TargetedOptions o;
    o.placeholder = "a\"b";
    std::string text = "var n = app.length;";
    auto out = targeted_fixes(check(text), default_environment(), {}, o);
    EXPECT_TRUE(out.applied.empty());
    EXPECT_EQ(out.text_after, text);
    ASSERT_EQ(out.skipped.size(), 1u);
    EXPECT_TRUE(out.skipped[0].reason.starts_with("diagnostics increased from 1 to ")) << out.skipped[0].reason;
    ASSERT_TRUE(out.skipped[0].action.has_value());
    EXPECT_EQ(out.skipped[0].action->fix_id, "declarePlaceholder");
}

TEST(Targeted, OptionsAreHonored) {
    TargetedOptions o;
    o.placeholder = "Your Value Here";
    o.quote = '\'';
    o.require_keyword = "var";
    auto out = targeted_fixes(check("fs.readFileSync(p);"), default_environment(), {}, o);
    EXPECT_EQ(out.text_after, "var fs = require('fs');\nvar p = 'Your Value Here'; // Suggested Type: PathLike | number\n"
                              "fs.readFileSync(p);");
}

TEST(Targeted, OutputIsAFixedPoint) {
    for (const char* src : {"http.get(url, cb);", "a.b(c);\nd(e);", "x + y;"}) {
        auto once = targeted_fixes(check(src));
        auto twice = targeted_fixes(check(once.text_after));
        EXPECT_TRUE(twice.applied.empty()) << src;
    }
}

TEST(Codefix, SpellingFix) {
    auto a = check("conzole.log(1)");
    const Diagnostic* d = first_with(a, codes::cannot_find_name_did_you_mean);
    ASSERT_NE(d, nullptr);
    auto fixes = codefixes_for(*d, a);
    ASSERT_EQ(fixes.size(), 1u);
    EXPECT_EQ(fixes[0].fix_id, "fixSpelling");
    ASSERT_EQ(fixes[0].changes.size(), 1u);
    EXPECT_EQ(fixes[0].changes[0], (TextChange{Span{0, 7}, "console"}));
}

TEST(Codefix, PlainCannotFindNameHasNoCodefix) {
    auto a = check("var words = s.split(\" \");");
    const Diagnostic* d = first_with(a, codes::cannot_find_name);
    ASSERT_NE(d, nullptr);
    EXPECT_TRUE(codefixes_for(*d, a).empty());
}

TEST(Codefix, UnregisteredCodeHasNoCodefix) {
    auto a = check("return 1;");
    ASSERT_EQ(a.diagnostics.size(), 1u);
    EXPECT_TRUE(codefixes_for(a.diagnostics[0], a).empty());
}

TEST(Codefix, MissingParenthesis) {
    auto out = apply_codefixes(check("foo(1, 2\nconsole.log(3);"));
    EXPECT_EQ(out.text_after, "foo(1, 2)\nconsole.log(3);");
}

TEST(Codefix, BatchAppliesEveryFix) {
    auto out = apply_codefixes(check("conzole.log(1);\nconsoel.log(2);"));
    EXPECT_EQ(out.text_after, "console.log(1);\nconsole.log(2);");
    EXPECT_TRUE(out.diagnostics_after.empty());
    EXPECT_EQ(out.applied.size(), 2u);
}

TEST(Codefix, CustomRegistry) {
    CodefixRegistry r;
    r.add(codes::return_outside_function, [](const Diagnostic& d, const Analysis&) {
        return std::vector<FixAction>{{"dropReturn", "", {TextChange{Span{d.span.start, 7}, ""}}, d}};
    });
    auto out = apply_codefixes(check("return 1;"), default_environment(), {}, r);
    EXPECT_EQ(out.text_after, "1;");
    EXPECT_EQ(r.codes(), std::vector<int>{codes::return_outside_function});
}

TEST(Codefix, WorseningBatchIsReverted) {
    CodefixRegistry r;
    r.add(codes::return_outside_function, [](const Diagnostic& d, const Analysis&) {
        return std::vector<FixAction>{{"breakIt", "", {TextChange{Span{d.span.start, 0}, "( ( "}}, d}};
    });
    auto out = apply_codefixes(check("return 1;"), default_environment(), {}, r);
    EXPECT_EQ(out.text_after, "return 1;");
    EXPECT_TRUE(out.applied.empty());
    ASSERT_EQ(out.skipped.size(), 1u);
}
