#include <gtest/gtest.h>

#include "ncc/edits.hpp"

using namespace ncc;

namespace {

FixAction action(std::string id, std::vector<TextChange> changes) {
    return FixAction{std::move(id), "", std::move(changes), Diagnostic{}};
}

}  // namespace

TEST(Conflict, Rules) {
    EXPECT_TRUE(changes_conflict({0, 3}, {2, 3}));
    EXPECT_FALSE(changes_conflict({0, 3}, {3, 3}));
    EXPECT_TRUE(changes_conflict({4, 0}, {4, 0}));
    EXPECT_FALSE(changes_conflict({4, 0}, {4, 3}));
    EXPECT_FALSE(changes_conflict({7, 0}, {4, 3}));
    EXPECT_TRUE(changes_conflict({5, 0}, {4, 3}));
    EXPECT_TRUE(changes_conflict({4, 3}, {5, 0}));
}

TEST(Batch, DisjointReplacementsEqualSequentialApplication) {
    std::string text = "let abc = def;";
    auto r = apply_batch(text, {action("a", {{{4, 3}, "xyz"}}), action("b", {{{10, 3}, "uvw"}})});
    EXPECT_EQ(r.text, "let xyz = uvw;");
    std::string seq = text;
    seq.replace(10, 3, "uvw");
    seq.replace(4, 3, "xyz");
    EXPECT_EQ(r.text, seq);
    EXPECT_EQ(r.applied.size(), 2u);
}

TEST(Batch, SameSpanKeepsFirstAction) {
    auto r = apply_batch("let abc = 1;", {action("first", {{{4, 3}, "one"}}), action("second", {{{4, 3}, "two"}})});
    EXPECT_EQ(r.text, "let one = 1;");
    ASSERT_EQ(r.applied.size(), 1u);
    EXPECT_EQ(r.applied[0].fix_id, "first");
}

TEST(Batch, ShorterChangeSortsFirst) {
    auto r = apply_batch("abcdefgh", {action("long", {{{2, 4}, "L"}}), action("short", {{{2, 2}, "S"}})});
    EXPECT_EQ(r.text, "abSefgh");
    ASSERT_EQ(r.applied.size(), 1u);
    EXPECT_EQ(r.applied[0].fix_id, "short");
}

TEST(Batch, EmptyActionListIsIdentity) {
    auto r = apply_batch("unchanged", {});
    EXPECT_EQ(r.text, "unchanged");
    EXPECT_TRUE(r.applied.empty());
}

TEST(Batch, InsertionBeforeReplacementAtSameOffset) {
    auto r = apply_batch("abc", {action("rep", {{{0, 1}, "X"}}), action("ins", {{{0, 0}, ">"}})});
    EXPECT_EQ(r.text, ">Xbc");
}

TEST(Batch, OutOfRangeIsUsageError) {
    EXPECT_THROW(apply_batch("abc", {action("bad", {{{2, 5}, "x"}})}), UsageError);
    EXPECT_THROW(apply_batch("abc", {action("bad", {{{4, 0}, "x"}})}), UsageError);
}

TEST(Batch, PartiallyKeptActionIsReported) {
    auto r = apply_batch("abcdef", {action("a", {{{0, 2}, "X"}}), action("b", {{{1, 1}, "Y"}, {{4, 1}, "Z"}})});
    EXPECT_EQ(r.text, "XcdZf");
    EXPECT_EQ(r.applied.size(), 2u);
    EXPECT_EQ(r.kept.size(), 2u);
}
