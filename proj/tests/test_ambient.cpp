#include <gtest/gtest.h>

#include "ncc/ambient.hpp"
#include "test_support.hpp"

using namespace ncc;

TEST(AmbientData, EmbeddedCopyMatchesDataFile) {
    EXPECT_EQ(std::string(kAmbientJson), test::read_file(NCC_AMBIENT_JSON))
        << "regenerate include/ncc/ambient_data.hpp with tools/embed_ambient.py";
}

TEST(AmbientData, DefaultEnvironmentLoads) {
    const auto& env = default_environment();
    for (const char* g : {"console", "require", "process", "Buffer", "setTimeout", "Math", "JSON", "module",
                          "exports", "__dirname", "Promise", "URL"})
        EXPECT_TRUE(env.is_global(g)) << g;
    for (const char* m : {"http", "https", "fs", "path", "url", "os", "crypto", "events", "util", "stream",
                          "child_process", "zlib"})
        EXPECT_NE(env.module(m), nullptr) << m;
    EXPECT_FALSE(env.is_global("prompt"));
    EXPECT_EQ(env.module("express"), nullptr);
}

TEST(AmbientData, NodePrefixedModules) {
    const auto& env = default_environment();
    EXPECT_EQ(env.module("node:fs"), env.module("fs"));
}

TEST(AmbientData, HttpGetFirstParameter) {
    const auto* http = default_environment().module("http");
    ASSERT_NE(http, nullptr);
    auto it = http->members.find("get");
    ASSERT_NE(it, http->members.end());
    EXPECT_EQ(it->second.signature.param(0), "string | RequestOptions | URL");
    EXPECT_EQ(TypeHint::from_param(*it->second.signature.param(0)),
              (TypeHint{HintKind::complex, "string | RequestOptions | URL"}));
}

TEST(AmbientData, ClosedAndOpenObjects) {
    const auto& env = default_environment();
    EXPECT_TRUE(env.global("console")->closed);
    EXPECT_TRUE(env.global("Math")->closed);
    EXPECT_FALSE(env.global("process")->closed);
}

TEST(AmbientData, PrimitiveMembers) {
    const auto& env = default_environment();
    EXPECT_TRUE(env.string_has("split"));
    EXPECT_TRUE(env.string_has("toString"));
    EXPECT_FALSE(env.string_has("get"));
    EXPECT_TRUE(env.number_has("toFixed"));
    EXPECT_TRUE(env.array_has("map"));
}

TEST(Signature, RestParameterRepeats) {
    Signature s{{"...number"}};
    EXPECT_EQ(s.param(0), "...number");
    EXPECT_EQ(s.param(5), "...number");
    Signature t{{"string"}};
    EXPECT_FALSE(t.param(1).has_value());
}

TEST(TypeHint, FromParam) {
    EXPECT_EQ(TypeHint::from_param("...number").kind, HintKind::number);
    EXPECT_EQ(TypeHint::from_param("string").kind, HintKind::string);
    EXPECT_EQ(TypeHint::from_param("string[]").kind, HintKind::string_array);
    EXPECT_EQ(TypeHint::from_param("function").kind, HintKind::callable);
    EXPECT_EQ(TypeHint::from_param("any").kind, HintKind::unknown);
    EXPECT_EQ(TypeHint::from_param("Buffer | string").kind, HintKind::complex);
}

TEST(AmbientEnvironment, CustomTable) {
    auto env = AmbientEnvironment::from_json_text(
        R"({"globals": {"tool": {"type_name": "Tool", "closed": true, "members": {"run": {"params": ["string"]}}}},
            "modules": {"mymod": {"members": {"x": {"value": "number"}}}}})");
    ASSERT_TRUE(env.is_global("tool"));
    EXPECT_EQ(env.global("tool")->members.at("run").kind, AmbientValue::Kind::function);
    ASSERT_NE(env.module("mymod"), nullptr);
    EXPECT_EQ(env.module("mymod")->type_name(), "typeof import(\"mymod\")");
}

TEST(AmbientEnvironment, MalformedInputIsUsageError) {
    EXPECT_THROW(AmbientEnvironment::from_json_text("{"), UsageError);
    EXPECT_THROW(AmbientEnvironment::from_json_text("{\"globals\": {}}"), UsageError);
}
