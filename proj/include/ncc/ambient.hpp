#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncc/ambient_data.hpp"
#include "ncc/source.hpp"

namespace ncc {

enum class HintKind { string, number, string_array, number_array, callable, constructable, complex, unknown };

inline std::string_view to_string(HintKind k) {
    switch (k) {
        case HintKind::string: return "string";
        case HintKind::number: return "number";
        case HintKind::string_array: return "string-array";
        case HintKind::number_array: return "number-array";
        case HintKind::callable: return "callable";
        case HintKind::constructable: return "constructable";
        case HintKind::complex: return "complex";
        case HintKind::unknown: return "unknown";
    }
    return "unknown";
}

/// What a placeholder for an undeclared name should look like.
struct TypeHint {
    HintKind kind = HintKind::unknown;
    std::string description;  // printable type text; set for complex, informative otherwise

    static TypeHint unknown() { return {}; }

    /// Maps a parameter description from the ambient table to a hint.
    static TypeHint from_param(std::string_view desc) {
        if (desc.substr(0, 3) == "...") desc.remove_prefix(3);
        if (desc == "string") return {HintKind::string, "string"};
        if (desc == "number") return {HintKind::number, "number"};
        if (desc == "string[]") return {HintKind::string_array, "string[]"};
        if (desc == "number[]") return {HintKind::number_array, "number[]"};
        if (desc == "function") return {HintKind::callable, "Function"};
        if (desc == "constructor") return {HintKind::constructable, "new (...args: any[]) => any"};
        if (desc.empty() || desc == "any" || desc == "unknown") return unknown();
        return {HintKind::complex, std::string(desc)};
    }

    friend bool operator==(const TypeHint&, const TypeHint&) = default;
};

struct Signature {
    std::vector<std::string> params;  // "...T" marks a rest parameter

    /// Description of parameter `index`, honoring a trailing rest parameter.
    [[nodiscard]] std::optional<std::string_view> param(std::size_t index) const {
        if (index < params.size()) return std::string_view(params[index]);
        if (!params.empty() && params.back().rfind("...", 0) == 0) return std::string_view(params.back());
        return std::nullopt;
    }
};

/// A global value or module member.
struct AmbientValue {
    enum class Kind { value, function, constructor, object };
    Kind kind = Kind::value;
    std::string type_name;  // for objects and values
    bool closed = false;    // objects only: member set is exhaustive
    Signature signature;    // functions and constructors
    std::map<std::string, AmbientValue, std::less<>> members;
};

struct BuiltinModule {
    std::string name;
    std::map<std::string, AmbientValue, std::less<>> members;

    [[nodiscard]] std::string type_name() const { return "typeof import(\"" + name + "\")"; }
};

/// Globals and builtin modules visible to a CommonJS script running on Node.
/// Immutable once loaded; share freely between threads.
class AmbientEnvironment {
public:
    static AmbientEnvironment from_json(const nlohmann::json& j) {
        AmbientEnvironment env;
        if (!j.is_object() || !j.contains("globals") || !j.contains("modules"))
            throw UsageError("ambient environment: missing 'globals' or 'modules'");
        for (const auto& [name, v] : j.at("globals").items()) env.globals_.emplace(name, parse_value(v));
        for (const auto& [name, m] : j.at("modules").items()) {
            BuiltinModule mod;
            mod.name = name;
            if (m.contains("members"))
                for (const auto& [mem, v] : m.at("members").items()) mod.members.emplace(mem, parse_value(v));
            env.modules_.emplace(name, std::move(mod));
        }
        if (j.contains("primitives")) {
            const auto& p = j.at("primitives");
            auto load = [&](const char* key, std::set<std::string, std::less<>>& out) {
                if (p.contains(key))
                    for (const auto& s : p.at(key)) out.insert(s.get<std::string>());
            };
            load("object", env.object_members_);
            load("string", env.string_members_);
            load("number", env.number_members_);
            load("array", env.array_members_);
        }
        return env;
    }

    static AmbientEnvironment from_json_text(std::string_view text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw UsageError(std::string("ambient environment: ") + e.what());
        }
        return from_json(j);
    }

    [[nodiscard]] const AmbientValue* global(std::string_view name) const {
        auto it = globals_.find(name);
        return it == globals_.end() ? nullptr : &it->second;
    }
    [[nodiscard]] bool is_global(std::string_view name) const { return global(name) != nullptr; }

    /// Accepts both "fs" and "node:fs".
    [[nodiscard]] const BuiltinModule* module(std::string_view name) const {
        if (name.substr(0, 5) == "node:") name.remove_prefix(5);
        auto it = modules_.find(name);
        return it == modules_.end() ? nullptr : &it->second;
    }

    [[nodiscard]] std::vector<std::string> global_names() const {
        std::vector<std::string> out;
        out.reserve(globals_.size());
        for (const auto& [k, v] : globals_) out.push_back(k);
        return out;
    }
    [[nodiscard]] std::vector<std::string> module_names() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : modules_) out.push_back(k);
        return out;
    }

    [[nodiscard]] bool object_has(std::string_view m) const { return object_members_.count(m) != 0; }
    [[nodiscard]] bool string_has(std::string_view m) const {
        return string_members_.count(m) != 0 || object_has(m);
    }
    [[nodiscard]] bool number_has(std::string_view m) const {
        return number_members_.count(m) != 0 || object_has(m);
    }
    [[nodiscard]] bool array_has(std::string_view m) const {
        return array_members_.count(m) != 0 || object_has(m);
    }

private:
    std::map<std::string, AmbientValue, std::less<>> globals_;
    std::map<std::string, BuiltinModule, std::less<>> modules_;
    std::set<std::string, std::less<>> object_members_, string_members_, number_members_, array_members_;

    static AmbientValue parse_value(const nlohmann::json& v) {
        AmbientValue out;
        if (v.contains("members")) {
            out.kind = AmbientValue::Kind::object;
            out.type_name = v.value("type_name", std::string("object"));
            out.closed = v.value("closed", false);
            for (const auto& [name, m] : v.at("members").items()) out.members.emplace(name, parse_value(m));
        } else if (v.contains("params")) {
            out.kind = v.value("class", false) ? AmbientValue::Kind::constructor : AmbientValue::Kind::function;
            for (const auto& p : v.at("params")) out.signature.params.push_back(p.get<std::string>());
        } else {
            out.kind = AmbientValue::Kind::value;
            out.type_name = v.value("value", std::string("any"));
        }
        return out;
    }
};

/// The environment shipped with the engine, parsed once on first use.
inline const AmbientEnvironment& default_environment() {
    static const AmbientEnvironment env = AmbientEnvironment::from_json_text(kAmbientJson);
    return env;
}

}  // namespace ncc
