#!/usr/bin/env python3
"""Regenerate include/ncc/ambient_data.hpp from data/node-ambient.json."""
import json
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent
text = (root / "data" / "node-ambient.json").read_text().rstrip("\n")
json.loads(text)
header = (
    "#pragma once\n\n#include <string_view>\n\n"
    "// Copy of data/node-ambient.json; tests/test_ambient.cpp checks they match.\n"
    "namespace ncc {\n\n"
    f'inline constexpr std::string_view kAmbientJson = R"ambient({text}\n)ambient";\n\n'
    "}  // namespace ncc\n"
)
(root / "include" / "ncc" / "ambient_data.hpp").write_text(header)
