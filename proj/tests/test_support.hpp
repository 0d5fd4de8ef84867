#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace test {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string read_fixture(const std::string& rel) { return read_file(std::string(NCC_FIXTURES) + "/" + rel); }

}  // namespace test
