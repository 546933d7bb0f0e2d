#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "cogscope/metrics.hpp"

#ifndef COGSCOPE_FIXTURES
#define COGSCOPE_FIXTURES "tests/fixtures"
#endif

namespace support {

inline std::string fixture(const std::string& name) {
    std::ifstream in(std::string(COGSCOPE_FIXTURES) + "/" + name, std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(COGSCOPE_FIXTURES) + "/" + name; }

/// Wraps statements in `void main() { ... }`.
inline std::string in_main(const std::string& body) { return "void main() {\n" + body + "\n}\n"; }

}  // namespace support
