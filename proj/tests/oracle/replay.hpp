#pragma once

// Naive replay of the counting rules straight off the syntax tree. Shares only
// the parser with the library; scoping, counters, granulation and the region
// sums are reimplemented here.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cogscope/ast.hpp"

namespace oracle {

struct Mention {
    std::uint32_t offset = 0;
    std::uint32_t length = 0;
    bool write = false;  // declarations and assignment targets
    std::string name;
    std::uint32_t decl = 0;  // offset of the binding declaration
    std::int64_t icn = 0;
    std::int64_t sicn = 0;
};

struct Replay {
    std::vector<Mention> mentions;  // replay order
    std::int64_t info = 0;          // I over the whole program
    std::int64_t si = 0;            // SI over the whole program
    std::int64_t escim = 0;
    std::map<std::string, std::int64_t> function_escim;
};

[[nodiscard]] Replay replay(const cogscope::SourceUnit& unit);

}  // namespace oracle
