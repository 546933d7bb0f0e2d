#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cogscope/lexer.hpp"

namespace cogscope {

/// Lexical classification of one token-bearing line.
struct CodeLine {
    std::uint32_t line = 0;         // physical line number
    std::uint32_t tokens = 0;
    std::uint32_t identifiers = 0;  // variable names; callee and function names excluded
    std::uint32_t literals = 0;
    std::uint32_t operators = 0;    // counted operator occurrences

    /// n(k): identifiers plus operators on the line.
    [[nodiscard]] std::uint32_t information_count() const { return identifiers + operators; }
};

struct LineCount {
    std::uint32_t loc = 0;
    std::vector<CodeLine> lines;  // one entry per token-bearing line, ascending
};

/// LOC is the number of physical lines holding at least one token; blank and
/// comment-only lines are excluded.
[[nodiscard]] LineCount count_lines(std::string_view source);
[[nodiscard]] LineCount count_lines(std::span<const Token> tokens);

}  // namespace cogscope
