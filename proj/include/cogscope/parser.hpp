#pragma once

#include <span>
#include <string_view>

#include "cogscope/ast.hpp"
#include "cogscope/lexer.hpp"

namespace cogscope {

struct ParseOptions {
    /// Accept a second declaration of a name in the same scope. The later
    /// declaration shadows the earlier one for the rest of that scope.
    bool allow_redeclaration = false;
};

/// Builds a SourceUnit from a token stream. Throws cogscope::Error with a
/// syntax diagnostic on malformed input, a missing or duplicated `main`, a
/// duplicated function or parameter name, or a duplicated declaration in one
/// scope (unless the options allow it).
[[nodiscard]] SourceUnit parse(std::span<const Token> tokens, const ParseOptions& options = {});

/// tokenize + parse.
[[nodiscard]] SourceUnit parse_source(std::string_view source, const ParseOptions& options = {});

}  // namespace cogscope
