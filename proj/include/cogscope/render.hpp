#pragma once

#include <string>

#include "cogscope/ast.hpp"

namespace cogscope {

/// Canonical MiniLang text for a unit: globals first, then functions in
/// order, one statement per line, four-space indentation, every body braced.
/// parse(render(u)) is structurally equal to u.
[[nodiscard]] std::string render(const SourceUnit& unit);

[[nodiscard]] std::string render_expr(const Expr& expr);
[[nodiscard]] std::string render_stmt(const Stmt& stmt, int indent = 0);

}  // namespace cogscope
