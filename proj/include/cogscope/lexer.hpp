#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cogscope/span.hpp"

namespace cogscope {

enum class TokenKind { Identifier, IntLiteral, StringLiteral, Keyword, Operator, Punctuation };

struct Token {
    TokenKind kind = TokenKind::Punctuation;
    std::string text;
    Span span;

    [[nodiscard]] bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
};

[[nodiscard]] const char* token_kind_name(TokenKind kind);

[[nodiscard]] bool is_keyword(std::string_view word);
[[nodiscard]] bool is_builtin(std::string_view name);

/// Operator tokens that count as an operator occurrence. Plain `=` and the
/// `::` qualifier are operator tokens but are not counted.
[[nodiscard]] bool is_counted_operator(std::string_view op);

/// Splits MiniLang source into tokens. Whitespace and both comment forms are
/// skipped; every other byte belongs to exactly one token.
[[nodiscard]] std::vector<Token> tokenize(std::string_view source);

}  // namespace cogscope
