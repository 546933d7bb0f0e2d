#include "cogscope/lines.hpp"

namespace cogscope {

LineCount count_lines(std::span<const Token> tokens) {
    LineCount out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (out.lines.empty() || out.lines.back().line != t.span.line) {
            out.lines.push_back(CodeLine{t.span.line});
        }
        CodeLine& cl = out.lines.back();
        ++cl.tokens;
        switch (t.kind) {
            case TokenKind::Identifier: {
                const bool names_function =
                    i + 1 < tokens.size() && tokens[i + 1].is(TokenKind::Punctuation, "(");
                if (!names_function) ++cl.identifiers;
                break;
            }
            case TokenKind::IntLiteral:
            case TokenKind::StringLiteral:
                ++cl.literals;
                break;
            case TokenKind::Operator:
                if (is_counted_operator(t.text)) ++cl.operators;
                break;
            default:
                break;
        }
    }
    out.loc = static_cast<std::uint32_t>(out.lines.size());
    return out;
}

LineCount count_lines(std::string_view source) {
    const auto tokens = tokenize(source);
    return count_lines(tokens);
}

}  // namespace cogscope
