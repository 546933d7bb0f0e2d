#include "cogscope/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace cogscope {

namespace {

constexpr std::array<std::string_view, 13> kKeywords = {
    "int", "void", "if", "else", "switch", "case", "default",
    "for", "while", "do", "parallel", "interrupt", "return"};

constexpr std::array<std::string_view, 2> kBuiltins = {"read", "print"};

// Longest match first.
constexpr std::array<std::string_view, 16> kTwoCharOps = {
    "<=", ">=", "==", "!=", "&&", "||", "<<", ">>", "+=", "-=",
    "*=", "/=", "%=", "++", "--", "::"};

constexpr std::string_view kOneCharOps = "+-*/%<>!&|^=";
constexpr std::string_view kPunct = "(){}[];,:";

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_trivia();
            if (pos_ >= src_.size()) break;
            out.push_back(next());
        }
        return out;
    }

private:
    [[nodiscard]] char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[nodiscard]] Span here() const {
        return Span{line_, col_, static_cast<std::uint32_t>(pos_), 0};
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            const char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && peek() != '\n') advance();
            } else if (c == '/' && peek(1) == '*') {
                const Span start = here();
                advance();
                advance();
                while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
                if (pos_ >= src_.size()) {
                    throw Error({DiagnosticKind::Lexical, start, "unterminated block comment"});
                }
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    Token finish(TokenKind kind, Span span) const {
        span.length = static_cast<std::uint32_t>(pos_) - span.offset;
        return Token{kind, std::string(src_.substr(span.offset, span.length)), span};
    }

    Token next() {
        const Span start = here();
        const char c = peek();
        const auto uc = static_cast<unsigned char>(c);

        if (std::isalpha(uc) || c == '_') {
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
            Token tok = finish(TokenKind::Identifier, start);
            if (is_keyword(tok.text)) tok.kind = TokenKind::Keyword;
            return tok;
        }
        if (std::isdigit(uc)) {
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
            if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
                throw Error({DiagnosticKind::Lexical, here(), "malformed integer literal"});
            }
            return finish(TokenKind::IntLiteral, start);
        }
        if (c == '"') {
            advance();
            while (pos_ < src_.size() && peek() != '"' && peek() != '\n') {
                if (peek() == '\\' && pos_ + 1 < src_.size()) advance();
                advance();
            }
            if (peek() != '"') {
                throw Error({DiagnosticKind::Lexical, start, "unterminated string literal"});
            }
            advance();
            return finish(TokenKind::StringLiteral, start);
        }
        if (pos_ + 1 < src_.size()) {
            const std::string_view two = src_.substr(pos_, 2);
            if (std::find(kTwoCharOps.begin(), kTwoCharOps.end(), two) != kTwoCharOps.end()) {
                advance();
                advance();
                return finish(TokenKind::Operator, start);
            }
        }
        if (kOneCharOps.find(c) != std::string_view::npos) {
            advance();
            return finish(TokenKind::Operator, start);
        }
        if (kPunct.find(c) != std::string_view::npos) {
            advance();
            return finish(TokenKind::Punctuation, start);
        }
        std::string shown = std::isprint(uc) ? std::string(1, c) : "\\x" + std::to_string(uc);
        throw Error({DiagnosticKind::Lexical, Span{start.line, start.column, start.offset, 1},
                     "unrecognized character '" + shown + "'"});
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    std::uint32_t col_ = 1;
};

}  // namespace

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::IntLiteral: return "integer-literal";
        case TokenKind::StringLiteral: return "string-literal";
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Operator: return "operator";
        case TokenKind::Punctuation: return "punctuation";
    }
    return "?";
}

bool is_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_builtin(std::string_view name) {
    return std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end();
}

bool is_counted_operator(std::string_view op) {
    return op != "=" && op != "::";
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace cogscope
