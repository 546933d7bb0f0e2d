#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cogscope {

/// Location of a lexeme or node in the source text. `line` and `column` are
/// 1-based; `offset` is the byte offset of the first character.
struct Span {
    std::uint32_t line = 1;
    std::uint32_t column = 1;
    std::uint32_t offset = 0;
    std::uint32_t length = 0;

    [[nodiscard]] std::uint32_t end() const { return offset + length; }

    [[nodiscard]] bool contains(const Span& other) const {
        return other.offset >= offset && other.end() <= end();
    }

    [[nodiscard]] bool contains_offset(std::uint32_t pos) const {
        return pos >= offset && pos < end();
    }

    friend bool operator==(const Span&, const Span&) = default;
};

/// Smallest span covering both arguments.
[[nodiscard]] Span cover(const Span& first, const Span& last);

enum class DiagnosticKind { Lexical, Syntax, Resolve, Usage };

struct Diagnostic {
    DiagnosticKind kind = DiagnosticKind::Syntax;
    Span span;
    std::string message;

    [[nodiscard]] std::string format(const std::string& file = {}) const;
};

/// Every front-end and analysis failure is reported through this exception so
/// callers get a span they can print as file:line:col.
class Error : public std::runtime_error {
public:
    explicit Error(Diagnostic diagnostic);

    [[nodiscard]] const Diagnostic& diagnostic() const { return diagnostic_; }

private:
    Diagnostic diagnostic_;
};

}  // namespace cogscope
