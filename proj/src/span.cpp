#include "cogscope/span.hpp"

#include <algorithm>

namespace cogscope {

Span cover(const Span& first, const Span& last) {
    const Span& lo = first.offset <= last.offset ? first : last;
    Span out = lo;
    const std::uint32_t end = std::max(first.end(), last.end());
    out.length = end - lo.offset;
    return out;
}

namespace {

const char* kind_name(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::Lexical: return "lexical error";
        case DiagnosticKind::Syntax: return "syntax error";
        case DiagnosticKind::Resolve: return "resolve error";
        case DiagnosticKind::Usage: return "usage error";
    }
    return "error";
}

}  // namespace

std::string Diagnostic::format(const std::string& file) const {
    std::string out;
    if (!file.empty()) out += file + ":";
    out += std::to_string(span.line) + ":" + std::to_string(span.column) + ": ";
    out += kind_name(kind);
    out += ": " + message;
    return out;
}

Error::Error(Diagnostic diagnostic)
    : std::runtime_error(diagnostic.format()), diagnostic_(std::move(diagnostic)) {}

}  // namespace cogscope
