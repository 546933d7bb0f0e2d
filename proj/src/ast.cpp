#include "cogscope/ast.hpp"

namespace cogscope {

const char* binary_op_text(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::Mod: return "%";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Ge: return ">=";
        case BinaryOp::Eq: return "==";
        case BinaryOp::Ne: return "!=";
        case BinaryOp::And: return "&&";
        case BinaryOp::Or: return "||";
        case BinaryOp::BitAnd: return "&";
        case BinaryOp::BitOr: return "|";
        case BinaryOp::BitXor: return "^";
        case BinaryOp::Shl: return "<<";
        case BinaryOp::Shr: return ">>";
    }
    return "?";
}

const char* unary_op_text(UnaryOp op) { return op == UnaryOp::Neg ? "-" : "!"; }

const char* assign_kind_text(AssignKind kind) {
    switch (kind) {
        case AssignKind::Plain: return "=";
        case AssignKind::AddAssign: return "+=";
        case AssignKind::SubAssign: return "-=";
        case AssignKind::MulAssign: return "*=";
        case AssignKind::DivAssign: return "/=";
        case AssignKind::ModAssign: return "%=";
        case AssignKind::Increment: return "++";
        case AssignKind::Decrement: return "--";
    }
    return "?";
}

const Expr* lvalue_base_expr(const Expr& e) {
    const Expr* cur = &e;
    while (const auto* sub = cur->as<Subscript>()) cur = &*sub->base;
    return cur->as<Ident>() ? cur : nullptr;
}

const Ident* lvalue_base(const Expr& e) {
    const Expr* base = lvalue_base_expr(e);
    return base ? base->as<Ident>() : nullptr;
}

bool Stmt::is_control() const {
    return std::holds_alternative<If>(node) || std::holds_alternative<Switch>(node) ||
           std::holds_alternative<For>(node) || std::holds_alternative<While>(node) ||
           std::holds_alternative<DoWhile>(node) || std::holds_alternative<Parallel>(node) ||
           std::holds_alternative<Interrupt>(node);
}

const FunctionDef* SourceUnit::find_function(std::string_view name) const {
    for (const auto& f : functions)
        if (f.name == name) return &f;
    return nullptr;
}

FunctionDef* SourceUnit::find_function(std::string_view name) {
    for (auto& f : functions)
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace cogscope
