#include "cogscope/render.hpp"

#include <sstream>

namespace cogscope {

namespace {

int precedence(BinaryOp op) {
    switch (op) {
        case BinaryOp::Or: return 1;
        case BinaryOp::And: return 2;
        case BinaryOp::BitOr: return 3;
        case BinaryOp::BitXor: return 4;
        case BinaryOp::BitAnd: return 5;
        case BinaryOp::Eq:
        case BinaryOp::Ne: return 6;
        case BinaryOp::Lt:
        case BinaryOp::Le:
        case BinaryOp::Gt:
        case BinaryOp::Ge: return 7;
        case BinaryOp::Shl:
        case BinaryOp::Shr: return 8;
        case BinaryOp::Add:
        case BinaryOp::Sub: return 9;
        case BinaryOp::Mul:
        case BinaryOp::Div:
        case BinaryOp::Mod: return 10;
    }
    return 0;
}

constexpr int kUnaryPrec = 11;
constexpr int kPostfixPrec = 12;

int expr_prec(const Expr& e) {
    if (const auto* b = e.as<Binary>()) return precedence(b->op);
    if (e.as<Unary>()) return kUnaryPrec;
    return kPostfixPrec;
}

class Renderer {
public:
    std::string expr(const Expr& e) {
        std::string out;
        emit_expr(out, e);
        return out;
    }

    void emit_expr(std::string& out, const Expr& e) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Ident>) {
                    if (n.global) out += "::";
                    out += n.name;
                } else if constexpr (std::is_same_v<T, IntLit>) {
                    out += std::to_string(n.value);
                } else if constexpr (std::is_same_v<T, StrLit>) {
                    out += '"';
                    out += n.text;
                    out += '"';
                } else if constexpr (std::is_same_v<T, Binary>) {
                    const int p = precedence(n.op);
                    // Left-associative: the right operand needs parens at equal precedence.
                    emit_operand(out, *n.lhs, expr_prec(*n.lhs) < p);
                    out += ' ';
                    out += binary_op_text(n.op);
                    out += ' ';
                    emit_operand(out, *n.rhs, expr_prec(*n.rhs) <= p);
                } else if constexpr (std::is_same_v<T, Unary>) {
                    out += unary_op_text(n.op);
                    // Keep `- -x` and `-(-1)` from lexing as `--`.
                    const bool nested_neg = n.op == UnaryOp::Neg && n.operand->template as<Unary>() &&
                                            n.operand->template as<Unary>()->op == UnaryOp::Neg;
                    emit_operand(out, *n.operand, expr_prec(*n.operand) < kUnaryPrec || nested_neg);
                } else if constexpr (std::is_same_v<T, Subscript>) {
                    emit_operand(out, *n.base, expr_prec(*n.base) < kPostfixPrec);
                    out += '[';
                    emit_expr(out, *n.index);
                    out += ']';
                } else if constexpr (std::is_same_v<T, CallExpr>) {
                    out += n.callee;
                    out += '(';
                    for (std::size_t i = 0; i < n.args.size(); ++i) {
                        if (i) out += ", ";
                        emit_expr(out, n.args[i]);
                    }
                    out += ')';
                }
            },
            e.node);
    }

    void emit_operand(std::string& out, const Expr& e, bool parens) {
        if (parens) out += '(';
        emit_expr(out, e);
        if (parens) out += ')';
    }

    std::string simple(const Stmt& s) {
        std::string out;
        if (const auto* d = s.as<Decl>()) {
            out += "int ";
            for (std::size_t i = 0; i < d->declarators.size(); ++i) {
                const auto& dc = d->declarators[i];
                if (i) out += ", ";
                out += dc.name;
                if (dc.is_array) {
                    out += '[';
                    if (dc.array_size) out += std::to_string(*dc.array_size);
                    out += ']';
                }
                if (dc.init) {
                    out += " = ";
                    emit_expr(out, *dc.init);
                } else if (dc.init_list) {
                    out += " = {";
                    for (std::size_t j = 0; j < dc.init_list->size(); ++j) {
                        if (j) out += ", ";
                        emit_expr(out, (*dc.init_list)[j]);
                    }
                    out += '}';
                }
            }
        } else if (const auto* a = s.as<Assign>()) {
            emit_expr(out, a->target);
            if (a->kind == AssignKind::Increment || a->kind == AssignKind::Decrement) {
                out += assign_kind_text(a->kind);
            } else {
                out += ' ';
                out += assign_kind_text(a->kind);
                out += ' ';
                emit_expr(out, *a->value);
            }
        } else if (const auto* c = s.as<CallStmt>()) {
            emit_expr(out, c->call);
        }
        return out;
    }

    void line(int indent, const std::string& text) {
        buf_.append(static_cast<std::size_t>(indent) * 4, ' ');
        buf_ += text;
        buf_ += '\n';
    }

    void block_body(const Block& b, int indent) {
        for (const auto& s : b.stmts) stmt(s, indent);
    }

    /// Emits `head {`, the body, and `}` + tail.
    void braced(int indent, const std::string& head, const Block& b, const std::string& tail = "") {
        line(indent, head + "{");
        block_body(b, indent + 1);
        line(indent, "}" + tail);
    }

    void stmt(const Stmt& s, int indent) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Decl> || std::is_same_v<T, Assign> ||
                              std::is_same_v<T, CallStmt>) {
                    line(indent, simple(s) + ";");
                } else if constexpr (std::is_same_v<T, If>) {
                    emit_if(n, indent, "");
                } else if constexpr (std::is_same_v<T, Switch>) {
                    line(indent, "switch (" + expr(n.scrutinee) + ") {");
                    for (const auto& c : n.cases) braced(indent + 1, "case " + expr(c.label) + ": ", c.body);
                    if (n.default_block) braced(indent + 1, "default: ", *n.default_block);
                    line(indent, "}");
                } else if constexpr (std::is_same_v<T, For>) {
                    std::string head = "for (";
                    if (n.init) head += simple(**n.init);
                    head += ';';
                    if (n.cond) head += ' ' + expr(*n.cond);
                    head += ';';
                    if (n.step) head += ' ' + simple(**n.step);
                    head += ") ";
                    braced(indent, head, n.body);
                } else if constexpr (std::is_same_v<T, While>) {
                    braced(indent, "while (" + expr(n.cond) + ") ", n.body);
                } else if constexpr (std::is_same_v<T, DoWhile>) {
                    braced(indent, "do ", n.body, " while (" + expr(n.cond) + ");");
                } else if constexpr (std::is_same_v<T, Parallel>) {
                    braced(indent, "parallel ", n.body);
                } else if constexpr (std::is_same_v<T, Interrupt>) {
                    braced(indent, "interrupt ", n.body);
                } else if constexpr (std::is_same_v<T, Return>) {
                    line(indent, n.value ? "return " + expr(*n.value) + ";" : "return;");
                } else if constexpr (std::is_same_v<T, Block>) {
                    line(indent, "{");
                    block_body(n, indent + 1);
                    line(indent, "}");
                }
            },
            s.node);
    }

    void emit_if(const If& n, int indent, const std::string& prefix) {
        line(indent, prefix + "if (" + expr(n.cond) + ") {");
        block_body(n.then_block, indent + 1);
        if (!n.else_block) {
            line(indent, "}");
            return;
        }
        const Block& eb = *n.else_block;
        if (eb.stmts.size() == 1 && eb.stmts[0].as<If>()) {
            // `else if` chain: the else block holds exactly one If.
            buf_.append(static_cast<std::size_t>(indent) * 4, ' ');
            buf_ += "} ";
            const std::size_t mark = buf_.size();
            emit_if(*eb.stmts[0].as<If>(), indent, "else ");
            // emit_if indented its first line; drop that indentation.
            buf_.erase(mark, static_cast<std::size_t>(indent) * 4);
            return;
        }
        line(indent, "} else {");
        block_body(eb, indent + 1);
        line(indent, "}");
    }

    void function(const FunctionDef& f) {
        std::string head = f.returns_int ? "int " : "void ";
        head += f.name + "(";
        for (std::size_t i = 0; i < f.params.size(); ++i) {
            if (i) head += ", ";
            head += "int " + f.params[i].name;
            if (f.params[i].is_array) head += "[]";
        }
        head += ") ";
        braced(0, head, f.body);
    }

    std::string unit(const SourceUnit& u) {
        for (const auto& g : u.globals) stmt(g, 0);
        for (const auto& f : u.functions) function(f);
        return std::move(buf_);
    }

    std::string take() { return std::move(buf_); }

private:
    std::string buf_;
};

}  // namespace

std::string render(const SourceUnit& unit) { return Renderer().unit(unit); }

std::string render_expr(const Expr& expr) { return Renderer().expr(expr); }

std::string render_stmt(const Stmt& stmt, int indent) {
    Renderer r;
    r.stmt(stmt, indent);
    return r.take();
}

}  // namespace cogscope
