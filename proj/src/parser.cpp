#include "cogscope/parser.hpp"

#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace cogscope {

namespace {

struct BinaryLevel {
    std::vector<std::pair<std::string_view, BinaryOp>> ops;
};

// Lowest precedence first.
const std::vector<BinaryLevel>& binary_levels() {
    static const std::vector<BinaryLevel> levels = {
        {{{"||", BinaryOp::Or}}},
        {{{"&&", BinaryOp::And}}},
        {{{"|", BinaryOp::BitOr}}},
        {{{"^", BinaryOp::BitXor}}},
        {{{"&", BinaryOp::BitAnd}}},
        {{{"==", BinaryOp::Eq}, {"!=", BinaryOp::Ne}}},
        {{{"<", BinaryOp::Lt}, {"<=", BinaryOp::Le}, {">", BinaryOp::Gt}, {">=", BinaryOp::Ge}}},
        {{{"<<", BinaryOp::Shl}, {">>", BinaryOp::Shr}}},
        {{{"+", BinaryOp::Add}, {"-", BinaryOp::Sub}}},
        {{{"*", BinaryOp::Mul}, {"/", BinaryOp::Div}, {"%", BinaryOp::Mod}}},
    };
    return levels;
}

class Parser {
public:
    Parser(std::span<const Token> tokens, const ParseOptions& options)
        : toks_(tokens), options_(options) {}

    SourceUnit run() {
        SourceUnit unit;
        push_scope();  // globals
        std::set<std::string> function_names;
        while (!at_end()) {
            const Token& first = peek();
            if (!(first.is(TokenKind::Keyword, "int") || first.is(TokenKind::Keyword, "void"))) {
                fail(first, "'int' or 'void' at top level");
            }
            const bool is_function = peek(1).kind == TokenKind::Identifier &&
                                     peek(2).is(TokenKind::Punctuation, "(");
            if (is_function) {
                FunctionDef fn = parse_function();
                if (!function_names.insert(fn.name).second) {
                    throw Error({DiagnosticKind::Syntax, fn.name_span,
                                 "duplicate definition of function '" + fn.name + "'"});
                }
                unit.functions.push_back(std::move(fn));
            } else {
                if (first.is(TokenKind::Keyword, "void")) fail(peek(1), "function definition");
                Stmt decl = parse_decl_stmt();
                unit.globals.push_back(std::move(decl));
            }
        }
        pop_scope();
        if (!unit.find_function("main")) {
            const Span where = toks_.empty() ? Span{} : toks_.back().span;
            throw Error({DiagnosticKind::Syntax, where, "program has no function named 'main'"});
        }
        return unit;
    }

private:
    // -- token access ------------------------------------------------------

    [[nodiscard]] bool at_end() const { return pos_ >= toks_.size(); }

    [[nodiscard]] const Token& peek(std::size_t ahead = 0) const {
        static const Token eof{TokenKind::Punctuation, "<end of input>", Span{}};
        if (pos_ + ahead >= toks_.size()) {
            if (toks_.empty()) return eof;
            eof_ = Token{TokenKind::Punctuation, "<end of input>", toks_.back().span};
            eof_.span.offset = toks_.back().span.end();
            eof_.span.column += toks_.back().span.length;
            eof_.span.length = 0;
            return eof_;
        }
        return toks_[pos_ + ahead];
    }

    const Token& take() {
        const Token& t = peek();
        if (!at_end()) ++pos_;
        last_ = t.span;
        return t;
    }

    bool accept(TokenKind kind, std::string_view text) {
        if (peek().is(kind, text)) {
            take();
            return true;
        }
        return false;
    }

    bool accept_punct(std::string_view text) { return accept(TokenKind::Punctuation, text); }
    bool accept_op(std::string_view text) { return accept(TokenKind::Operator, text); }
    bool accept_kw(std::string_view text) { return accept(TokenKind::Keyword, text); }

    const Token& expect(TokenKind kind, std::string_view text) {
        if (!peek().is(kind, text)) fail(peek(), "'" + std::string(text) + "'");
        return take();
    }

    const Token& expect_ident() {
        if (peek().kind != TokenKind::Identifier) fail(peek(), "identifier");
        return take();
    }

    [[noreturn]] void fail(const Token& found, const std::string& expected) const {
        throw Error({DiagnosticKind::Syntax, found.span,
                     "expected " + expected + ", found '" + found.text + "'"});
    }

    [[nodiscard]] Span since(const Span& start) const { return cover(start, last_); }

    // -- duplicate-declaration tracking ------------------------------------

    void push_scope() { scopes_.emplace_back(); }
    void pop_scope() { scopes_.pop_back(); }

    void declare(const std::string& name, const Span& at) {
        if (!scopes_.back().insert(name).second && !options_.allow_redeclaration) {
            throw Error({DiagnosticKind::Syntax, at,
                         "duplicate declaration of '" + name + "' in the same scope"});
        }
    }

    // -- top level -----------------------------------------------------------

    FunctionDef parse_function() {
        FunctionDef fn;
        const Token& ret = take();
        const Span start = ret.span;
        fn.returns_int = ret.text == "int";
        const Token& name = expect_ident();
        fn.name = name.text;
        fn.name_span = name.span;
        expect(TokenKind::Punctuation, "(");
        push_scope();
        if (!peek().is(TokenKind::Punctuation, ")")) {
            do {
                expect(TokenKind::Keyword, "int");
                const Token& p = expect_ident();
                Param param{p.text, p.span, false};
                if (accept_punct("[")) {
                    expect(TokenKind::Punctuation, "]");
                    param.is_array = true;
                }
                if (!scopes_.back().insert(param.name).second) {
                    throw Error({DiagnosticKind::Syntax, p.span,
                                 "duplicate parameter name '" + param.name + "'"});
                }
                fn.params.push_back(std::move(param));
            } while (accept_punct(","));
        }
        expect(TokenKind::Punctuation, ")");
        if (!peek().is(TokenKind::Punctuation, "{")) fail(peek(), "'{'");
        fn.body = parse_block();
        pop_scope();
        fn.span = since(start);
        return fn;
    }

    // -- statements ----------------------------------------------------------

    Block parse_block() {
        Block block;
        const Span start = expect(TokenKind::Punctuation, "{").span;
        push_scope();
        while (!peek().is(TokenKind::Punctuation, "}")) {
            if (at_end()) fail(peek(), "'}'");
            block.stmts.push_back(parse_stmt());
        }
        take();
        pop_scope();
        block.span = since(start);
        return block;
    }

    /// A braced block, or a single statement wrapped in its own block.
    Block parse_body() {
        if (peek().is(TokenKind::Punctuation, "{")) return parse_block();
        push_scope();
        Stmt s = parse_stmt();
        pop_scope();
        Block block;
        block.span = s.span;
        block.stmts.push_back(std::move(s));
        return block;
    }

    Stmt parse_stmt() {
        const Token& t = peek();
        const Span start = t.span;
        if (t.kind == TokenKind::Keyword) {
            if (t.text == "int") return parse_decl_stmt();
            if (t.text == "if") return parse_if();
            if (t.text == "switch") return parse_switch();
            if (t.text == "for") return parse_for();
            if (t.text == "while") {
                take();
                While w;
                expect(TokenKind::Punctuation, "(");
                w.cond = parse_expr();
                expect(TokenKind::Punctuation, ")");
                w.body = parse_body();
                return Stmt{std::move(w), since(start)};
            }
            if (t.text == "do") {
                take();
                DoWhile d;
                d.body = parse_body();
                expect(TokenKind::Keyword, "while");
                expect(TokenKind::Punctuation, "(");
                d.cond = parse_expr();
                expect(TokenKind::Punctuation, ")");
                expect(TokenKind::Punctuation, ";");
                return Stmt{std::move(d), since(start)};
            }
            if (t.text == "parallel" || t.text == "interrupt") {
                const bool parallel = t.text == "parallel";
                take();
                if (!peek().is(TokenKind::Punctuation, "{")) fail(peek(), "'{'");
                Block body = parse_block();
                if (parallel) return Stmt{Parallel{std::move(body)}, since(start)};
                return Stmt{Interrupt{std::move(body)}, since(start)};
            }
            if (t.text == "return") {
                take();
                Return r;
                if (!peek().is(TokenKind::Punctuation, ";")) r.value = parse_expr();
                expect(TokenKind::Punctuation, ";");
                return Stmt{std::move(r), since(start)};
            }
            fail(t, "statement");
        }
        if (t.is(TokenKind::Punctuation, "{")) {
            Block b = parse_block();
            const Span span = b.span;
            return Stmt{std::move(b), span};
        }
        Stmt s = parse_simple();
        expect(TokenKind::Punctuation, ";");
        s.span = since(start);
        return s;
    }

    Stmt parse_decl_stmt() {
        const Span start = peek().span;
        Stmt s = parse_decl();
        expect(TokenKind::Punctuation, ";");
        s.span = since(start);
        return s;
    }

    Stmt parse_decl() {
        const Span start = expect(TokenKind::Keyword, "int").span;
        Decl decl;
        do {
            Declarator d;
            const Token& name = expect_ident();
            d.name = name.text;
            d.name_span = name.span;
            if (accept_punct("[")) {
                d.is_array = true;
                if (peek().kind == TokenKind::IntLiteral) d.array_size = std::stoll(take().text);
                expect(TokenKind::Punctuation, "]");
            }
            if (accept_op("=")) {
                if (d.is_array && peek().is(TokenKind::Punctuation, "{")) {
                    take();
                    std::vector<Expr> items;
                    if (!peek().is(TokenKind::Punctuation, "}")) {
                        do {
                            items.push_back(parse_expr());
                        } while (accept_punct(","));
                    }
                    expect(TokenKind::Punctuation, "}");
                    d.init_list = std::move(items);
                } else {
                    d.init = parse_expr();
                }
            }
            // The initializer sees the enclosing binding of the name.
            declare(d.name, d.name_span);
            decl.declarators.push_back(std::move(d));
        } while (accept_punct(","));
        return Stmt{std::move(decl), since(start)};
    }

    Stmt parse_if() {
        const Span start = take().span;
        If node;
        expect(TokenKind::Punctuation, "(");
        node.cond = parse_expr();
        expect(TokenKind::Punctuation, ")");
        node.then_block = parse_body();
        if (accept_kw("else")) node.else_block = parse_body();
        return Stmt{std::move(node), since(start)};
    }

    Stmt parse_switch() {
        const Span start = take().span;
        Switch sw;
        expect(TokenKind::Punctuation, "(");
        sw.scrutinee = parse_expr();
        expect(TokenKind::Punctuation, ")");
        expect(TokenKind::Punctuation, "{");
        while (peek().is(TokenKind::Keyword, "case")) {
            take();
            const Span label_start = peek().span;
            Case c;
            const bool negative = accept_op("-");
            if (peek().kind != TokenKind::IntLiteral) fail(peek(), "integer case label");
            const Token& lit = take();
            const Expr literal{IntLit{std::stoll(lit.text)}, lit.span};
            if (negative) {
                c.label = Expr{Unary{UnaryOp::Neg, literal}, since(label_start)};
            } else {
                c.label = literal;
            }
            expect(TokenKind::Punctuation, ":");
            c.body = parse_body();
            sw.cases.push_back(std::move(c));
        }
        if (accept_kw("default")) {
            expect(TokenKind::Punctuation, ":");
            sw.default_block = parse_body();
        }
        expect(TokenKind::Punctuation, "}");
        return Stmt{std::move(sw), since(start)};
    }

    Stmt parse_for() {
        const Span start = take().span;
        For node;
        expect(TokenKind::Punctuation, "(");
        push_scope();
        if (!peek().is(TokenKind::Punctuation, ";")) {
            const Span init_start = peek().span;
            Stmt init = peek().is(TokenKind::Keyword, "int") ? parse_decl() : parse_assign_only();
            init.span = since(init_start);
            node.init = Box<Stmt>(std::move(init));
        }
        expect(TokenKind::Punctuation, ";");
        if (!peek().is(TokenKind::Punctuation, ";")) node.cond = parse_expr();
        expect(TokenKind::Punctuation, ";");
        if (!peek().is(TokenKind::Punctuation, ")")) {
            const Span step_start = peek().span;
            Stmt step = parse_assign_only();
            step.span = since(step_start);
            node.step = Box<Stmt>(std::move(step));
        }
        expect(TokenKind::Punctuation, ")");
        node.body = parse_body();
        pop_scope();
        return Stmt{std::move(node), since(start)};
    }

    Stmt parse_assign_only() {
        Stmt s = parse_simple();
        if (!s.as<Assign>()) {
            throw Error({DiagnosticKind::Syntax, s.span, "expected an assignment"});
        }
        return s;
    }

    /// Assignment, increment/decrement or call, without the trailing ';'.
    Stmt parse_simple() {
        const Span start = peek().span;
        if (peek().is(TokenKind::Operator, "++") || peek().is(TokenKind::Operator, "--")) {
            const bool inc = take().text == "++";
            Expr target = parse_lvalue();
            return Stmt{Assign{std::move(target), inc ? AssignKind::Increment : AssignKind::Decrement,
                               std::nullopt},
                        since(start)};
        }
        if (peek().kind == TokenKind::Identifier && peek(1).is(TokenKind::Punctuation, "(")) {
            Expr call = parse_postfix();
            if (!call.as<CallExpr>()) fail(peek(), "';'");
            check_call(call);
            return Stmt{CallStmt{std::move(call)}, since(start)};
        }
        Expr target = parse_lvalue();
        const Token& op = peek();
        if (op.kind != TokenKind::Operator) fail(op, "assignment operator");
        AssignKind kind;
        if (op.text == "=") kind = AssignKind::Plain;
        else if (op.text == "+=") kind = AssignKind::AddAssign;
        else if (op.text == "-=") kind = AssignKind::SubAssign;
        else if (op.text == "*=") kind = AssignKind::MulAssign;
        else if (op.text == "/=") kind = AssignKind::DivAssign;
        else if (op.text == "%=") kind = AssignKind::ModAssign;
        else if (op.text == "++") kind = AssignKind::Increment;
        else if (op.text == "--") kind = AssignKind::Decrement;
        else fail(op, "assignment operator");
        take();
        Assign a{std::move(target), kind, std::nullopt};
        if (kind != AssignKind::Increment && kind != AssignKind::Decrement) a.value = parse_expr();
        return Stmt{std::move(a), since(start)};
    }

    Expr parse_lvalue() {
        const Token& t = peek();
        if (t.kind != TokenKind::Identifier && !t.is(TokenKind::Operator, "::")) {
            fail(t, "assignable expression");
        }
        Expr e = parse_postfix();
        check_expr(e);
        if (!lvalue_base(e)) {
            throw Error({DiagnosticKind::Syntax, e.span, "expression is not assignable"});
        }
        return e;
    }

    // -- expressions -------------------------------------------------------

    Expr parse_expr() {
        Expr e = parse_binary(0);
        check_expr(e);
        return e;
    }

    Expr parse_binary(std::size_t level) {
        const auto& levels = binary_levels();
        if (level == levels.size()) return parse_unary();
        Expr lhs = parse_binary(level + 1);
        while (true) {
            const Token& t = peek();
            if (t.kind != TokenKind::Operator) break;
            const BinaryOp* matched = nullptr;
            for (const auto& [text, op] : levels[level].ops) {
                if (t.text == text) matched = &op;
            }
            if (!matched) break;
            const BinaryOp op = *matched;
            take();
            Expr rhs = parse_binary(level + 1);
            const Span span = cover(lhs.span, rhs.span);
            lhs = Expr{Binary{op, std::move(lhs), std::move(rhs)}, span};
        }
        return lhs;
    }

    Expr parse_unary() {
        const Span start = peek().span;
        if (accept_op("-")) {
            Expr operand = parse_unary();
            return Expr{Unary{UnaryOp::Neg, std::move(operand)}, since(start)};
        }
        if (accept_op("!")) {
            Expr operand = parse_unary();
            return Expr{Unary{UnaryOp::Not, std::move(operand)}, since(start)};
        }
        return parse_postfix();
    }

    Expr parse_postfix() {
        Expr e = parse_primary();
        while (peek().is(TokenKind::Punctuation, "[")) {
            take();
            Expr index = parse_binary(0);
            expect(TokenKind::Punctuation, "]");
            const Span span = since(e.span);
            e = Expr{Subscript{std::move(e), std::move(index)}, span};
        }
        return e;
    }

    Expr parse_primary() {
        const Token& t = peek();
        const Span start = t.span;
        switch (t.kind) {
            case TokenKind::IntLiteral: {
                take();
                std::int64_t value = 0;
                try {
                    value = std::stoll(t.text);
                } catch (const std::out_of_range&) {
                    throw Error({DiagnosticKind::Syntax, t.span, "integer literal out of range"});
                }
                return Expr{IntLit{value}, t.span};
            }
            case TokenKind::StringLiteral: {
                take();
                return Expr{StrLit{t.text.substr(1, t.text.size() - 2)}, t.span};
            }
            case TokenKind::Identifier: {
                take();
                if (peek().is(TokenKind::Punctuation, "(")) {
                    CallExpr call{t.text, t.span, {}};
                    take();
                    if (!peek().is(TokenKind::Punctuation, ")")) {
                        do {
                            call.args.push_back(parse_binary(0));
                        } while (accept_punct(","));
                    }
                    expect(TokenKind::Punctuation, ")");
                    return Expr{std::move(call), since(start)};
                }
                return Expr{Ident{t.text, false}, t.span};
            }
            case TokenKind::Operator:
                if (t.text == "::") {
                    take();
                    const Token& name = expect_ident();
                    return Expr{Ident{name.text, true}, since(start)};
                }
                break;
            case TokenKind::Punctuation:
                if (t.text == "(") {
                    take();
                    Expr inner = parse_binary(0);
                    expect(TokenKind::Punctuation, ")");
                    return inner;
                }
                break;
            default:
                break;
        }
        fail(t, "expression");
    }

    /// String literals may appear only as direct arguments of `print`, and
    /// `print` itself only as a statement.
    void check_expr(const Expr& e) const {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, StrLit>) {
                    throw Error({DiagnosticKind::Syntax, e.span,
                                 "string literals are only allowed as arguments of print"});
                } else if constexpr (std::is_same_v<T, Binary>) {
                    check_expr(*n.lhs);
                    check_expr(*n.rhs);
                } else if constexpr (std::is_same_v<T, Unary>) {
                    check_expr(*n.operand);
                } else if constexpr (std::is_same_v<T, Subscript>) {
                    check_expr(*n.base);
                    check_expr(*n.index);
                } else if constexpr (std::is_same_v<T, CallExpr>) {
                    if (n.callee == "print") {
                        throw Error({DiagnosticKind::Syntax, e.span,
                                     "print(...) is only valid as a statement"});
                    }
                    check_call_args(e);
                }
            },
            e.node);
    }

    void check_call_args(const Expr& e) const {
        const auto& call = *e.as<CallExpr>();
        if (call.callee == "read" && !call.args.empty()) {
            throw Error({DiagnosticKind::Syntax, e.span, "read() takes no arguments"});
        }
        for (const auto& a : call.args) check_expr(a);
    }

    void check_call(const Expr& e) const {
        const auto& call = *e.as<CallExpr>();
        if (call.callee != "print") {
            check_call_args(e);
            return;
        }
        if (call.args.empty()) {
            throw Error({DiagnosticKind::Syntax, e.span, "print(...) needs at least one argument"});
        }
        for (const auto& a : call.args) {
            if (!a.as<StrLit>()) check_expr(a);
        }
    }

    std::span<const Token> toks_;
    ParseOptions options_;
    std::size_t pos_ = 0;
    Span last_{};
    mutable Token eof_;
    std::vector<std::unordered_set<std::string>> scopes_;
};

}  // namespace

SourceUnit parse(std::span<const Token> tokens, const ParseOptions& options) {
    return Parser(tokens, options).run();
}

SourceUnit parse_source(std::string_view source, const ParseOptions& options) {
    const auto tokens = tokenize(source);
    return parse(tokens, options);
}

}  // namespace cogscope
