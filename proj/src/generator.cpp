#include "cogscope/generator.hpp"

#include <algorithm>
#include <random>

#include "cogscope/render.hpp"

namespace cogscope {

namespace {

enum class Form {
    Declare, Assign, Compound, Increment, Read, Print, Call,
    IfElse, SwitchCase, ForLoop, WhileLoop, DoWhile, Parallel, Interrupt, Block,
};

bool is_control_form(Form f) {
    switch (f) {
        case Form::IfElse:
        case Form::SwitchCase:
        case Form::ForLoop:
        case Form::WhileLoop:
        case Form::DoWhile:
        case Form::Parallel:
        case Form::Interrupt:
        case Form::Block:
            return true;
        default:
            return false;
    }
}

Expr ident(std::string name) { return Expr{Ident{std::move(name), false}, Span{}}; }
Expr literal(std::int64_t v) { return Expr{IntLit{v}, Span{}}; }
Expr call_expr(std::string callee, std::vector<Expr> args) {
    return Expr{CallExpr{std::move(callee), Span{}, std::move(args)}, Span{}};
}

Stmt make(auto node) { return Stmt{std::move(node), Span{}}; }

struct Helper {
    std::string name;
    int arity = 0;
};

class Generator {
public:
    explicit Generator(const GeneratorConfig& config) : cfg_(config), rng_(config.seed) {}

    SourceUnit run() {
        SourceUnit unit;
        FunctionDef main_fn;
        main_fn.name = "main";
        if (cfg_.max_statements <= 0) {
            unit.functions.push_back(std::move(main_fn));
            return unit;
        }

        scopes_.emplace_back();
        if (cfg_.arrays) {
            Declarator mem;
            mem.name = "mem";
            mem.is_array = true;
            mem.array_size = 8;
            unit.globals.push_back(make(Decl{{std::move(mem)}}));
        }
        const int globals = uniform(0, std::max(0, cfg_.max_globals));
        for (int i = 0; i < globals; ++i) {
            Declarator d;
            d.name = "g" + std::to_string(i);
            d.init = literal(uniform(0, 9));
            scopes_.back().push_back(d.name);
            unit.globals.push_back(make(Decl{{std::move(d)}}));
        }

        const int helpers = uniform(0, std::max(0, cfg_.max_functions));
        for (int i = 0; i < helpers; ++i) helpers_.push_back(Helper{"f" + std::to_string(i), uniform(0, 2)});

        for (const Helper& h : helpers_) {
            FunctionDef fn;
            fn.name = h.name;
            fn.returns_int = true;
            scopes_.emplace_back();
            for (int p = 0; p < h.arity; ++p) {
                fn.params.push_back(Param{"p" + std::to_string(p), Span{}, false});
                scopes_.back().push_back(fn.params.back().name);
            }
            scopes_.emplace_back();
            const int count = uniform(1, std::max(1, cfg_.max_statements / 2));
            for (int s = 0; s < count; ++s) fn.body.stmts.push_back(statement(cfg_.max_depth, false));
            fn.body.stmts.push_back(make(Return{expr(2)}));
            scopes_.pop_back();
            scopes_.pop_back();
            unit.functions.push_back(std::move(fn));
        }

        scopes_.emplace_back();
        const int count = uniform(1, cfg_.max_statements);
        for (int s = 0; s < count; ++s) main_fn.body.stmts.push_back(statement(cfg_.max_depth, true));
        scopes_.pop_back();
        unit.functions.push_back(std::move(main_fn));
        return unit;
    }

private:
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    template <class T>
    const T& pick(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1))];
    }

    std::vector<std::string> visible() const {
        std::vector<std::string> names;
        for (const auto& scope : scopes_)
            for (const auto& n : scope)
                if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
        return names;
    }

    std::vector<std::string> free_local_names() const {
        std::vector<std::string> names;
        for (int i = 0; i < cfg_.variable_pool; ++i) {
            std::string n = "v" + std::to_string(i);
            const auto& inner = scopes_.back();
            if (std::find(inner.begin(), inner.end(), n) == inner.end()) names.push_back(std::move(n));
        }
        return names;
    }

    // -- expressions --------------------------------------------------------

    Expr expr(int depth) {
        const auto names = visible();
        std::vector<double> w{3.0, names.empty() ? 0.0 : 4.0, depth > 0 ? 3.0 : 0.0, depth > 0 ? 0.5 : 0.0,
                              cfg_.arrays && depth > 0 ? 1.0 : 0.0,
                              !helpers_.empty() && depth > 0 ? 0.4 : 0.0};
        switch (std::discrete_distribution<int>(w.begin(), w.end())(rng_)) {
            case 0: return literal(uniform(0, 9));
            case 1: return ident(pick(names));
            case 2: {
                static const std::vector<BinaryOp> ops = {
                    BinaryOp::Add, BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div, BinaryOp::Mod,
                    BinaryOp::Lt,  BinaryOp::Le,  BinaryOp::Gt,  BinaryOp::Eq,  BinaryOp::Ne,  BinaryOp::And,
                    BinaryOp::Or,  BinaryOp::BitAnd, BinaryOp::BitXor, BinaryOp::Shl,
                };
                const BinaryOp op = pick(ops);
                Expr lhs = expr(depth - 1);
                Expr rhs = expr(depth - 1);
                return Expr{Binary{op, std::move(lhs), std::move(rhs)}, Span{}};
            }
            case 3: return Expr{Unary{chance(0.7) ? UnaryOp::Neg : UnaryOp::Not, expr(depth - 1)}, Span{}};
            case 4: return Expr{Subscript{ident("mem"), expr(depth - 1)}, Span{}};
            default: return call(depth - 1);
        }
    }

    Expr call(int depth) {
        const Helper& h = pick(helpers_);
        std::vector<Expr> args;
        for (int i = 0; i < h.arity; ++i) args.push_back(expr(std::max(0, depth)));
        return call_expr(h.name, std::move(args));
    }

    Expr condition() {
        const auto names = visible();
        if (names.empty() || chance(0.2)) return expr(2);
        static const std::vector<BinaryOp> rel = {BinaryOp::Lt, BinaryOp::Le, BinaryOp::Gt,
                                                  BinaryOp::Ge, BinaryOp::Ne};
        const BinaryOp op = pick(rel);
        Expr lhs = ident(pick(names));
        Expr rhs = expr(1);
        return Expr{Binary{op, std::move(lhs), std::move(rhs)}, Span{}};
    }

    Expr target() {
        const auto names = visible();
        if (cfg_.arrays && (names.empty() || chance(0.15))) {
            return Expr{Subscript{ident("mem"), expr(1)}, Span{}};
        }
        return ident(pick(names));
    }

    // -- statements -----------------------------------------------------------

    Stmt statement(int depth, bool main_top) {
        const StatementWeights& sw = cfg_.weights;
        const bool can_assign = cfg_.arrays || !visible().empty();
        const bool can_declare = !free_local_names().empty();
        const std::vector<std::pair<Form, double>> table = {
            {Form::Declare, sw.declare},       {Form::Assign, sw.assign},
            {Form::Compound, sw.compound},     {Form::Increment, sw.increment},
            {Form::Read, sw.read},             {Form::Print, sw.print},
            {Form::Call, sw.call},             {Form::IfElse, sw.if_else},
            {Form::SwitchCase, sw.switch_case}, {Form::ForLoop, sw.for_loop},
            {Form::WhileLoop, sw.while_loop},  {Form::DoWhile, sw.do_while},
            {Form::Parallel, sw.parallel},     {Form::Interrupt, sw.interrupt},
            {Form::Block, sw.block},
        };
        std::vector<double> w;
        for (const auto& [form, weight] : table) {
            bool enabled = true;
            if (is_control_form(form)) enabled = depth > 0;
            if (form == Form::Declare) enabled = can_declare;
            if (form == Form::Assign || form == Form::Compound || form == Form::Increment || form == Form::Read)
                enabled = can_assign;
            if (form == Form::Call) enabled = !helpers_.empty();
            w.push_back(enabled ? std::max(0.0, weight) : 0.0);
        }
        if (std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) w[static_cast<std::size_t>(Form::Print)] = 1.0;
        const Form form = table[static_cast<std::size_t>(std::discrete_distribution<int>(w.begin(), w.end())(rng_))].first;

        switch (form) {
            case Form::Declare: return declaration(main_top);
            case Form::Assign: {
                Expr t = target();
                return make(Assign{std::move(t), AssignKind::Plain, expr(2)});
            }
            case Form::Compound: {
                static const std::vector<AssignKind> kinds = {AssignKind::AddAssign, AssignKind::SubAssign,
                                                              AssignKind::MulAssign, AssignKind::DivAssign,
                                                              AssignKind::ModAssign};
                const AssignKind kind = pick(kinds);
                Expr t = target();
                return make(Assign{std::move(t), kind, expr(1)});
            }
            case Form::Increment: {
                Expr t = target();
                return make(Assign{std::move(t), chance(0.6) ? AssignKind::Increment : AssignKind::Decrement,
                                   std::nullopt});
            }
            case Form::Read: {
                Expr t = target();
                return make(Assign{std::move(t), AssignKind::Plain, call_expr("read", {})});
            }
            case Form::Print: {
                std::vector<Expr> args;
                const int n = uniform(1, 2);
                for (int i = 0; i < n; ++i) {
                    args.push_back(chance(0.2) ? Expr{StrLit{"s"}, Span{}} : expr(1));
                }
                return make(CallStmt{call_expr("print", std::move(args))});
            }
            case Form::Call: return make(CallStmt{call(1)});
            case Form::IfElse: {
                If node;
                node.cond = condition();
                node.then_block = body(depth - 1);
                if (chance(0.4)) node.else_block = body(depth - 1);
                return make(std::move(node));
            }
            case Form::SwitchCase: {
                Switch node;
                node.scrutinee = expr(1);
                std::vector<std::int64_t> labels;
                const int n = uniform(1, 3);
                while (static_cast<int>(labels.size()) < n) {
                    const std::int64_t l = uniform(-2, 6);
                    if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
                }
                for (const std::int64_t l : labels) {
                    Expr label = l < 0 ? Expr{Unary{UnaryOp::Neg, literal(-l)}, Span{}} : literal(l);
                    node.cases.push_back(Case{std::move(label), body(depth - 1)});
                }
                if (chance(0.5)) node.default_block = body(depth - 1);
                return make(std::move(node));
            }
            case Form::ForLoop: return for_loop(depth);
            case Form::WhileLoop: {
                While node;
                node.cond = condition();
                node.body = body(depth - 1);
                return make(std::move(node));
            }
            case Form::DoWhile: {
                DoWhile node;
                node.body = body(depth - 1);
                node.cond = condition();
                return make(std::move(node));
            }
            case Form::Parallel: return make(Parallel{body(depth - 1)});
            case Form::Interrupt: return make(Interrupt{body(depth - 1)});
            case Form::Block: return make(body(depth - 1));
        }
        return make(Return{});
    }

    Stmt declaration(bool main_top) {
        Decl decl;
        const int count = main_top ? 1 : uniform(1, 2);
        for (int i = 0; i < count; ++i) {
            const auto names = free_local_names();
            if (names.empty()) break;
            Declarator d;
            d.name = pick(names);
            if (main_top || chance(0.7)) d.init = chance(0.15) ? call_expr("read", {}) : expr(2);
            scopes_.back().push_back(d.name);
            decl.declarators.push_back(std::move(d));
        }
        return make(std::move(decl));
    }

    Stmt for_loop(int depth) {
        For node;
        scopes_.emplace_back();
        std::string loop_var;
        const int init_kind = uniform(0, 9);
        if (init_kind < 6 && !free_local_names().empty()) {
            Declarator d;
            d.name = pick(free_local_names());
            d.init = expr(1);
            loop_var = d.name;
            scopes_.back().push_back(d.name);
            node.init = Box<Stmt>(make(Decl{{std::move(d)}}));
        } else if (init_kind < 8 && !visible().empty()) {
            loop_var = pick(visible());
            node.init = Box<Stmt>(make(Assign{ident(loop_var), AssignKind::Plain, expr(1)}));
        }
        if (chance(0.9)) {
            if (!loop_var.empty()) {
                node.cond = Expr{Binary{BinaryOp::Lt, ident(loop_var), expr(1)}, Span{}};
            } else {
                node.cond = condition();
            }
        }
        if (chance(0.85) && (!loop_var.empty() || !visible().empty())) {
            const std::string var = loop_var.empty() ? pick(visible()) : loop_var;
            if (chance(0.7)) {
                node.step = Box<Stmt>(make(Assign{ident(var), AssignKind::Increment, std::nullopt}));
            } else {
                node.step = Box<Stmt>(make(Assign{ident(var), AssignKind::AddAssign, literal(uniform(1, 3))}));
            }
        }
        node.body = body(depth - 1);
        scopes_.pop_back();
        return make(std::move(node));
    }

    Block body(int depth) {
        Block b;
        scopes_.emplace_back();
        const int count = uniform(1, 3);
        for (int i = 0; i < count; ++i) b.stmts.push_back(statement(depth, false));
        scopes_.pop_back();
        return b;
    }

    const GeneratorConfig& cfg_;
    std::mt19937_64 rng_;
    std::vector<std::vector<std::string>> scopes_;
    std::vector<Helper> helpers_;
};

}  // namespace

SourceUnit generate_unit(const GeneratorConfig& config) { return Generator(config).run(); }

std::string generate(const GeneratorConfig& config) { return render(generate_unit(config)); }

}  // namespace cogscope
