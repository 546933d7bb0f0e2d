#include "cogscope/resolver.hpp"

#include <algorithm>

#include "cogscope/lines.hpp"

namespace cogscope {

const char* symbol_kind_name(SymbolKind kind) {
    switch (kind) {
        case SymbolKind::Global: return "global";
        case SymbolKind::Parameter: return "parameter";
        case SymbolKind::Local: return "local";
    }
    return "?";
}

const char* occurrence_kind_name(OccurrenceKind kind) {
    switch (kind) {
        case OccurrenceKind::Read: return "read";
        case OccurrenceKind::Write: return "write";
        case OccurrenceKind::Declare: return "declare";
        case OccurrenceKind::DeclareInit: return "declare-init";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// operator counting

std::uint32_t operator_count(const Expr& expr) {
    return std::visit(
        [](const auto& n) -> std::uint32_t {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Binary>) {
                return 1 + operator_count(*n.lhs) + operator_count(*n.rhs);
            } else if constexpr (std::is_same_v<T, Unary>) {
                return 1 + operator_count(*n.operand);
            } else if constexpr (std::is_same_v<T, Subscript>) {
                return operator_count(*n.base) + operator_count(*n.index);
            } else if constexpr (std::is_same_v<T, CallExpr>) {
                std::uint32_t total = 0;
                for (const auto& a : n.args) total += operator_count(a);
                return total;
            } else {
                return 0;
            }
        },
        expr.node);
}

namespace {

std::uint32_t block_operators(const Block& b) {
    std::uint32_t total = 0;
    for (const auto& s : b.stmts) total += operator_count(s);
    return total;
}

}  // namespace

std::uint32_t operator_count(const Stmt& stmt) {
    return std::visit(
        [](const auto& n) -> std::uint32_t {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Decl>) {
                std::uint32_t total = 0;
                for (const auto& d : n.declarators) {
                    if (d.init) total += operator_count(*d.init);
                    if (d.init_list)
                        for (const auto& e : *d.init_list) total += operator_count(e);
                }
                return total;
            } else if constexpr (std::is_same_v<T, Assign>) {
                std::uint32_t total = operator_count(n.target);
                if (n.value) total += operator_count(*n.value);
                if (n.kind != AssignKind::Plain) total += 1;
                return total;
            } else if constexpr (std::is_same_v<T, CallStmt>) {
                return operator_count(n.call);
            } else if constexpr (std::is_same_v<T, If>) {
                std::uint32_t total = operator_count(n.cond) + block_operators(n.then_block);
                if (n.else_block) total += block_operators(*n.else_block);
                return total;
            } else if constexpr (std::is_same_v<T, Switch>) {
                std::uint32_t total = operator_count(n.scrutinee);
                for (const auto& c : n.cases) total += operator_count(c.label) + block_operators(c.body);
                if (n.default_block) total += block_operators(*n.default_block);
                return total;
            } else if constexpr (std::is_same_v<T, For>) {
                std::uint32_t total = block_operators(n.body);
                if (n.init) total += operator_count(**n.init);
                if (n.cond) total += operator_count(*n.cond);
                if (n.step) total += operator_count(**n.step);
                return total;
            } else if constexpr (std::is_same_v<T, While> || std::is_same_v<T, DoWhile>) {
                return operator_count(n.cond) + block_operators(n.body);
            } else if constexpr (std::is_same_v<T, Parallel> || std::is_same_v<T, Interrupt>) {
                return block_operators(n.body);
            } else if constexpr (std::is_same_v<T, Return>) {
                return n.value ? operator_count(*n.value) : 0;
            } else if constexpr (std::is_same_v<T, Block>) {
                return block_operators(n);
            } else {
                return 0;
            }
        },
        stmt.node);
}

// ---------------------------------------------------------------------------
// resolution

namespace {

bool contains_read_call(const Expr& e) {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Binary>) {
                return contains_read_call(*n.lhs) || contains_read_call(*n.rhs);
            } else if constexpr (std::is_same_v<T, Unary>) {
                return contains_read_call(*n.operand);
            } else if constexpr (std::is_same_v<T, Subscript>) {
                return contains_read_call(*n.base) || contains_read_call(*n.index);
            } else if constexpr (std::is_same_v<T, CallExpr>) {
                if (n.callee == "read") return true;
                return std::any_of(n.args.begin(), n.args.end(), contains_read_call);
            } else {
                return false;
            }
        },
        e.node);
}

class Resolver {
public:
    explicit Resolver(SourceUnit unit) { out_.unit = std::move(unit); }

    ResolvedUnit run() {
        const auto& fns = out_.unit.functions;
        for (std::size_t i = 0; i < fns.size(); ++i) function_ids_.emplace(fns[i].name, static_cast<int>(i));

        scopes_.emplace_back();  // global scope
        for (const auto& g : out_.unit.globals) {
            if (const auto* d = g.as<Decl>()) declaration(*d);
        }
        for (std::size_t i = 0; i < fns.size(); ++i) {
            current_fn_ = static_cast<int>(i);
            function(fns[i]);
        }
        current_fn_ = -1;

        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        out_.call_edges = edges_;
        close_call_graph();
        return std::move(out_);
    }

private:
    // -- scopes -------------------------------------------------------------

    void push() { scopes_.emplace_back(); }
    void pop() { scopes_.pop_back(); }

    SymbolId declare(const std::string& name, SymbolKind kind, const Span& at) {
        const auto id = static_cast<SymbolId>(out_.symbols.size());
        out_.symbols.push_back(Symbol{id, name, kind, at,
                                      static_cast<std::uint32_t>(scopes_.size() - 1), current_fn_});
        scopes_.back()[name] = id;
        out_.bindings[at.offset] = id;
        return id;
    }

    SymbolId lookup(const Ident& id, const Span& at) const {
        if (id.global) {
            const auto it = scopes_.front().find(id.name);
            if (it == scopes_.front().end()) {
                throw Error({DiagnosticKind::Resolve, at,
                             "'::" + id.name + "' names no global variable"});
            }
            return it->second;
        }
        for (auto s = scopes_.rbegin(); s != scopes_.rend(); ++s) {
            const auto it = s->find(id.name);
            if (it != s->end()) return it->second;
        }
        throw Error({DiagnosticKind::Resolve, at, "unresolved name '" + id.name + "'"});
    }

    // -- units ----------------------------------------------------------------

    std::uint32_t begin_unit(EffectKind kind, const Span& span) {
        EffectUnit u;
        u.kind = kind;
        u.span = span;
        u.function = current_fn_;
        u.first_occurrence = static_cast<std::uint32_t>(out_.occurrences.size());
        out_.units.push_back(u);
        return static_cast<std::uint32_t>(out_.units.size() - 1);
    }

    void end_unit(std::uint32_t index) {
        auto& u = out_.units[index];
        u.occurrence_count = static_cast<std::uint32_t>(out_.occurrences.size()) - u.first_occurrence;
    }

    void occurrence(SymbolId sym, OccurrenceKind kind, const Span& span, std::uint32_t unit) {
        Occurrence o;
        o.symbol = sym;
        o.kind = kind;
        o.span = span;
        o.unit = unit;
        o.position = static_cast<std::uint32_t>(out_.occurrences.size()) - out_.units[unit].first_occurrence;
        o.in_print = in_print_;
        o.in_return = in_return_;
        out_.occurrences.push_back(o);
    }

    /// Emits read occurrences for every variable in `e`, left to right.
    void reads(const Expr& e, std::uint32_t unit) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Ident>) {
                    const SymbolId sym = lookup(n, e.span);
                    out_.bindings[e.span.offset] = sym;
                    occurrence(sym, OccurrenceKind::Read, ident_span(e), unit);
                } else if constexpr (std::is_same_v<T, Binary>) {
                    reads(*n.lhs, unit);
                    reads(*n.rhs, unit);
                } else if constexpr (std::is_same_v<T, Unary>) {
                    reads(*n.operand, unit);
                } else if constexpr (std::is_same_v<T, Subscript>) {
                    reads(*n.base, unit);
                    reads(*n.index, unit);
                } else if constexpr (std::is_same_v<T, CallExpr>) {
                    call_target(n);
                    for (const auto& a : n.args) reads(a, unit);
                }
            },
            e.node);
    }

    /// Span of the identifier proper; `::name` spans include the qualifier.
    static Span ident_span(const Expr& e) { return e.span; }

    void call_target(const CallExpr& call) {
        if (is_builtin(call.callee)) return;
        const auto it = function_ids_.find(call.callee);
        if (it == function_ids_.end()) {
            throw Error({DiagnosticKind::Resolve, call.callee_span,
                         "call to undefined function '" + call.callee + "'"});
        }
        edges_.emplace_back(current_fn_, it->second);
    }

    /// Reads inside the subscripts of an assignment target, outermost last.
    void target_index_reads(const Expr& target, std::uint32_t unit) {
        if (const auto* sub = target.as<Subscript>()) {
            target_index_reads(*sub->base, unit);
            reads(*sub->index, unit);
        }
    }

    void declaration(const Decl& decl) {
        for (const auto& d : decl.declarators) {
            Span unit_span = d.name_span;
            if (d.init) unit_span = cover(d.name_span, d.init->span);
            if (d.init_list && !d.init_list->empty()) unit_span = cover(d.name_span, d.init_list->back().span);
            const std::uint32_t unit = begin_unit(EffectKind::Declaration, unit_span);
            std::uint32_t ops = 0;
            bool input = false;
            if (d.init) {
                reads(*d.init, unit);
                ops += operator_count(*d.init);
                input = contains_read_call(*d.init);
            }
            if (d.init_list) {
                for (const auto& e : *d.init_list) {
                    reads(e, unit);
                    ops += operator_count(e);
                    input = input || contains_read_call(e);
                }
            }
            const SymbolKind kind = scopes_.size() == 1 ? SymbolKind::Global : SymbolKind::Local;
            const SymbolId sym = declare(d.name, kind, d.name_span);
            occurrence(sym, d.has_initializer() ? OccurrenceKind::DeclareInit : OccurrenceKind::Declare,
                       d.name_span, unit);
            auto& u = out_.units[unit];
            u.target = sym;
            u.has_initializer = d.has_initializer();
            u.operators = ops;
            u.reads_input = input;
            end_unit(unit);
        }
    }

    void assignment(const Assign& a, const Span& span) {
        const std::uint32_t unit = begin_unit(EffectKind::Assignment, span);
        if (a.value) reads(*a.value, unit);
        target_index_reads(a.target, unit);
        const Expr* base = lvalue_base_expr(a.target);
        const SymbolId sym = lookup(*base->as<Ident>(), base->span);
        out_.bindings[base->span.offset] = sym;
        if (a.kind != AssignKind::Plain) occurrence(sym, OccurrenceKind::Read, base->span, unit);
        occurrence(sym, OccurrenceKind::Write, base->span, unit);
        auto& u = out_.units[unit];
        u.target = sym;
        u.operators = operator_count(a.target) + (a.value ? operator_count(*a.value) : 0) +
                      (a.kind == AssignKind::Plain ? 0 : 1);
        u.reads_input = a.value && contains_read_call(*a.value);
        end_unit(unit);
    }

    void condition(const Expr& e, const Span& span, EffectKind kind = EffectKind::Condition) {
        const std::uint32_t unit = begin_unit(kind, span);
        reads(e, unit);
        end_unit(unit);
    }

    void simple_or_header(const Stmt& s) {
        if (const auto* d = s.as<Decl>()) {
            declaration(*d);
        } else if (const auto* a = s.as<Assign>()) {
            assignment(*a, s.span);
        }
    }

    void block(const Block& b) {
        push();
        for (const auto& s : b.stmts) stmt(s);
        pop();
    }

    void stmt(const Stmt& s) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Decl>) {
                    declaration(n);
                } else if constexpr (std::is_same_v<T, Assign>) {
                    assignment(n, s.span);
                } else if constexpr (std::is_same_v<T, CallStmt>) {
                    const auto& call = *n.call.template as<CallExpr>();
                    const std::uint32_t unit = begin_unit(EffectKind::Call, s.span);
                    in_print_ = call.callee == "print";
                    reads(n.call, unit);
                    in_print_ = false;
                    end_unit(unit);
                } else if constexpr (std::is_same_v<T, If>) {
                    condition(n.cond, n.cond.span);
                    block(n.then_block);
                    if (n.else_block) block(*n.else_block);
                } else if constexpr (std::is_same_v<T, Switch>) {
                    condition(n.scrutinee, n.scrutinee.span);
                    for (const auto& c : n.cases) block(c.body);
                    if (n.default_block) block(*n.default_block);
                } else if constexpr (std::is_same_v<T, For>) {
                    push();
                    if (n.init) simple_or_header(**n.init);
                    if (n.cond) condition(*n.cond, n.cond->span);
                    if (n.step) simple_or_header(**n.step);
                    block(n.body);
                    pop();
                } else if constexpr (std::is_same_v<T, While>) {
                    condition(n.cond, n.cond.span);
                    block(n.body);
                } else if constexpr (std::is_same_v<T, DoWhile>) {
                    block(n.body);
                    condition(n.cond, n.cond.span);
                } else if constexpr (std::is_same_v<T, Parallel> || std::is_same_v<T, Interrupt>) {
                    block(n.body);
                } else if constexpr (std::is_same_v<T, Return>) {
                    const std::uint32_t unit = begin_unit(EffectKind::Return, s.span);
                    if (n.value) {
                        in_return_ = true;
                        reads(*n.value, unit);
                        in_return_ = false;
                    }
                    end_unit(unit);
                } else if constexpr (std::is_same_v<T, Block>) {
                    block(n);
                }
            },
            s.node);
    }

    void function(const FunctionDef& fn) {
        push();  // parameter scope
        for (const auto& p : fn.params) {
            const std::uint32_t unit = begin_unit(EffectKind::Declaration, p.span);
            const SymbolId sym = declare(p.name, SymbolKind::Parameter, p.span);
            occurrence(sym, OccurrenceKind::Declare, p.span, unit);
            out_.units[unit].target = sym;
            end_unit(unit);
        }
        block(fn.body);
        pop();
    }

    void close_call_graph() {
        const std::size_t n = out_.unit.functions.size();
        auto& reach = out_.reaches;
        reach.assign(n, std::vector<bool>(n, false));
        for (const auto& [from, to] : edges_) reach[from][to] = true;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (reach[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (reach[k][j]) reach[i][j] = true;
    }

    ResolvedUnit out_;
    std::vector<std::unordered_map<std::string, SymbolId>> scopes_;
    std::unordered_map<std::string, int> function_ids_;
    std::vector<std::pair<int, int>> edges_;
    int current_fn_ = -1;
    bool in_print_ = false;
    bool in_return_ = false;
};

}  // namespace

int ResolvedUnit::function_index(std::string_view name) const {
    for (std::size_t i = 0; i < unit.functions.size(); ++i)
        if (unit.functions[i].name == name) return static_cast<int>(i);
    return -1;
}

bool ResolvedUnit::is_recursive_call(int caller, int callee) const {
    if (caller < 0 || callee < 0) return false;
    return reaches[static_cast<std::size_t>(callee)][static_cast<std::size_t>(caller)];
}

std::optional<SymbolId> ResolvedUnit::binding_at(std::uint32_t offset) const {
    const auto it = bindings.find(offset);
    if (it == bindings.end()) return std::nullopt;
    return it->second;
}

ResolvedUnit resolve(SourceUnit unit) { return Resolver(std::move(unit)).run(); }

// ---------------------------------------------------------------------------
// I/O classification

IoClassification classify_io(const ResolvedUnit& resolved, std::span<const Token> tokens, int function) {
    IoClassification io;
    const auto in_scope = [&](int fn) { return function < 0 || fn == function; };

    for (const auto& u : resolved.units) {
        if (!in_scope(u.function) || !u.target) continue;
        if (u.reads_input) io.inputs.insert(*u.target);
    }
    for (const auto& sym : resolved.symbols) {
        if (sym.kind == SymbolKind::Parameter && in_scope(sym.function)) io.inputs.insert(sym.id);
    }
    for (const auto& o : resolved.occurrences) {
        if (!in_scope(resolved.units[o.unit].function)) continue;
        if (o.is_read() && (o.in_print || o.in_return)) io.outputs.insert(o.symbol);
    }
    for (const auto& o : resolved.occurrences) {
        if (!in_scope(resolved.units[o.unit].function)) continue;
        if (o.kind == OccurrenceKind::Declare) continue;
        if (io.inputs.count(o.symbol) || io.outputs.count(o.symbol)) ++io.io_occurrences;
    }

    std::span<const Token> range = tokens;
    if (function >= 0) {
        const Span fs = resolved.unit.functions[static_cast<std::size_t>(function)].span;
        const auto first = std::find_if(tokens.begin(), tokens.end(),
                                        [&](const Token& t) { return t.span.offset >= fs.offset; });
        const auto last = std::find_if(first, tokens.end(),
                                       [&](const Token& t) { return t.span.offset >= fs.end(); });
        range = std::span<const Token>(first, last);
    }
    const LineCount lines = count_lines(range);
    for (const auto& l : lines.lines) {
        io.operators += l.operators;
        io.operands += l.identifiers + l.literals;
        io.line_counts.push_back(l.information_count());
    }
    return io;
}

}  // namespace cogscope
