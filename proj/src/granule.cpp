#include "cogscope/granule.hpp"

#include <algorithm>
#include <stdexcept>

namespace cogscope {

int weight_of(BcsKind kind) {
    switch (kind) {
        case BcsKind::Seq: return 1;
        case BcsKind::Ite: return 2;
        case BcsKind::Case: return 3;
        case BcsKind::For: return 3;
        case BcsKind::Repeat: return 3;
        case BcsKind::While: return 3;
        case BcsKind::Call: return 2;
        case BcsKind::Recursion: return 3;
        case BcsKind::Parallel: return 4;
        case BcsKind::Interrupt: return 4;
    }
    return 1;
}

const char* bcs_kind_name(BcsKind kind) {
    switch (kind) {
        case BcsKind::Seq: return "SEQ";
        case BcsKind::Ite: return "ITE";
        case BcsKind::Case: return "CASE";
        case BcsKind::For: return "FOR";
        case BcsKind::Repeat: return "REPEAT";
        case BcsKind::While: return "WHILE";
        case BcsKind::Call: return "CALL";
        case BcsKind::Recursion: return "RECURSION";
        case BcsKind::Parallel: return "PARALLEL";
        case BcsKind::Interrupt: return "INTERRUPT";
    }
    return "?";
}

std::vector<GranuleId> GranuleTree::ancestors(GranuleId id) const {
    std::vector<GranuleId> out;
    for (auto p = granules[id].parent; p; p = granules[*p].parent) out.push_back(*p);
    return out;
}

namespace {

void user_callees(const Expr& e, std::vector<std::string>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Binary>) {
                user_callees(*n.lhs, out);
                user_callees(*n.rhs, out);
            } else if constexpr (std::is_same_v<T, Unary>) {
                user_callees(*n.operand, out);
            } else if constexpr (std::is_same_v<T, Subscript>) {
                user_callees(*n.base, out);
                user_callees(*n.index, out);
            } else if constexpr (std::is_same_v<T, CallExpr>) {
                if (!is_builtin(n.callee)) out.push_back(n.callee);
                for (const auto& a : n.args) user_callees(a, out);
            }
        },
        e.node);
}

/// User-defined callees named in a simple statement.
std::vector<std::string> simple_callees(const Stmt& s) {
    std::vector<std::string> out;
    if (const auto* d = s.as<Decl>()) {
        for (const auto& dc : d->declarators) {
            if (dc.init) user_callees(*dc.init, out);
            if (dc.init_list)
                for (const auto& e : *dc.init_list) user_callees(e, out);
        }
    } else if (const auto* a = s.as<Assign>()) {
        user_callees(a->target, out);
        if (a->value) user_callees(*a->value, out);
    } else if (const auto* c = s.as<CallStmt>()) {
        user_callees(c->call, out);
    } else if (const auto* r = s.as<Return>()) {
        if (r->value) user_callees(*r->value, out);
    }
    return out;
}

bool is_bcs_statement(const Stmt& s) { return s.is_control() || !simple_callees(s).empty(); }

/// Appends the statements of `b`, looking through bare blocks.
void flatten(const Block& b, std::vector<const Stmt*>& out) {
    for (const auto& s : b.stmts) {
        if (const auto* inner = s.as<Block>()) {
            flatten(*inner, out);
        } else {
            out.push_back(&s);
        }
    }
}

class Granulator {
public:
    Granulator(const ResolvedUnit& resolved, int fn) : resolved_(resolved), fn_(fn) {}

    GranuleTree run() {
        const FunctionDef& def = resolved_.unit.functions.at(static_cast<std::size_t>(fn_));
        tree_.function = def.name;
        tree_.function_index = fn_;
        std::vector<const Stmt*> body;
        flatten(def.body, body);
        tree_.top_level = sequence(body, 1, std::nullopt);
        for (const auto& g : tree_.granules) {
            if (g.is_leaf()) ++tree_.leaf_count;
            tree_.max_depth = std::max(tree_.max_depth, g.depth);
        }
        return std::move(tree_);
    }

private:
    GranuleId allocate(BcsKind kind, std::uint32_t depth, std::optional<GranuleId> parent) {
        Granule g;
        g.id = static_cast<GranuleId>(tree_.granules.size());
        g.kind = kind;
        g.weight = weight_of(kind);
        g.depth = depth;
        g.parent = parent;
        tree_.granules.push_back(std::move(g));
        return tree_.granules.back().id;
    }

    std::vector<GranuleId> sequence(const std::vector<const Stmt*>& stmts, std::uint32_t depth,
                                    std::optional<GranuleId> parent) {
        std::vector<GranuleId> ids;
        std::vector<const Stmt*> run;
        const auto flush = [&] {
            if (run.empty()) return;
            const GranuleId id = allocate(BcsKind::Seq, depth, parent);
            Granule& g = tree_.granules[id];
            g.region = cover(run.front()->span, run.back()->span);
            for (const Stmt* s : run) g.owned.push_back(s->span);
            ids.push_back(id);
            run.clear();
        };
        for (const Stmt* s : stmts) {
            if (!is_bcs_statement(*s)) {
                run.push_back(s);
                continue;
            }
            flush();
            ids.push_back(s->is_control() ? control(*s, depth, parent) : call(*s, depth, parent));
        }
        flush();
        return ids;
    }

    GranuleId call(const Stmt& s, std::uint32_t depth, std::optional<GranuleId> parent) {
        bool recursive = false;
        for (const auto& name : simple_callees(s)) {
            recursive = recursive || resolved_.is_recursive_call(fn_, resolved_.function_index(name));
        }
        const GranuleId id = allocate(recursive ? BcsKind::Recursion : BcsKind::Call, depth, parent);
        Granule& g = tree_.granules[id];
        g.region = s.span;
        g.owned.push_back(s.span);
        return id;
    }

    GranuleId control(const Stmt& s, std::uint32_t depth, std::optional<GranuleId> parent) {
        BcsKind kind = BcsKind::Seq;
        std::vector<Span> header;
        std::vector<Span> owned{s.span};
        std::vector<std::vector<const Stmt*>> branches;
        const auto branch = [&](const Block& b) {
            branches.emplace_back();
            flatten(b, branches.back());
        };

        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, If>) {
                    kind = BcsKind::Ite;
                    header.push_back(n.cond.span);
                    branch(n.then_block);
                    if (n.else_block) branch(*n.else_block);
                } else if constexpr (std::is_same_v<T, Switch>) {
                    kind = BcsKind::Case;
                    header.push_back(n.scrutinee.span);
                    for (const auto& c : n.cases) branch(c.body);
                    if (n.default_block) branch(*n.default_block);
                } else if constexpr (std::is_same_v<T, For>) {
                    kind = BcsKind::For;
                    if (n.init) {
                        header.push_back((*n.init)->span);
                        owned.push_back((*n.init)->span);
                    }
                    if (n.cond) header.push_back(n.cond->span);
                    if (n.step) {
                        header.push_back((*n.step)->span);
                        owned.push_back((*n.step)->span);
                    }
                    branch(n.body);
                } else if constexpr (std::is_same_v<T, While>) {
                    kind = BcsKind::While;
                    header.push_back(n.cond.span);
                    branch(n.body);
                } else if constexpr (std::is_same_v<T, DoWhile>) {
                    kind = BcsKind::Repeat;
                    header.push_back(n.cond.span);
                    branch(n.body);
                } else if constexpr (std::is_same_v<T, Parallel>) {
                    kind = BcsKind::Parallel;
                    branch(n.body);
                } else if constexpr (std::is_same_v<T, Interrupt>) {
                    kind = BcsKind::Interrupt;
                    branch(n.body);
                }
            },
            s.node);

        const GranuleId id = allocate(kind, depth, parent);
        {
            Granule& g = tree_.granules[id];
            g.region = s.span;
            g.header = header;
        }

        const bool nested = std::any_of(branches.begin(), branches.end(), [](const auto& stmts) {
            return std::any_of(stmts.begin(), stmts.end(), [](const Stmt* st) { return is_bcs_statement(*st); });
        });
        if (!nested) {
            for (const auto& stmts : branches)
                for (const Stmt* st : stmts) owned.push_back(st->span);
            tree_.granules[id].owned = std::move(owned);
            return id;
        }

        std::vector<GranuleId> children;
        for (const auto& stmts : branches) {
            auto part = sequence(stmts, depth + 1, id);
            children.insert(children.end(), part.begin(), part.end());
        }
        Granule& g = tree_.granules[id];
        g.owned = std::move(owned);
        g.children = std::move(children);
        return id;
    }

    const ResolvedUnit& resolved_;
    int fn_;
    GranuleTree tree_;
};

std::size_t block_statements(const Block& b);

std::size_t stmt_statements(const Stmt& s) {
    return std::visit(
        [&](const auto& n) -> std::size_t {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Block>) {
                return block_statements(n);
            } else if constexpr (std::is_same_v<T, If>) {
                return 1 + block_statements(n.then_block) + (n.else_block ? block_statements(*n.else_block) : 0);
            } else if constexpr (std::is_same_v<T, Switch>) {
                std::size_t total = 1;
                for (const auto& c : n.cases) total += block_statements(c.body);
                if (n.default_block) total += block_statements(*n.default_block);
                return total;
            } else if constexpr (std::is_same_v<T, For>) {
                return 1 + (n.init ? 1 : 0) + (n.step ? 1 : 0) + block_statements(n.body);
            } else if constexpr (std::is_same_v<T, While> || std::is_same_v<T, DoWhile> ||
                                 std::is_same_v<T, Parallel> || std::is_same_v<T, Interrupt>) {
                return 1 + block_statements(n.body);
            } else {
                return 1;
            }
        },
        s.node);
}

std::size_t block_statements(const Block& b) {
    std::size_t total = 0;
    for (const auto& s : b.stmts) total += stmt_statements(s);
    return total;
}

}  // namespace

GranuleTree granulate(const ResolvedUnit& resolved, int function_index) {
    if (function_index < 0 || static_cast<std::size_t>(function_index) >= resolved.unit.functions.size()) {
        throw std::out_of_range("granulate: no function with index " + std::to_string(function_index));
    }
    return Granulator(resolved, function_index).run();
}

GranuleTree granulate(const ResolvedUnit& resolved, std::string_view function) {
    const int index = resolved.function_index(function);
    if (index < 0) throw std::out_of_range("granulate: no function named '" + std::string(function) + "'");
    return granulate(resolved, index);
}

std::int64_t structural_weight(const GranuleTree& tree, GranuleId id) {
    const Granule& g = tree.at(id);
    if (g.is_leaf()) return g.weight;
    std::int64_t sum = 0;
    for (const GranuleId c : g.children) sum += structural_weight(tree, c);
    return g.weight * sum;
}

std::int64_t structural_weight(const GranuleTree& tree) {
    std::int64_t total = 0;
    for (const GranuleId id : tree.top_level) total += structural_weight(tree, id);
    return total;
}

std::size_t statement_count(const FunctionDef& fn) { return block_statements(fn.body); }

}  // namespace cogscope
