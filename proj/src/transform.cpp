#include "cogscope/transform.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cogscope/lexer.hpp"
#include "cogscope/parser.hpp"
#include "cogscope/render.hpp"
#include "cogscope/resolver.hpp"

namespace cogscope {

namespace {

// Generic walkers; E/S deduce to const or mutable nodes.

template <class E, class F>
void each_expr(E& e, F&& f) {
    f(e);
    std::visit(
        [&](auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Binary>) {
                each_expr(*n.lhs, f);
                each_expr(*n.rhs, f);
            } else if constexpr (std::is_same_v<T, Unary>) {
                each_expr(*n.operand, f);
            } else if constexpr (std::is_same_v<T, Subscript>) {
                each_expr(*n.base, f);
                each_expr(*n.index, f);
            } else if constexpr (std::is_same_v<T, CallExpr>) {
                for (auto& a : n.args) each_expr(a, f);
            }
        },
        e.node);
}

template <class S, class F>
void each_stmt_expr(S& s, F&& f);

template <class B, class F>
void each_block_expr(B& b, F&& f) {
    for (auto& s : b.stmts) each_stmt_expr(s, f);
}

template <class S, class F>
void each_stmt_expr(S& s, F&& f) {
    std::visit(
        [&](auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Decl>) {
                for (auto& d : n.declarators) {
                    if (d.init) each_expr(*d.init, f);
                    if (d.init_list)
                        for (auto& e : *d.init_list) each_expr(e, f);
                }
            } else if constexpr (std::is_same_v<T, Assign>) {
                each_expr(n.target, f);
                if (n.value) each_expr(*n.value, f);
            } else if constexpr (std::is_same_v<T, CallStmt>) {
                each_expr(n.call, f);
            } else if constexpr (std::is_same_v<T, If>) {
                each_expr(n.cond, f);
                each_block_expr(n.then_block, f);
                if (n.else_block) each_block_expr(*n.else_block, f);
            } else if constexpr (std::is_same_v<T, Switch>) {
                each_expr(n.scrutinee, f);
                for (auto& c : n.cases) {
                    each_expr(c.label, f);
                    each_block_expr(c.body, f);
                }
                if (n.default_block) each_block_expr(*n.default_block, f);
            } else if constexpr (std::is_same_v<T, For>) {
                if (n.init) each_stmt_expr(**n.init, f);
                if (n.cond) each_expr(*n.cond, f);
                if (n.step) each_stmt_expr(**n.step, f);
                each_block_expr(n.body, f);
            } else if constexpr (std::is_same_v<T, While> || std::is_same_v<T, DoWhile>) {
                each_expr(n.cond, f);
                each_block_expr(n.body, f);
            } else if constexpr (std::is_same_v<T, Parallel> || std::is_same_v<T, Interrupt>) {
                each_block_expr(n.body, f);
            } else if constexpr (std::is_same_v<T, Return>) {
                if (n.value) each_expr(*n.value, f);
            } else if constexpr (std::is_same_v<T, Block>) {
                each_block_expr(n, f);
            }
        },
        s.node);
}

template <class S, class F>
void each_declarator(S& s, F&& f);

template <class B, class F>
void each_block_declarator(B& b, F&& f) {
    for (auto& s : b.stmts) each_declarator(s, f);
}

template <class S, class F>
void each_declarator(S& s, F&& f) {
    std::visit(
        [&](auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Decl>) {
                for (auto& d : n.declarators) f(d);
            } else if constexpr (std::is_same_v<T, If>) {
                each_block_declarator(n.then_block, f);
                if (n.else_block) each_block_declarator(*n.else_block, f);
            } else if constexpr (std::is_same_v<T, Switch>) {
                for (auto& c : n.cases) each_block_declarator(c.body, f);
                if (n.default_block) each_block_declarator(*n.default_block, f);
            } else if constexpr (std::is_same_v<T, For>) {
                if (n.init) each_declarator(**n.init, f);
                each_block_declarator(n.body, f);
            } else if constexpr (std::is_same_v<T, While> || std::is_same_v<T, DoWhile> ||
                                 std::is_same_v<T, Parallel> || std::is_same_v<T, Interrupt>) {
                each_block_declarator(n.body, f);
            } else if constexpr (std::is_same_v<T, Block>) {
                each_block_declarator(n, f);
            }
        },
        s.node);
}

std::set<std::string> top_level_names(const std::vector<Stmt>& stmts) {
    std::set<std::string> names;
    for (const auto& s : stmts) {
        if (const auto* d = s.as<Decl>())
            for (const auto& dc : d->declarators) names.insert(dc.name);
    }
    return names;
}

/// Unqualified variable names an expression tree mentions.
std::set<std::string> mentioned(const Stmt& s) {
    std::set<std::string> names;
    each_stmt_expr(s, [&](const Expr& e) {
        if (const auto* id = e.as<Ident>(); id && !id->global) names.insert(id->name);
    });
    return names;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
    for (int k = 1;; ++k) {
        std::string candidate = base + "_" + std::to_string(k);
        if (!taken.count(candidate)) return candidate;
    }
}

void rename_callees(Stmt& s, const std::map<std::string, std::string>& map) {
    each_stmt_expr(s, [&](Expr& e) {
        if (auto* c = e.as<CallExpr>()) {
            const auto it = map.find(c->callee);
            if (it != map.end()) c->callee = it->second;
        }
    });
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

SourceUnit concat(const SourceUnit& p_in, const SourceUnit& q_in) {
    const SourceUnit p = parse_source(render(p_in), ParseOptions{true});
    const SourceUnit q = parse_source(render(q_in), ParseOptions{true});
    const ResolvedUnit rq = resolve(q);

    const FunctionDef& p_main = *p.find_function("main");
    const FunctionDef& q_main = *q.find_function("main");

    SourceUnit out;
    out.globals = p.globals;
    const std::set<std::string> p_globals = top_level_names(p.globals);
    std::vector<Stmt> q_prefix;
    for (const auto& g : q.globals) {
        Decl kept;
        for (const auto& d : g.as<Decl>()->declarators) {
            if (!p_globals.count(d.name)) {
                kept.declarators.push_back(d);
            } else if (d.init) {
                q_prefix.push_back(Stmt{Assign{Expr{Ident{d.name, true}, Span{}}, AssignKind::Plain, *d.init}, Span{}});
            }
        }
        if (!kept.declarators.empty()) out.globals.push_back(Stmt{std::move(kept), Span{}});
    }

    std::set<std::string> function_names;
    for (const auto& f : p.functions) function_names.insert(f.name);
    for (const auto& f : q.functions) function_names.insert(f.name);
    std::map<std::string, std::string> q_renames;
    std::set<std::string> taken = function_names;
    for (const auto& f : q.functions) {
        if (f.name == "main") continue;
        if (p.find_function(f.name)) {
            const std::string fresh = fresh_name(f.name, taken);
            taken.insert(fresh);
            q_renames[f.name] = fresh;
        }
    }

    for (const auto& f : p.functions)
        if (f.name != "main") out.functions.push_back(f);
    for (const auto& f : q.functions) {
        if (f.name == "main") continue;
        FunctionDef copy = f;
        if (const auto it = q_renames.find(copy.name); it != q_renames.end()) copy.name = it->second;
        for (auto& s : copy.body.stmts) rename_callees(s, q_renames);
        out.functions.push_back(std::move(copy));
    }

    FunctionDef main_fn = p_main;
    for (const auto& param : q_main.params) {
        const bool present = std::any_of(main_fn.params.begin(), main_fn.params.end(),
                                          [&](const Param& x) { return x.name == param.name; });
        if (!present) main_fn.params.push_back(param);
    }

    std::set<std::string> p_top = top_level_names(p_main.body.stmts);
    for (const auto& param : p_main.params) p_top.insert(param.name);

    std::vector<Stmt> tail = std::move(q_prefix);
    for (const auto& original : q_main.body.stmts) {
        Stmt s = original;
        // Globals of Q that a local of P's main would capture get qualified.
        each_stmt_expr(s, [&](Expr& e) {
            auto* id = e.as<Ident>();
            if (!id || id->global || !p_top.count(id->name)) return;
            const auto sym = rq.binding_at(e.span.offset);
            if (sym && rq.symbols[*sym].kind == SymbolKind::Global) id->global = true;
        });
        rename_callees(s, q_renames);
        if (auto* d = s.as<Decl>()) {
            Decl kept;
            for (auto& dc : d->declarators) {
                if (!p_top.count(dc.name)) {
                    kept.declarators.push_back(std::move(dc));
                    continue;
                }
                if (dc.init) {
                    if (!kept.declarators.empty()) {
                        tail.push_back(Stmt{std::move(kept), Span{}});
                        kept = Decl{};
                    }
                    tail.push_back(Stmt{Assign{Expr{Ident{dc.name, false}, Span{}}, AssignKind::Plain,
                                               std::move(*dc.init)},
                                        Span{}});
                }
            }
            if (!kept.declarators.empty()) tail.push_back(Stmt{std::move(kept), Span{}});
            continue;
        }
        tail.push_back(std::move(s));
    }
    for (auto& s : tail) main_fn.body.stmts.push_back(std::move(s));
    out.functions.push_back(std::move(main_fn));
    return out;
}

std::string concat_source(std::string_view p, std::string_view q) {
    const ParseOptions opts{true};
    return render(concat(parse_source(p, opts), parse_source(q, opts)));
}

std::set<std::string> program_names(const SourceUnit& unit) {
    std::set<std::string> names;
    const auto collect = [&](const auto& stmt) {
        each_stmt_expr(stmt, [&](const Expr& e) {
            if (const auto* id = e.as<Ident>()) names.insert(id->name);
            if (const auto* c = e.as<CallExpr>(); c && !is_builtin(c->callee)) names.insert(c->callee);
        });
        each_declarator(stmt, [&](const Declarator& d) { names.insert(d.name); });
    };
    for (const auto& g : unit.globals) collect(g);
    for (const auto& f : unit.functions) {
        names.insert(f.name);
        for (const auto& p : f.params) names.insert(p.name);
        for (const auto& s : f.body.stmts) collect(s);
    }
    names.erase("main");
    return names;
}

SourceUnit rename(const SourceUnit& unit, const std::map<std::string, std::string>& mapping) {
    const std::set<std::string> names = program_names(unit);
    std::set<std::string> images;
    for (const auto& name : names) {
        const auto it = mapping.find(name);
        const std::string& image = it == mapping.end() ? name : it->second;
        if (!is_identifier(image) || is_keyword(image) || is_builtin(image) || image == "main") {
            throw std::invalid_argument("rename: '" + image + "' is not a usable name");
        }
        if (!images.insert(image).second) {
            throw std::invalid_argument("rename: mapping is not injective at '" + image + "'");
        }
    }
    if (const auto it = mapping.find("main"); it != mapping.end() && it->second != "main") {
        throw std::invalid_argument("rename: 'main' cannot be renamed");
    }

    const auto map = [&](std::string& name) {
        const auto it = mapping.find(name);
        if (it != mapping.end()) name = it->second;
    };
    const auto apply = [&](Stmt& stmt) {
        each_stmt_expr(stmt, [&](Expr& e) {
            if (auto* id = e.as<Ident>()) map(id->name);
            if (auto* c = e.as<CallExpr>(); c && !is_builtin(c->callee)) map(c->callee);
        });
        each_declarator(stmt, [&](Declarator& d) { map(d.name); });
    };

    SourceUnit out = unit;
    for (auto& g : out.globals) apply(g);
    for (auto& f : out.functions) {
        if (f.name != "main") map(f.name);
        for (auto& p : f.params) map(p.name);
        for (auto& s : f.body.stmts) apply(s);
    }
    return out;
}

std::map<std::string, std::string> random_renaming(const SourceUnit& unit, std::mt19937_64& rng) {
    const std::set<std::string> names = program_names(unit);
    std::vector<std::size_t> order(names.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::map<std::string, std::string> mapping;
    std::size_t i = 0;
    for (const auto& name : names) mapping[name] = "r" + std::to_string(order[i++]);
    return mapping;
}

SourceUnit permute(const SourceUnit& unit, std::uint64_t seed) {
    SourceUnit out = unit;
    FunctionDef* main_fn = out.find_function("main");
    if (!main_fn) return out;
    auto& stmts = main_fn->body.stmts;
    const std::size_t n = stmts.size();
    if (n < 2) return out;

    std::vector<std::set<std::string>> declared(n);
    std::vector<std::set<std::string>> uses(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (const auto* d = stmts[i].as<Decl>())
            for (const auto& dc : d->declarators) declared[i].insert(dc.name);
        uses[i] = mentioned(stmts[i]);
    }
    const auto intersects = [](const std::set<std::string>& a, const std::set<std::string>& b) {
        return std::any_of(a.begin(), a.end(), [&](const std::string& x) { return b.count(x) > 0; });
    };

    std::vector<std::vector<std::size_t>> preds(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (intersects(declared[i], uses[j]) || intersects(declared[j], uses[i]) ||
                intersects(declared[i], declared[j]))
                preds[j].push_back(i);

    std::mt19937_64 rng(seed);
    std::vector<bool> placed(n, false);
    std::vector<Stmt> result;
    result.reserve(n);
    while (result.size() < n) {
        std::vector<std::size_t> ready;
        for (std::size_t j = 0; j < n; ++j) {
            if (placed[j]) continue;
            if (std::all_of(preds[j].begin(), preds[j].end(), [&](std::size_t i) { return placed[i]; }))
                ready.push_back(j);
        }
        const std::size_t pick =
            ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)];
        placed[pick] = true;
        result.push_back(stmts[pick]);
    }
    stmts = std::move(result);
    return out;
}

}  // namespace cogscope
