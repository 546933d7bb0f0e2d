#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cogscope/ast.hpp"
#include "cogscope/lexer.hpp"

namespace cogscope {

using SymbolId = std::uint32_t;

enum class SymbolKind { Global, Parameter, Local };

[[nodiscard]] const char* symbol_kind_name(SymbolKind kind);

/// One declaration site. Two declarations of the same name are two symbols.
struct Symbol {
    SymbolId id = 0;
    std::string name;
    SymbolKind kind = SymbolKind::Local;
    Span decl_span;
    std::uint32_t scope_depth = 0;  // 0 = global scope
    int function = -1;              // index into SourceUnit::functions, -1 for globals
};

enum class OccurrenceKind { Read, Write, Declare, DeclareInit };

[[nodiscard]] const char* occurrence_kind_name(OccurrenceKind kind);

/// An effect unit is the smallest piece of code that changes at most one
/// variable: a declarator, a parameter, an assignment, or a read-only
/// statement part (condition, call, return, switch scrutinee).
enum class EffectKind { Declaration, Assignment, Condition, Call, Return };

struct EffectUnit {
    EffectKind kind = EffectKind::Condition;
    Span span;           // the enclosing statement (or declarator / header part)
    int function = -1;   // -1 for global declarations
    std::optional<SymbolId> target;
    bool has_initializer = false;  // Declaration only
    std::uint32_t operators = 0;   // operators that feed the counter increment
    bool reads_input = false;      // the assigned value contains a read() call
    std::uint32_t first_occurrence = 0;
    std::uint32_t occurrence_count = 0;
};

struct Occurrence {
    SymbolId symbol = 0;
    OccurrenceKind kind = OccurrenceKind::Read;
    Span span;                 // the identifier itself
    std::uint32_t unit = 0;    // index into ResolvedUnit::units
    std::uint32_t position = 0;  // evaluation order inside the unit
    bool in_print = false;
    bool in_return = false;

    [[nodiscard]] bool is_write() const {
        return kind == OccurrenceKind::Write || kind == OccurrenceKind::DeclareInit;
    }
    [[nodiscard]] bool is_read() const { return kind == OccurrenceKind::Read; }
};

/// A SourceUnit with every identifier bound to its declaration and the
/// per-statement occurrence lists the counting schemes consume. Occurrences
/// and units are stored in analysis order: globals first, then every function
/// in source order, statements in source order.
struct ResolvedUnit {
    SourceUnit unit;
    std::vector<Symbol> symbols;
    std::vector<EffectUnit> units;
    std::vector<Occurrence> occurrences;
    /// Identifier byte offset -> bound symbol, for every variable identifier
    /// expression and every declarator/parameter name.
    std::unordered_map<std::uint32_t, SymbolId> bindings;
    /// (caller, callee) function index pairs, deduplicated, sorted.
    std::vector<std::pair<int, int>> call_edges;

    [[nodiscard]] int function_index(std::string_view name) const;
    /// True when `callee` can reach `caller` through the call graph, i.e. the
    /// call sits on a cycle (self calls included).
    [[nodiscard]] bool is_recursive_call(int caller, int callee) const;
    [[nodiscard]] std::span<const Occurrence> occurrences_of(const EffectUnit& u) const {
        return std::span<const Occurrence>(occurrences).subspan(u.first_occurrence, u.occurrence_count);
    }
    [[nodiscard]] std::optional<SymbolId> binding_at(std::uint32_t offset) const;

    std::vector<std::vector<bool>> reaches;  // transitive closure of call_edges
};

/// Binds identifiers under lexical scoping: the innermost enclosing
/// declaration wins, `::name` always binds the global, parameters belong to
/// the function scope. Throws cogscope::Error (Resolve) on an unresolved name,
/// on `::name` without a global `name`, or on a call to an unknown function.
[[nodiscard]] ResolvedUnit resolve(SourceUnit unit);

/// Counted operator occurrences: arithmetic, relational, logical and bitwise
/// operators, unary minus and `!`, and one per compound assignment or ++/--.
/// Plain `=`, subscripts, calls and `::` are not operators.
[[nodiscard]] std::uint32_t operator_count(const Expr& expr);
[[nodiscard]] std::uint32_t operator_count(const Stmt& stmt);

struct IoClassification {
    std::set<SymbolId> inputs;
    std::set<SymbolId> outputs;
    std::uint32_t io_occurrences = 0;  // S_io
    std::uint32_t operators = 0;       // N_i1
    std::uint32_t operands = 0;        // N_i2
    std::vector<std::uint32_t> line_counts;  // n(k), one per code line

    [[nodiscard]] std::uint32_t io_variables() const {
        return static_cast<std::uint32_t>(inputs.size() + outputs.size());
    }
};

/// Inputs are symbols assigned from a read() call plus the parameters of the
/// analyzed function(s); outputs are symbols passed to print or read by a
/// return. S_io counts read, write and initialized-declaration occurrences of
/// those symbols. Operator/operand/per-line counts are lexical over `tokens`,
/// which must be the token stream the unit was parsed from. `function` selects
/// one function; -1 classifies the whole program.
[[nodiscard]] IoClassification classify_io(const ResolvedUnit& resolved, std::span<const Token> tokens,
                                            int function = -1);

}  // namespace cogscope
