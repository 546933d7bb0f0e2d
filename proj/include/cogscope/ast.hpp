#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cogscope/span.hpp"

namespace cogscope {

/// Owning pointer with value semantics, used to break recursion in the AST.
template <class T>
class Box {
public:
    Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
    Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& other) {
        if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;
    ~Box() = default;

    T& operator*() { return *ptr_; }
    const T& operator*() const { return *ptr_; }
    T* operator->() { return ptr_.get(); }
    const T* operator->() const { return ptr_.get(); }

    friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

private:
    std::unique_ptr<T> ptr_;
};

// ---------------------------------------------------------------------------
// Expressions

enum class BinaryOp {
    Add, Sub, Mul, Div, Mod,
    Lt, Le, Gt, Ge, Eq, Ne,
    And, Or,
    BitAnd, BitOr, BitXor, Shl, Shr,
};

enum class UnaryOp { Neg, Not };

[[nodiscard]] const char* binary_op_text(BinaryOp op);
[[nodiscard]] const char* unary_op_text(UnaryOp op);

struct Expr;

struct Ident {
    std::string name;
    bool global = false;  // written `::name`
    friend bool operator==(const Ident&, const Ident&) = default;
};

struct IntLit {
    std::int64_t value = 0;
    friend bool operator==(const IntLit&, const IntLit&) = default;
};

struct StrLit {
    std::string text;  // raw contents between the quotes, escapes untouched
    friend bool operator==(const StrLit&, const StrLit&) = default;
};

struct Binary {
    BinaryOp op = BinaryOp::Add;
    Box<Expr> lhs;
    Box<Expr> rhs;
    friend bool operator==(const Binary&, const Binary&) = default;
};

struct Unary {
    UnaryOp op = UnaryOp::Neg;
    Box<Expr> operand;
    friend bool operator==(const Unary&, const Unary&) = default;
};

struct Subscript {
    Box<Expr> base;
    Box<Expr> index;
    friend bool operator==(const Subscript&, const Subscript&) = default;
};

struct CallExpr {
    std::string callee;
    Span callee_span;
    std::vector<Expr> args;
    friend bool operator==(const CallExpr& a, const CallExpr& b);
};

struct Expr {
    std::variant<Ident, IntLit, StrLit, Binary, Unary, Subscript, CallExpr> node;
    Span span;

    template <class T>
    [[nodiscard]] const T* as() const { return std::get_if<T>(&node); }
    template <class T>
    [[nodiscard]] T* as() { return std::get_if<T>(&node); }

    /// Structural equality; spans are not compared.
    friend bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }
};

inline bool operator==(const CallExpr& a, const CallExpr& b) {
    return a.callee == b.callee && a.args == b.args;
}

/// Identifier at the root of an assignable expression (`a` in `a[i][j]`), or
/// nullptr when the expression is not an lvalue.
[[nodiscard]] const Ident* lvalue_base(const Expr& e);
[[nodiscard]] const Expr* lvalue_base_expr(const Expr& e);

// ---------------------------------------------------------------------------
// Statements

struct Stmt;

struct Block {
    std::vector<Stmt> stmts;
    Span span;
    friend bool operator==(const Block& a, const Block& b) { return a.stmts == b.stmts; }
};

struct Declarator {
    std::string name;
    Span name_span;
    bool is_array = false;
    std::optional<std::int64_t> array_size;
    std::optional<Expr> init;
    std::optional<std::vector<Expr>> init_list;  // `= {e, ...}` for arrays

    [[nodiscard]] bool has_initializer() const { return init.has_value() || init_list.has_value(); }

    friend bool operator==(const Declarator& a, const Declarator& b) {
        return a.name == b.name && a.is_array == b.is_array && a.array_size == b.array_size &&
               a.init == b.init && a.init_list == b.init_list;
    }
};

struct Decl {
    std::vector<Declarator> declarators;
    friend bool operator==(const Decl&, const Decl&) = default;
};

enum class AssignKind { Plain, AddAssign, SubAssign, MulAssign, DivAssign, ModAssign, Increment, Decrement };

[[nodiscard]] const char* assign_kind_text(AssignKind kind);

struct Assign {
    Expr target;
    AssignKind kind = AssignKind::Plain;
    std::optional<Expr> value;  // empty exactly for ++ / --
    friend bool operator==(const Assign&, const Assign&) = default;
};

struct CallStmt {
    Expr call;  // always holds a CallExpr
    friend bool operator==(const CallStmt&, const CallStmt&) = default;
};

struct If {
    Expr cond;
    Block then_block;
    std::optional<Block> else_block;
    friend bool operator==(const If&, const If&) = default;
};

struct Case {
    Expr label;
    Block body;
    friend bool operator==(const Case&, const Case&) = default;
};

struct Switch {
    Expr scrutinee;
    std::vector<Case> cases;
    std::optional<Block> default_block;
    friend bool operator==(const Switch&, const Switch&) = default;
};

struct For {
    std::optional<Box<Stmt>> init;  // Decl or Assign
    std::optional<Expr> cond;
    std::optional<Box<Stmt>> step;  // Assign
    Block body;
    friend bool operator==(const For&, const For&) = default;
};

struct While {
    Expr cond;
    Block body;
    friend bool operator==(const While&, const While&) = default;
};

struct DoWhile {
    Block body;
    Expr cond;
    friend bool operator==(const DoWhile&, const DoWhile&) = default;
};

struct Parallel {
    Block body;
    friend bool operator==(const Parallel&, const Parallel&) = default;
};

struct Interrupt {
    Block body;
    friend bool operator==(const Interrupt&, const Interrupt&) = default;
};

struct Return {
    std::optional<Expr> value;
    friend bool operator==(const Return&, const Return&) = default;
};

struct Stmt {
    std::variant<Decl, Assign, CallStmt, If, Switch, For, While, DoWhile, Parallel, Interrupt, Return, Block>
        node;
    Span span;

    template <class T>
    [[nodiscard]] const T* as() const { return std::get_if<T>(&node); }
    template <class T>
    [[nodiscard]] T* as() { return std::get_if<T>(&node); }

    /// True for the statement forms that are a basic control structure.
    [[nodiscard]] bool is_control() const;

    friend bool operator==(const Stmt& a, const Stmt& b) { return a.node == b.node; }
};

// ---------------------------------------------------------------------------
// Top level

struct Param {
    std::string name;
    Span span;
    bool is_array = false;
    friend bool operator==(const Param& a, const Param& b) {
        return a.name == b.name && a.is_array == b.is_array;
    }
};

struct FunctionDef {
    std::string name;
    Span name_span;
    bool returns_int = false;
    std::vector<Param> params;
    Block body;
    Span span;

    friend bool operator==(const FunctionDef& a, const FunctionDef& b) {
        return a.name == b.name && a.returns_int == b.returns_int && a.params == b.params &&
               a.body == b.body;
    }
};

/// A parsed translation unit. Globals are analyzed before any function body,
/// functions in source order.
struct SourceUnit {
    std::vector<Stmt> globals;  // each holds a Decl
    std::vector<FunctionDef> functions;

    [[nodiscard]] const FunctionDef* find_function(std::string_view name) const;
    [[nodiscard]] FunctionDef* find_function(std::string_view name);

    friend bool operator==(const SourceUnit&, const SourceUnit&) = default;
};

}  // namespace cogscope
