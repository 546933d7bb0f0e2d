#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cogscope/resolver.hpp"

namespace cogscope {

/// Basic control structure categories with their cognitive weights.
enum class BcsKind { Seq, Ite, Case, For, Repeat, While, Call, Recursion, Parallel, Interrupt };

inline constexpr BcsKind kAllBcsKinds[] = {BcsKind::Seq,    BcsKind::Ite,   BcsKind::Case,      BcsKind::For,
                                           BcsKind::Repeat, BcsKind::While, BcsKind::Call,      BcsKind::Recursion,
                                           BcsKind::Parallel, BcsKind::Interrupt};

[[nodiscard]] int weight_of(BcsKind kind);
[[nodiscard]] const char* bcs_kind_name(BcsKind kind);

using GranuleId = std::uint32_t;

struct Granule {
    GranuleId id = 0;
    BcsKind kind = BcsKind::Seq;
    int weight = 1;
    std::uint32_t depth = 1;   // nesting layer, top level = 1
    Span region;               // whole construct, header and body
    std::vector<Span> header;  // loop/branch header parts of a control granule
    std::vector<Span> owned;   // statements owned directly, not through a child
    std::vector<GranuleId> children;
    std::optional<GranuleId> parent;

    [[nodiscard]] bool is_leaf() const { return children.empty(); }
};

/// Granule hierarchy of one function. Granules are stored in pre-order, so a
/// parent always precedes its children and ids equal vector positions.
struct GranuleTree {
    std::string function;
    int function_index = -1;
    std::vector<Granule> granules;
    std::vector<GranuleId> top_level;
    std::uint32_t leaf_count = 0;
    std::uint32_t max_depth = 0;

    [[nodiscard]] const Granule& at(GranuleId id) const { return granules[id]; }
    [[nodiscard]] std::vector<GranuleId> ancestors(GranuleId id) const;
};

/// Decomposes a function body: maximal runs of simple statements become SEQ
/// granules; every control statement, and every simple statement calling a
/// user-defined function, becomes its own granule; control granules whose
/// bodies hold another such statement are split recursively. Bare blocks are
/// transparent. Throws std::out_of_range if the function does not exist.
[[nodiscard]] GranuleTree granulate(const ResolvedUnit& resolved, std::string_view function);
[[nodiscard]] GranuleTree granulate(const ResolvedUnit& resolved, int function_index);

/// Nested weights multiply, sibling weights add: a leaf contributes its
/// weight, an internal granule its weight times the sum over its children.
[[nodiscard]] std::int64_t structural_weight(const GranuleTree& tree);
[[nodiscard]] std::int64_t structural_weight(const GranuleTree& tree, GranuleId id);

/// Number of non-block statements in a function body, For headers included.
[[nodiscard]] std::size_t statement_count(const FunctionDef& fn);

}  // namespace cogscope
