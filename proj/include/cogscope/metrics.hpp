#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cogscope/granule.hpp"
#include "cogscope/info.hpp"
#include "cogscope/lines.hpp"
#include "cogscope/parser.hpp"
#include "cogscope/resolver.hpp"

namespace cogscope {

// ---------------------------------------------------------------------------
// Formula-level operations

/// (N_i + N_o) * Wc
[[nodiscard]] std::int64_t cfs(const IoClassification& io, std::int64_t wc);

struct WicsResult {
    double wics = 0.0;
    double cicm = 0.0;
};

/// WICS = sum n(k) / (LOCS - k + 1) over the code lines, CICM = WICS * Wc.
[[nodiscard]] WicsResult wics_cicm(std::span<const std::uint32_t> line_counts, std::int64_t wc);

/// (N_i1 + N_i2) * Wc
[[nodiscard]] std::int64_t mccm(const IoClassification& io, std::int64_t wc);

/// S_io + Wc
[[nodiscard]] std::int64_t cpcm(const IoClassification& io, std::int64_t wc);

/// Granule tree weighted by I(L): leaves score weight * I(region), internal
/// granules weight * (I(header) + sum over children).
[[nodiscard]] std::int64_t scim_icn(const GranuleTree& tree, const ResolvedUnit& resolved,
                                    const InfoAnnotations& ann);

/// Same recursion with SI(L). Result is in ESCIU.
[[nodiscard]] std::int64_t escim(const GranuleTree& tree, const ResolvedUnit& resolved,
                                 const InfoAnnotations& ann);

/// ESCIM / LOC. Throws std::domain_error when loc is 0.
[[nodiscard]] double efficiency(std::int64_t escim_value, std::uint32_t loc);

// ---------------------------------------------------------------------------
// Reports

struct GranuleRow {
    GranuleId id = 0;
    BcsKind kind = BcsKind::Seq;
    int weight = 1;
    std::uint32_t depth = 1;
    Span span;
    std::optional<GranuleId> parent;
    std::vector<GranuleId> children;
    std::int64_t si = 0;           // SI over the whole region
    std::int64_t info = 0;         // I over the whole region
    std::int64_t header_si = 0;    // SI of the implicit header leaf, internal granules only
    std::int64_t header_info = 0;
    std::int64_t wc = 0;           // structural weight of the subtree
    std::int64_t escim = 0;        // ESCIM value of the subtree
    std::int64_t scim_icn = 0;
    std::int64_t contribution = 0;  // weight * SI(region)
    std::vector<VariableExtrema> variables;
};

struct VariableRow {
    std::string name;
    SymbolId symbol = 0;
    std::string kind;
    std::string function;  // empty for globals
    std::int64_t icn_max = 0;
    std::int64_t sicn_max = 0;
    std::int64_t sicn_min = 0;
};

struct MetricValues {
    std::uint32_t loc = 0;
    std::int64_t wc = 0;
    std::uint32_t inputs = 0;   // N_i
    std::uint32_t outputs = 0;  // N_o
    std::uint32_t s_io = 0;
    std::uint32_t operators = 0;  // N_i1
    std::uint32_t operands = 0;   // N_i2
    std::int64_t cfs = 0;
    double wics = 0.0;
    double cicm = 0.0;
    std::int64_t mccm = 0;
    std::int64_t cpcm = 0;
    std::int64_t info = 0;  // I(L) over the analyzed code
    std::int64_t si = 0;    // SI(L) over the analyzed code
    std::int64_t scim_icn = 0;
    std::int64_t escim = 0;
    double efficiency_e = 0.0;
};

struct FunctionReport {
    std::string name;
    Span span;
    MetricValues metrics;
    GranuleTree tree;
    std::vector<GranuleRow> granules;
};

/// Everything derived from one translation unit.
struct Analysis {
    std::vector<Token> tokens;
    ResolvedUnit resolved;
    InfoAnnotations annotations;
    MetricValues program;
    std::vector<FunctionReport> functions;
    std::vector<VariableRow> variables;
};

/// Full pipeline: tokenize, parse, resolve, annotate, granulate, measure.
/// Throws cogscope::Error on lexical, syntax or resolution errors.
/// `granule_rows = false` leaves FunctionReport::granules empty.
[[nodiscard]] Analysis analyze(std::string_view source, const ParseOptions& options = {}, bool granule_rows = true);

/// Granule rows of one tree in id order.
[[nodiscard]] std::vector<GranuleRow> granule_report(const GranuleTree& tree, const ResolvedUnit& resolved,
                                                     const InfoAnnotations& ann);

}  // namespace cogscope
