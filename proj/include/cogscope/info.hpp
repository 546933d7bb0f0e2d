#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cogscope/granule.hpp"
#include "cogscope/resolver.hpp"

namespace cogscope {

/// Counter values attached to occurrences, parallel to
/// ResolvedUnit::occurrences. A read carries the value before its unit takes
/// effect, a write or declaration the value after.
struct InfoAnnotations {
    std::vector<std::int64_t> icn;
    std::vector<std::int64_t> sicn;
};

/// ICN: one counter per variable name for the whole unit, starting at 0. An
/// initialized declaration or an assignment adds 1 plus its operator count;
/// a plain declaration or a parameter adds nothing.
[[nodiscard]] std::vector<std::int64_t> compute_icn(const ResolvedUnit& resolved);

/// SICN: one counter per declared symbol. A declaration sets it to 1 plus the
/// initializer's operators, an assignment adds 1 plus its operator count.
/// Shadowing suspends the outer symbol, which continues untouched afterwards.
[[nodiscard]] std::vector<std::int64_t> compute_sicn(const ResolvedUnit& resolved);

[[nodiscard]] InfoAnnotations annotate(const ResolvedUnit& resolved);

/// A set of source spans; an occurrence lies in the region when its
/// identifier span is inside one of them.
struct Region {
    std::vector<Span> spans;

    Region() = default;
    explicit Region(Span span) : spans{span} {}
    explicit Region(std::vector<Span> parts) : spans(std::move(parts)) {}

    [[nodiscard]] bool contains(const Span& s) const;
};

struct VariableExtrema {
    SymbolId symbol = 0;
    std::string name;
    std::int64_t icn_max = 0;
    std::int64_t sicn_max = 0;
    std::int64_t sicn_min = 0;
    std::uint32_t occurrences = 0;
};

/// Per-symbol extrema over the occurrences inside `region`, ordered by symbol.
[[nodiscard]] std::vector<VariableExtrema> region_extrema(const ResolvedUnit& resolved,
                                                          const InfoAnnotations& ann, const Region& region);

/// I(L): sum over variable names of the largest ICN seen in the region.
[[nodiscard]] std::int64_t info_content(const ResolvedUnit& resolved, const InfoAnnotations& ann,
                                        const Region& region);

/// SI(L): sum over symbols of SICN_max - SICN_min in the region.
[[nodiscard]] std::int64_t scope_information(const ResolvedUnit& resolved, const InfoAnnotations& ann,
                                             const Region& region);

/// Largest ICN of `name` in the region, 0 when it does not occur.
[[nodiscard]] std::int64_t icn_max(const ResolvedUnit& resolved, const InfoAnnotations& ann,
                                   const Region& region, std::string_view name);

/// Region covering a granule: its full source extent.
[[nodiscard]] Region granule_region(const Granule& g);

/// Region covering only the header parts of a control granule.
[[nodiscard]] Region header_region(const Granule& g);

}  // namespace cogscope
