#include "cogscope/info.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace cogscope {

namespace {

/// Counter increment a unit applies to its target under the ICN rules.
std::int64_t icn_delta(const EffectUnit& u) {
    if (u.kind == EffectKind::Assignment) return 1 + u.operators;
    if (u.kind == EffectKind::Declaration && u.has_initializer) return 1 + u.operators;
    return 0;
}

}  // namespace

std::vector<std::int64_t> compute_icn(const ResolvedUnit& resolved) {
    std::vector<std::int64_t> out(resolved.occurrences.size(), 0);
    std::unordered_map<std::string, std::int64_t> counter;
    for (const auto& u : resolved.units) {
        std::int64_t before = 0;
        std::int64_t after = 0;
        const std::string* target = nullptr;
        if (u.target) {
            target = &resolved.symbols[*u.target].name;
            before = counter[*target];
            after = before + icn_delta(u);
            counter[*target] = after;
        }
        for (std::uint32_t i = 0; i < u.occurrence_count; ++i) {
            const std::uint32_t index = u.first_occurrence + i;
            const Occurrence& o = resolved.occurrences[index];
            const std::string& name = resolved.symbols[o.symbol].name;
            if (target && name == *target) {
                out[index] = o.is_read() ? before : after;
            } else {
                out[index] = counter[name];
            }
        }
    }
    return out;
}

std::vector<std::int64_t> compute_sicn(const ResolvedUnit& resolved) {
    std::vector<std::int64_t> out(resolved.occurrences.size(), 0);
    std::vector<std::int64_t> counter(resolved.symbols.size(), 0);
    for (const auto& u : resolved.units) {
        std::int64_t before = 0;
        if (u.target) {
            before = counter[*u.target];
            if (u.kind == EffectKind::Declaration) {
                counter[*u.target] = 1 + u.operators;
            } else if (u.kind == EffectKind::Assignment) {
                counter[*u.target] += 1 + u.operators;
            }
        }
        for (std::uint32_t i = 0; i < u.occurrence_count; ++i) {
            const std::uint32_t index = u.first_occurrence + i;
            const Occurrence& o = resolved.occurrences[index];
            if (u.target && o.symbol == *u.target && o.is_read()) {
                out[index] = before;
            } else {
                out[index] = counter[o.symbol];
            }
        }
    }
    return out;
}

InfoAnnotations annotate(const ResolvedUnit& resolved) {
    return InfoAnnotations{compute_icn(resolved), compute_sicn(resolved)};
}

bool Region::contains(const Span& s) const {
    return std::any_of(spans.begin(), spans.end(), [&](const Span& r) { return r.contains(s); });
}

std::vector<VariableExtrema> region_extrema(const ResolvedUnit& resolved, const InfoAnnotations& ann,
                                            const Region& region) {
    std::map<SymbolId, VariableExtrema> by_symbol;
    for (std::size_t i = 0; i < resolved.occurrences.size(); ++i) {
        const Occurrence& o = resolved.occurrences[i];
        if (!region.contains(o.span)) continue;
        auto [it, fresh] = by_symbol.try_emplace(o.symbol);
        VariableExtrema& v = it->second;
        if (fresh) {
            v.symbol = o.symbol;
            v.name = resolved.symbols[o.symbol].name;
            v.icn_max = ann.icn[i];
            v.sicn_max = ann.sicn[i];
            v.sicn_min = ann.sicn[i];
        } else {
            v.icn_max = std::max(v.icn_max, ann.icn[i]);
            v.sicn_max = std::max(v.sicn_max, ann.sicn[i]);
            v.sicn_min = std::min(v.sicn_min, ann.sicn[i]);
        }
        ++v.occurrences;
    }
    std::vector<VariableExtrema> out;
    out.reserve(by_symbol.size());
    for (auto& [id, v] : by_symbol) out.push_back(std::move(v));
    return out;
}

std::int64_t info_content(const ResolvedUnit& resolved, const InfoAnnotations& ann, const Region& region) {
    std::map<std::string, std::int64_t> by_name;
    for (std::size_t i = 0; i < resolved.occurrences.size(); ++i) {
        const Occurrence& o = resolved.occurrences[i];
        if (!region.contains(o.span)) continue;
        auto& best = by_name[resolved.symbols[o.symbol].name];
        best = std::max(best, ann.icn[i]);
    }
    std::int64_t total = 0;
    for (const auto& [name, value] : by_name) total += value;
    return total;
}

std::int64_t scope_information(const ResolvedUnit& resolved, const InfoAnnotations& ann, const Region& region) {
    std::int64_t total = 0;
    for (const auto& v : region_extrema(resolved, ann, region)) total += v.sicn_max - v.sicn_min;
    return total;
}

std::int64_t icn_max(const ResolvedUnit& resolved, const InfoAnnotations& ann, const Region& region,
                     std::string_view name) {
    std::int64_t best = 0;
    for (std::size_t i = 0; i < resolved.occurrences.size(); ++i) {
        const Occurrence& o = resolved.occurrences[i];
        if (resolved.symbols[o.symbol].name == name && region.contains(o.span)) best = std::max(best, ann.icn[i]);
    }
    return best;
}

Region granule_region(const Granule& g) { return Region(g.region); }

Region header_region(const Granule& g) { return Region(g.header); }

}  // namespace cogscope
