#include "cogscope/metrics.hpp"

#include <limits>
#include <stdexcept>

namespace cogscope {

std::int64_t cfs(const IoClassification& io, std::int64_t wc) { return io.io_variables() * wc; }

WicsResult wics_cicm(std::span<const std::uint32_t> line_counts, std::int64_t wc) {
    WicsResult r;
    const std::size_t locs = line_counts.size();
    for (std::size_t k = 1; k <= locs; ++k) {
        r.wics += static_cast<double>(line_counts[k - 1]) / static_cast<double>(locs - k + 1);
    }
    r.cicm = r.wics * static_cast<double>(wc);
    return r;
}

std::int64_t mccm(const IoClassification& io, std::int64_t wc) {
    return static_cast<std::int64_t>(io.operators + io.operands) * wc;
}

std::int64_t cpcm(const IoClassification& io, std::int64_t wc) { return io.io_occurrences + wc; }

namespace {

using RegionMeasure = std::int64_t (*)(const ResolvedUnit&, const InfoAnnotations&, const Region&);

std::int64_t weighted(const GranuleTree& tree, GranuleId id, const ResolvedUnit& resolved,
                      const InfoAnnotations& ann, RegionMeasure measure) {
    const Granule& g = tree.at(id);
    if (g.is_leaf()) return g.weight * measure(resolved, ann, granule_region(g));
    std::int64_t sum = g.header.empty() ? 0 : measure(resolved, ann, header_region(g));
    for (const GranuleId c : g.children) sum += weighted(tree, c, resolved, ann, measure);
    return g.weight * sum;
}

std::int64_t weighted(const GranuleTree& tree, const ResolvedUnit& resolved, const InfoAnnotations& ann,
                      RegionMeasure measure) {
    std::int64_t total = 0;
    for (const GranuleId id : tree.top_level) total += weighted(tree, id, resolved, ann, measure);
    return total;
}

}  // namespace

std::int64_t scim_icn(const GranuleTree& tree, const ResolvedUnit& resolved, const InfoAnnotations& ann) {
    return weighted(tree, resolved, ann, &info_content);
}

std::int64_t escim(const GranuleTree& tree, const ResolvedUnit& resolved, const InfoAnnotations& ann) {
    return weighted(tree, resolved, ann, &scope_information);
}

double efficiency(std::int64_t escim_value, std::uint32_t loc) {
    if (loc == 0) throw std::domain_error("efficiency is undefined for LOC = 0");
    return static_cast<double>(escim_value) / static_cast<double>(loc);
}

std::vector<GranuleRow> granule_report(const GranuleTree& tree, const ResolvedUnit& resolved,
                                       const InfoAnnotations& ann) {
    std::vector<GranuleRow> rows;
    rows.reserve(tree.granules.size());
    for (const Granule& g : tree.granules) {
        GranuleRow r;
        r.id = g.id;
        r.kind = g.kind;
        r.weight = g.weight;
        r.depth = g.depth;
        r.span = g.region;
        r.parent = g.parent;
        r.children = g.children;
        const Region region = granule_region(g);
        r.variables = region_extrema(resolved, ann, region);
        for (const auto& v : r.variables) r.si += v.sicn_max - v.sicn_min;
        r.info = info_content(resolved, ann, region);
        if (!g.is_leaf() && !g.header.empty()) {
            r.header_si = scope_information(resolved, ann, header_region(g));
            r.header_info = info_content(resolved, ann, header_region(g));
        }
        r.wc = structural_weight(tree, g.id);
        r.escim = weighted(tree, g.id, resolved, ann, &scope_information);
        r.scim_icn = weighted(tree, g.id, resolved, ann, &info_content);
        r.contribution = g.weight * r.si;
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

constexpr Span kEverything{1, 1, 0, std::numeric_limits<std::uint32_t>::max()};

void fill_io(MetricValues& m, const IoClassification& io) {
    m.inputs = static_cast<std::uint32_t>(io.inputs.size());
    m.outputs = static_cast<std::uint32_t>(io.outputs.size());
    m.s_io = io.io_occurrences;
    m.operators = io.operators;
    m.operands = io.operands;
    m.loc = static_cast<std::uint32_t>(io.line_counts.size());
    m.cfs = cfs(io, m.wc);
    const WicsResult w = wics_cicm(io.line_counts, m.wc);
    m.wics = w.wics;
    m.cicm = w.cicm;
    m.mccm = mccm(io, m.wc);
    m.cpcm = cpcm(io, m.wc);
}

}  // namespace

Analysis analyze(std::string_view source, const ParseOptions& options, bool granule_rows) {
    Analysis a;
    a.tokens = tokenize(source);
    a.resolved = resolve(parse(a.tokens, options));
    a.annotations = annotate(a.resolved);

    const auto& fns = a.resolved.unit.functions;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        FunctionReport f;
        f.name = fns[i].name;
        f.span = fns[i].span;
        f.tree = granulate(a.resolved, static_cast<int>(i));
        if (granule_rows) f.granules = granule_report(f.tree, a.resolved, a.annotations);

        MetricValues& m = f.metrics;
        m.wc = structural_weight(f.tree);
        fill_io(m, classify_io(a.resolved, a.tokens, static_cast<int>(i)));
        const Region body(f.span);
        m.info = info_content(a.resolved, a.annotations, body);
        m.si = scope_information(a.resolved, a.annotations, body);
        m.scim_icn = scim_icn(f.tree, a.resolved, a.annotations);
        m.escim = escim(f.tree, a.resolved, a.annotations);
        m.efficiency_e = efficiency(m.escim, m.loc);

        a.program.wc += m.wc;
        a.program.scim_icn += m.scim_icn;
        a.program.escim += m.escim;
        a.functions.push_back(std::move(f));
    }

    MetricValues& p = a.program;
    fill_io(p, classify_io(a.resolved, a.tokens, -1));
    const Region everything(kEverything);
    p.info = info_content(a.resolved, a.annotations, everything);
    p.si = scope_information(a.resolved, a.annotations, everything);
    p.efficiency_e = efficiency(p.escim, p.loc);

    for (const auto& v : region_extrema(a.resolved, a.annotations, everything)) {
        const Symbol& sym = a.resolved.symbols[v.symbol];
        VariableRow row;
        row.name = v.name;
        row.symbol = v.symbol;
        row.kind = symbol_kind_name(sym.kind);
        if (sym.function >= 0) row.function = fns[static_cast<std::size_t>(sym.function)].name;
        row.icn_max = v.icn_max;
        row.sicn_max = v.sicn_max;
        row.sicn_min = v.sicn_min;
        a.variables.push_back(std::move(row));
    }
    return a;
}

}  // namespace cogscope
