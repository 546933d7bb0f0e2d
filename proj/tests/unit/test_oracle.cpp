#include <doctest.h>

#include <map>

#include "../oracle/replay.hpp"
#include "../support.hpp"
#include "cogscope/generator.hpp"
#include "cogscope/parser.hpp"

using namespace cogscope;

namespace {

// Compares the library against the replay; returns an empty string on a match.
std::string compare(const std::string& src) {
    const Analysis a = analyze(src, ParseOptions{true});
    const oracle::Replay o = oracle::replay(a.resolved.unit);
    std::map<std::pair<std::uint32_t, bool>, const oracle::Mention*> by_key;
    for (const auto& m : o.mentions) by_key[{m.offset, m.write}] = &m;
    if (by_key.size() != o.mentions.size()) return "replay produced clashing mentions";
    if (o.mentions.size() != a.resolved.occurrences.size()) return "occurrence counts differ";
    for (std::size_t i = 0; i < a.resolved.occurrences.size(); ++i) {
        const Occurrence& occ = a.resolved.occurrences[i];
        const auto it = by_key.find({occ.span.offset, !occ.is_read()});
        if (it == by_key.end()) return "no replay mention at offset " + std::to_string(occ.span.offset);
        const oracle::Mention& m = *it->second;
        if (m.decl != a.resolved.symbols[occ.symbol].decl_span.offset)
            return "binding differs at offset " + std::to_string(m.offset);
        if (m.icn != a.annotations.icn[i] || m.sicn != a.annotations.sicn[i])
            return "annotation differs at offset " + std::to_string(m.offset);
    }
    if (o.info != a.program.info) return "I differs";
    if (o.si != a.program.si) return "SI differs";
    if (o.escim != a.program.escim) return "ESCIM differs";
    for (const auto& f : a.functions)
        if (o.function_escim.at(f.name) != f.metrics.escim) return "ESCIM of " + f.name + " differs";
    return {};
}

}  // namespace

TEST_CASE("replay agrees on the fixtures") {
    for (const char* name : {"eg1.ml1", "eg2.ml1", "eg3.ml1", "esciu.ml1", "empty.ml1", "p4_loop.ml1"})
        CHECK_MESSAGE(compare(support::fixture(name)).empty(), name << ": " << compare(support::fixture(name)));
}

TEST_CASE("replay agrees on generated programs") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        GeneratorConfig g;
        g.seed = 7 + i;
        const std::string src = generate(g);
        const std::string diff = compare(src);
        REQUIRE_MESSAGE(diff.empty(), "program " << i << ": " << diff << "\n" << src);
    }
}

TEST_CASE("regions grow toward the root") {
    std::uint64_t violations = 0, pairs = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        GeneratorConfig g;
        g.seed = 7 + i;
        const Analysis a = analyze(generate(g), ParseOptions{true});
        for (const auto& f : a.functions) {
            for (const auto& row : f.granules) {
                for (const GranuleId up : f.tree.ancestors(row.id)) {
                    ++pairs;
                    if (row.si > f.granules[up].si || row.info > f.granules[up].info) ++violations;
                }
            }
        }
    }
    CHECK(pairs > 0);
    CHECK(violations == 0);
}
