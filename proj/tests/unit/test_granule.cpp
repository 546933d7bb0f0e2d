#include <doctest.h>

#include <algorithm>
#include <iterator>

#include "../support.hpp"
#include "cogscope/generator.hpp"
#include "cogscope/granule.hpp"
#include "cogscope/parser.hpp"

using namespace cogscope;

namespace {

GranuleTree tree_of(const std::string& src, const std::string& fn = "main") {
    static ResolvedUnit keep;
    keep = resolve(parse_source(src));
    return granulate(keep, fn);
}

std::vector<BcsKind> kinds(const GranuleTree& t, const std::vector<GranuleId>& ids) {
    std::vector<BcsKind> out;
    for (const auto id : ids) out.push_back(t.at(id).kind);
    return out;
}

}  // namespace

TEST_CASE("weights") {
    CHECK(weight_of(BcsKind::Seq) == 1);
    CHECK(weight_of(BcsKind::Ite) == 2);
    CHECK(weight_of(BcsKind::Case) == 3);
    CHECK(weight_of(BcsKind::For) == 3);
    CHECK(weight_of(BcsKind::Repeat) == 3);
    CHECK(weight_of(BcsKind::While) == 3);
    CHECK(weight_of(BcsKind::Call) == 2);
    CHECK(weight_of(BcsKind::Recursion) == 3);
    CHECK(weight_of(BcsKind::Parallel) == 4);
    CHECK(weight_of(BcsKind::Interrupt) == 4);
    CHECK(std::size(kAllBcsKinds) == 10);
}

TEST_CASE("straight-line body is one SEQ leaf") {
    const auto t = tree_of(support::in_main("int a = 1; int b = 2; a = a + b; print(a);"));
    REQUIRE(t.top_level.size() == 1);
    CHECK(t.at(t.top_level[0]).kind == BcsKind::Seq);
    CHECK(t.at(t.top_level[0]).is_leaf());
    CHECK(structural_weight(t) == 1);
}

TEST_CASE("one nesting layer") {
    const auto t = tree_of(support::in_main("int c; int x; int y; int b; while(c){ x=1; if(b){y=2;} x=2; }"));
    REQUIRE(t.top_level.size() == 2);
    const Granule& w = t.at(t.top_level[1]);
    CHECK(w.kind == BcsKind::While);
    CHECK(kinds(t, w.children) == std::vector<BcsKind>{BcsKind::Seq, BcsKind::Ite, BcsKind::Seq});
    CHECK(t.at(w.children[1]).is_leaf());
    CHECK(w.header.size() == 1);
}

TEST_CASE("structural weight") {
    CHECK(structural_weight(tree_of("int c; int b; void main() { while(c){ if(b){ c = 0; } } }")) == 6);
    CHECK(structural_weight(tree_of(support::in_main("int c; for(;c;){ c = 0; } while(c){ c = 1; }"))) == 1 + 6);
    const auto loops = tree_of("int c; void main() { for(;c;){ c = 0; } while(c){ c = 1; } }");
    CHECK(structural_weight(loops) == 6);
    CHECK(structural_weight(tree_of(support::in_main("int a = 1;"))) == 1);
    CHECK(structural_weight(tree_of("void main() {}")) == 0);
}

TEST_CASE("eg3 fixture decomposition") {
    const auto t = tree_of(support::fixture("eg3.ml1"));
    CHECK(kinds(t, t.top_level) ==
          std::vector<BcsKind>{BcsKind::Seq, BcsKind::For, BcsKind::While, BcsKind::For, BcsKind::Seq});
    CHECK(t.at(t.top_level[1]).is_leaf());
    CHECK(t.at(t.top_level[3]).is_leaf());
    const Granule& outer = t.at(t.top_level[2]);
    CHECK(kinds(t, outer.children) ==
          std::vector<BcsKind>{BcsKind::Seq, BcsKind::While, BcsKind::Seq, BcsKind::For, BcsKind::Seq});
    const Granule& inner_while = t.at(outer.children[1]);
    const Granule& inner_for = t.at(outer.children[3]);
    CHECK(kinds(t, inner_while.children) == std::vector<BcsKind>{BcsKind::Ite, BcsKind::Seq});
    CHECK(kinds(t, inner_for.children) == std::vector<BcsKind>{BcsKind::Ite, BcsKind::Seq});
    CHECK(inner_for.header.size() == 3);
    CHECK(t.max_depth == 3);
}

TEST_CASE("calls and recursion become granules") {
    const char* src = "int f(int n) { int r = 0; if (n > 0) { r = f(n - 1); } return r; }"
                      " int g() { return 1; }"
                      " void main() { int a = 1; a = g(); int b = f(a); print(a); }";
    const auto m = tree_of(src);
    CHECK(kinds(m, m.top_level) == std::vector<BcsKind>{BcsKind::Seq, BcsKind::Call, BcsKind::Call, BcsKind::Seq});
    const auto f = tree_of(src, "f");
    const Granule& ite = f.at(f.top_level[1]);
    REQUIRE(ite.kind == BcsKind::Ite);
    REQUIRE(ite.children.size() == 1);
    CHECK(f.at(ite.children[0]).kind == BcsKind::Recursion);
    CHECK_THROWS_AS((void)tree_of(src, "nope"), std::out_of_range);
}

TEST_CASE("every control form") {
    const auto t = tree_of(support::in_main(
        "int a = 0; switch (a) { case 1: { a = 2; } default: { a = 3; } } do { a = a + 1; } while (a < 3);"
        " parallel { a = 1; } interrupt { a = 2; } { a = 5; }"));
    CHECK(kinds(t, t.top_level) == std::vector<BcsKind>{BcsKind::Seq, BcsKind::Case, BcsKind::Repeat,
                                                        BcsKind::Parallel, BcsKind::Interrupt, BcsKind::Seq});
    CHECK(structural_weight(t) == 1 + 3 + 3 + 4 + 4 + 1);
}

TEST_CASE("granules partition the statements") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        GeneratorConfig g;
        g.seed = seed;
        const ResolvedUnit r = resolve(parse_source(generate(g), ParseOptions{true}));
        for (std::size_t fi = 0; fi < r.unit.functions.size(); ++fi) {
            const GranuleTree t = granulate(r, static_cast<int>(fi));
            std::vector<Span> owned;
            for (const auto& gr : t.granules) {
                owned.insert(owned.end(), gr.owned.begin(), gr.owned.end());
                for (const auto c : gr.children) {
                    CHECK(gr.region.contains(t.at(c).region));
                    CHECK(t.at(c).depth == gr.depth + 1);
                }
            }
            CHECK_MESSAGE(owned.size() == statement_count(r.unit.functions[fi]), "seed " << seed);
            std::sort(owned.begin(), owned.end(), [](const Span& a, const Span& b) {
                return a.offset != b.offset ? a.offset < b.offset : a.length < b.length;
            });
            CHECK(std::adjacent_find(owned.begin(), owned.end()) == owned.end());
        }
    }
}
