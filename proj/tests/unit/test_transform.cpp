#include <doctest.h>

#include "../support.hpp"
#include "cogscope/generator.hpp"
#include "cogscope/parser.hpp"
#include "cogscope/render.hpp"
#include "cogscope/transform.hpp"

using namespace cogscope;

namespace {

std::string canon(const std::string& src) { return render(parse_source(src, ParseOptions{true})); }

}  // namespace

TEST_CASE("generator: determinism and bounds") {
    GeneratorConfig g;
    g.seed = 42;
    CHECK(generate(g) == generate(g));
    g.seed = 43;
    CHECK(generate(g) != generate(GeneratorConfig{.seed = 42}));
    GeneratorConfig empty;
    empty.max_statements = 0;
    const SourceUnit u = generate_unit(empty);
    REQUIRE(u.functions.size() == 1);
    CHECK(u.functions[0].name == "main");
    CHECK(u.functions[0].body.stmts.empty());
}

TEST_CASE("generator: every statement form shows up") {
    bool seen_if = false, seen_switch = false, seen_for = false, seen_while = false, seen_do = false,
         seen_par = false, seen_int = false, seen_call = false;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::string t = generate(GeneratorConfig{.seed = seed});
        seen_if |= t.find("if (") != std::string::npos;
        seen_switch |= t.find("switch (") != std::string::npos;
        seen_for |= t.find("for (") != std::string::npos;
        seen_while |= t.find("while (") != std::string::npos;
        seen_do |= t.find("do {") != std::string::npos;
        seen_par |= t.find("parallel {") != std::string::npos;
        seen_int |= t.find("interrupt {") != std::string::npos;
        seen_call |= t.find(" = f0(") != std::string::npos || t.find(" = f1(") != std::string::npos;
    }
    CHECK(seen_if);
    CHECK(seen_switch);
    CHECK(seen_for);
    CHECK(seen_while);
    CHECK(seen_do);
    CHECK(seen_par);
    CHECK(seen_int);
    CHECK(seen_call);
}

TEST_CASE("concat: identity with the empty program") {
    const std::string p = canon(support::fixture("eg3.ml1"));
    CHECK(concat_source(p, "void main() {}") == p);
}

TEST_CASE("concat: re-declaration rule") {
    const std::string pq = concat_source("void main(){int a;a=1;}", "void main(){int a;a=2;}");
    CHECK(pq == canon("void main(){int a; a=1; a=2;}"));
    const std::string init = concat_source("void main(){int a = 1;}", "void main(){int a = 2; print(a);}");
    CHECK(init == canon("void main(){int a = 1; a = 2; print(a);}"));
}

TEST_CASE("concat: helpers and globals") {
    const std::string p = "int g = 1; int f() { return g; } void main() { int x = f(); }";
    const std::string q = "int g = 5; int f() { return 2; } void main() { int y = f() + g; }";
    const std::string pq = concat_source(p, q);
    const SourceUnit u = parse_source(pq);
    CHECK(u.globals.size() == 1);
    CHECK(u.functions.size() == 3);
    CHECK(pq.find("::g = 5;") != std::string::npos);
    CHECK_NOTHROW((void)resolve(parse_source(pq)));
}

TEST_CASE("concat: Q's globals stay global under P's locals") {
    const std::string p = "void main() { int g = 7; print(g); }";
    const std::string q = "int g = 1; void main() { g = g + 1; print(g); }";
    const std::string pq = concat_source(p, q);
    const ResolvedUnit r = resolve(parse_source(pq));
    // the last print names the global
    const auto pos = pq.rfind("print(");
    const auto b = r.binding_at(static_cast<std::uint32_t>(pos + 6));
    REQUIRE(b.has_value());
    CHECK(r.symbols[*b].kind == SymbolKind::Global);
}

TEST_CASE("concat: generated pairs resolve") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::string p = generate(GeneratorConfig{.seed = 2 * seed});
        const std::string q = generate(GeneratorConfig{.seed = 2 * seed + 1});
        REQUIRE_NOTHROW_MESSAGE((void)resolve(parse_source(concat_source(p, q), ParseOptions{true})),
                                "seed " << seed);
    }
}

TEST_CASE("rename") {
    const SourceUnit u = parse_source(support::fixture("eg1.ml1"));
    CHECK(rename(u, {}) == u);
    const SourceUnit r = rename(u, {{"userInput", "x"}, {"square", "y"}});
    const std::string text = render(r);
    CHECK(text.find("userInput") == std::string::npos);
    CHECK(text.find("y = x * x;") != std::string::npos);
    const Analysis a = analyze(support::fixture("eg1.ml1"));
    const Analysis b = analyze(text);
    CHECK(a.program.escim == b.program.escim);
    CHECK(a.program.info == b.program.info);
    CHECK(a.program.cpcm == b.program.cpcm);
    CHECK(a.program.mccm == b.program.mccm);
    CHECK(a.program.cicm == b.program.cicm);
    CHECK_THROWS_AS((void)rename(u, {{"userInput", "x"}, {"square", "x"}}), std::invalid_argument);
    CHECK_THROWS_AS((void)rename(u, {{"userInput", "while"}}), std::invalid_argument);
    CHECK_THROWS_AS((void)rename(u, {{"userInput", "read"}}), std::invalid_argument);
    CHECK_THROWS_AS((void)rename(u, {{"main", "m"}}), std::invalid_argument);
    CHECK_THROWS_AS((void)rename(u, {{"userInput", "square"}}), std::invalid_argument);
}

TEST_CASE("random renaming is a bijection") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const SourceUnit u = generate_unit(GeneratorConfig{.seed = seed});
        const auto m = random_renaming(u, rng);
        CHECK(m.size() == program_names(u).size());
        std::set<std::string> targets;
        for (const auto& [from, to] : m) targets.insert(to);
        CHECK(targets.size() == m.size());
        CHECK_NOTHROW((void)resolve(parse_source(render(rename(u, m)))));
    }
}

TEST_CASE("permute") {
    const SourceUnit one = parse_source("void main() { int a = 1; }");
    CHECK(permute(one, 3) == one);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const SourceUnit u = generate_unit(GeneratorConfig{.seed = seed});
        const SourceUnit p = permute(u, seed * 7 + 1);
        CHECK(p.functions.back().body.stmts.size() == u.functions.back().body.stmts.size());
        REQUIRE_NOTHROW_MESSAGE((void)resolve(parse_source(render(p), ParseOptions{true})), "seed " << seed);
        CHECK(permute(u, seed * 7 + 1) == p);
    }
}

TEST_CASE("permute keeps SI of the whole body") {
    const Analysis a = analyze(support::in_main("int a = 0; a = 1; a = a + 1;"));
    const Analysis b = analyze(support::in_main("int a = 0; a = a + 1; a = 1;"));
    CHECK(a.program.si == b.program.si);
}
