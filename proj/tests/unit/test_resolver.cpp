#include <doctest.h>

#include "../support.hpp"
#include "cogscope/generator.hpp"
#include "cogscope/parser.hpp"
#include "cogscope/resolver.hpp"

using namespace cogscope;

namespace {

ResolvedUnit resolved(const std::string& src) { return resolve(parse_source(src)); }

std::vector<SymbolId> symbols_named(const ResolvedUnit& r, const std::string& name) {
    std::vector<SymbolId> out;
    for (const auto& s : r.symbols)
        if (s.name == name) out.push_back(s.id);
    return out;
}

SymbolId bound_at(const ResolvedUnit& r, const std::string& src, const std::string& needle, std::size_t nth = 0) {
    std::size_t pos = 0;
    for (std::size_t i = 0;; ++i) {
        pos = src.find(needle, i == 0 ? 0 : pos + 1);
        REQUIRE(pos != std::string::npos);
        if (i == nth) break;
    }
    const auto b = r.binding_at(static_cast<std::uint32_t>(pos));
    REQUIRE(b.has_value());
    return *b;
}

}  // namespace

TEST_CASE("resolve: canonical shadowing") {
    const std::string src = "void main(){int a; {int a; a=1;} a=2;}";
    const ResolvedUnit r = resolved(src);
    const auto as = symbols_named(r, "a");
    REQUIRE(as.size() == 2);
    CHECK(bound_at(r, src, "a=1") == as[1]);
    CHECK(bound_at(r, src, "a=2") == as[0]);
}

TEST_CASE("resolve: eg2 fixture global qualifier") {
    const std::string src = support::fixture("eg2.ml1");
    const ResolvedUnit r = resolved(src);
    const auto amounts = symbols_named(r, "amount");
    REQUIRE(amounts.size() == 3);
    CHECK(r.symbols[amounts[0]].kind == SymbolKind::Global);
    for (std::size_t n = 0; n < 2; ++n) CHECK(bound_at(r, src, "::amount", n) == amounts[0]);
    CHECK(bound_at(r, src, "amount--") == amounts[2]);
    CHECK(bound_at(r, src, "amount);", 2) == amounts[2]);
    CHECK(bound_at(r, src, "amount = amount + 1") == amounts[1]);
    CHECK(bound_at(r, src, "amount = amount * 2") == amounts[0]);
}

TEST_CASE("resolve: eg3 fixture loop-local s") {
    const std::string src = support::fixture("eg3.ml1");
    const ResolvedUnit r = resolved(src);
    const auto ss = symbols_named(r, "s");
    REQUIRE(ss.size() == 3);  // global, main's local, the second loop's header
    const SymbolId loop_s = ss[2];
    CHECK(r.symbols[ss[1]].kind == SymbolKind::Local);
    CHECK(r.symbols[loop_s].kind == SymbolKind::Local);
    CHECK(bound_at(r, src, "s <= right") == loop_s);
    CHECK(bound_at(r, src, "s++") == loop_s);
    CHECK(bound_at(r, src, "s = s - 1") == loop_s);
    CHECK(bound_at(r, src, "s = s + key") == ss[1]);
    CHECK(bound_at(r, src, "::s") == ss[0]);
}

TEST_CASE("resolve: errors") {
    CHECK_THROWS_AS((void)resolved("void main(){ a = 1; }"), Error);
    CHECK_THROWS_AS((void)resolved("void main(){ int a; ::a = 1; }"), Error);
    CHECK_THROWS_AS((void)resolved("void main(){ g(); }"), Error);
    try {
        (void)resolved("void main() {\n  x = 1;\n}");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.diagnostic().kind == DiagnosticKind::Resolve);
        CHECK(e.diagnostic().span.line == 2);
    }
}

TEST_CASE("resolve: initializer sees the outer name") {
    const std::string src = "void main(){int a = 1; {int a = a + 1; print(a);}}";
    const ResolvedUnit r = resolved(src);
    const auto as = symbols_named(r, "a");
    REQUIRE(as.size() == 2);
    CHECK(bound_at(r, src, "a + 1") == as[0]);
    CHECK(bound_at(r, src, "a);") == as[1]);
}

TEST_CASE("resolve: occurrence kinds") {
    const ResolvedUnit r = resolved("void main(){int a; int b = 2; a = b; a += 1; a++;}");
    std::vector<OccurrenceKind> kinds;
    for (const auto& o : r.occurrences) kinds.push_back(o.kind);
    const std::vector<OccurrenceKind> want = {
        OccurrenceKind::Declare, OccurrenceKind::DeclareInit, OccurrenceKind::Read, OccurrenceKind::Write,
        OccurrenceKind::Read,    OccurrenceKind::Write,       OccurrenceKind::Read, OccurrenceKind::Write};
    CHECK(kinds == want);
}

TEST_CASE("operator_count") {
    const auto stmt = [](const std::string& s) {
        return operator_count(parse_source("int a; int b; int s; int key[3]; int i; void main(){" + s + "}")
                                  .functions[0]
                                  .body.stmts[0]);
    };
    CHECK(stmt("a = b;") == 0);
    CHECK(stmt("s = s + key[i];") == 1);
    CHECK(stmt("s++;") == 1);
    CHECK(stmt("a += b * 2;") == 2);
    CHECK(stmt("a = -b + !a;") == 3);
}

TEST_CASE("call graph and recursion") {
    const ResolvedUnit r = resolved(
        "int f(int n) { return g(n); } int g(int n) { return f(n); } int h() { return 1; }"
        " void main() { int x = f(1) + h(); }");
    const int f = r.function_index("f"), g = r.function_index("g"), h = r.function_index("h");
    const int m = r.function_index("main");
    CHECK(r.is_recursive_call(f, g));
    CHECK(r.is_recursive_call(g, f));
    CHECK_FALSE(r.is_recursive_call(m, f));
    CHECK_FALSE(r.is_recursive_call(m, h));
    CHECK(std::find(r.call_edges.begin(), r.call_edges.end(), std::make_pair(m, h)) != r.call_edges.end());
}

TEST_CASE("classify_io") {
    const auto io_of = [](const std::string& src) {
        const auto tokens = tokenize(src);
        return classify_io(resolve(parse(tokens)), tokens);
    };
    const auto eg1 = io_of(support::fixture("eg1.ml1"));
    CHECK(eg1.inputs.size() == 1);
    CHECK(eg1.outputs.size() == 1);
    CHECK(eg1.io_variables() == 2);
    // userInput: write, two reads; square: write, read in print
    CHECK(eg1.io_occurrences == 5);

    const auto none = io_of("void main(){ int a = 1; a = a + 2; }");
    CHECK(none.io_variables() == 0);
    CHECK(none.io_occurrences == 0);

    const auto io = io_of("void main(){ int a; a = read(); print(a); }");
    CHECK(io.io_occurrences == 2);
}

TEST_CASE("resolve: 10000 generated programs") {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        GeneratorConfig g;
        g.seed = seed;
        const std::string text = generate(g);
        REQUIRE_NOTHROW_MESSAGE((void)resolve(parse_source(text)), "seed " << seed << "\n" << text);
    }
}
