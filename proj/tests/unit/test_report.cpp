#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "../support.hpp"
#include "cogscope/report.hpp"

using namespace cogscope;
using nlohmann::json;

TEST_CASE("report JSON for the eg1 fixture") {
    const Analysis a = analyze(support::fixture("eg1.ml1"));
    const json doc = json::parse(report_json(a, "eg1.ml1"));
    CHECK(doc["metrics"]["I(L)"] == 3);
    CHECK(doc["metrics"]["cfs"] == 2);
    CHECK(doc["tool"] == "cogscope");
    CHECK(doc["input_file"] == "eg1.ml1");
    CHECK(doc["functions"].size() == 1);
    CHECK_FALSE(doc["functions"][0].contains("granules"));
    CHECK(doc["variables"].size() == 2);
    CHECK(doc["diagnostics"].empty());
}

TEST_CASE("report JSON is byte-stable") {
    for (const char* name : {"eg1.ml1", "eg2.ml1", "eg3.ml1", "empty.ml1"}) {
        const std::string src = support::fixture(name);
        ReportOptions o;
        o.granules = true;
        CHECK(report_json(analyze(src), name, o) == report_json(analyze(src), name, o));
    }
}

TEST_CASE("granule rows in the report") {
    ReportOptions o;
    o.granules = true;
    const json doc = json::parse(report_json(analyze(support::fixture("eg3.ml1")), "eg3.ml1", o));
    bool found = false;
    for (const auto& g : doc["functions"][0]["granules"]) {
        if (g["kind"] != "FOR" || g["depth"] != 2) continue;
        for (const auto& v : g["variables"])
            if (v["name"] == "s" && v["sicn_max"] == 5) found = true;
    }
    CHECK(found);
}

TEST_CASE("metric filter") {
    const Analysis a = analyze(support::fixture("eg1.ml1"));
    ReportOptions o;
    o.metric = "cpcm";
    const json doc = json::parse(report_json(a, "x", o));
    CHECK(doc["metrics"].contains("cpcm"));
    CHECK(doc["metrics"].contains("s_io"));
    CHECK_FALSE(doc["metrics"].contains("escim"));
    CHECK_THROWS_AS((void)report_keys("halstead"), std::invalid_argument);
    for (const auto& f : report_filters()) CHECK_FALSE(report_keys(f).empty());
}

TEST_CASE("six decimal rounding") {
    const Analysis a = analyze(support::fixture("p4_loop.ml1"));
    const json doc = json::parse(report_json(a, "x"));
    const double w = doc["metrics"]["wics"];
    CHECK(w == doctest::Approx(a.program.wics).epsilon(1e-6));
    CHECK(std::abs(w * 1e6 - std::round(w * 1e6)) < 1e-6);
    CHECK(format_metric("wics", a.program).find('.') == format_metric("wics", a.program).size() - 7);
    CHECK(format_metric("escim", a.program) == std::to_string(a.program.escim));
}

TEST_CASE("text report") {
    ReportOptions o;
    o.granules = true;
    const std::string text = report_text(analyze(support::fixture("eg3.ml1")), "eg3.ml1", o);
    CHECK(text.find("function main") != std::string::npos);
    CHECK(text.find("granules") != std::string::npos);
    CHECK(text.find("variables") != std::string::npos);
}

TEST_CASE("corpus") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cogscope_corpus_test";
    fs::remove_all(dir);
    fs::create_directories(dir / "sub");
    CHECK(analyze_corpus(dir).empty());
    std::ofstream(dir / "b.ml1") << support::fixture("p4_loop.ml1");
    std::ofstream(dir / "sub" / "a.ml1") << support::fixture("p4_formula.ml1");
    std::ofstream(dir / "bad.ml1") << "void main() { x = 1; }";
    std::ofstream(dir / "note.txt") << "ignored";
    const auto rows = analyze_corpus(dir);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].path == "b.ml1");
    CHECK(rows[1].path == "bad.ml1");
    CHECK_FALSE(rows[1].ok);
    CHECK(rows[1].error.find("bad.ml1:1:") == 0);
    CHECK(rows[2].path == "sub/a.ml1");
    CHECK(rows[0].values.escim != rows[2].values.escim);
    const std::string csv = corpus_csv(rows);
    CHECK(csv.rfind("path,loc,wc,cfs,cicm,mccm,cpcm,scim_icn,escim,efficiency_e\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    const std::string text = corpus_text(rows);
    CHECK(text.find("ranking by E") != std::string::npos);
    CHECK(text.find("failed") != std::string::npos);
    fs::remove_all(dir);
}
