#include "cogscope/weyuker.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "cogscope/parser.hpp"
#include "cogscope/render.hpp"
#include "cogscope/transform.hpp"

namespace cogscope {

const char* property_status_name(PropertyStatus status) {
    switch (status) {
        case PropertyStatus::Satisfied: return "satisfied";
        case PropertyStatus::Violated: return "violated";
        case PropertyStatus::Vacuous: return "vacuous";
    }
    return "?";
}

const std::vector<std::string>& property_ids() {
    static const std::vector<std::string> ids = {"1", "2", "3", "4", "5", "6a", "6b", "7", "8", "9"};
    return ids;
}

const std::vector<std::string>& metric_ids() {
    static const std::vector<std::string> ids = {"loc", "cfs", "cicm", "mccm", "cpcm", "scim", "escim"};
    return ids;
}

std::string canonical_metric(std::string_view metric) {
    if (metric == "scim_icn") return "scim";
    for (const auto& id : metric_ids())
        if (id == metric) return id;
    throw std::invalid_argument("unknown metric '" + std::string(metric) + "'");
}

double metric_value(const MetricValues& v, std::string_view metric) {
    const std::string m = canonical_metric(metric);
    if (m == "loc") return v.loc;
    if (m == "cfs") return static_cast<double>(v.cfs);
    if (m == "cicm") return v.cicm;
    if (m == "mccm") return static_cast<double>(v.mccm);
    if (m == "cpcm") return static_cast<double>(v.cpcm);
    if (m == "scim") return static_cast<double>(v.scim_icn);
    return static_cast<double>(v.escim);
}

std::optional<std::map<std::string, bool>> expected_row(std::string_view metric) {
    const std::string m = canonical_metric(metric);
    std::map<std::string, bool> row;
    for (const char* r : {"1", "2", "3", "4", "5", "6", "7", "8", "9"}) row[r] = true;
    if (m == "loc") {
        row["6"] = row["7"] = row["9"] = false;
    } else if (m == "cfs") {
        row["6"] = false;
    } else if (m == "mccm" || m == "cpcm") {
        row["6"] = row["7"] = false;
    } else if (m == "cicm") {
        return std::nullopt;
    }
    return row;
}

namespace {

constexpr const char* kEsciu = "void main() {\n    int a;\n    a = 1;\n}\n";
constexpr const char* kEmpty = "void main() {\n}\n";
constexpr const char* kSumLoop =
    "void main() {\n    int n = read();\n    int sum = 0;\n    int i = 1;\n    while (i <= n) {\n"
    "        sum = sum + i;\n        i = i + 1;\n    }\n    print(sum);\n}\n";
constexpr const char* kSumFormula =
    "void main() {\n    int n = read();\n    int sum = n * (n + 1) / 2;\n    print(sum);\n}\n";
constexpr const char* kAssignsX = "void main() {\n    int x = 0;\n    x = 1;\n}\n";
constexpr const char* kAssignsY = "void main() {\n    int y = 0;\n    y = 1;\n}\n";
constexpr const char* kUsesX = "void main() {\n    int x = 0;\n    x = x + 1;\n}\n";
constexpr const char* kAssignsXAgain = "void main() {\n    int x = 0;\n    x = 2;\n}\n";
constexpr const char* kMixed =
    "void main() {\n    int x = 0;\n    int y = 0;\n    x = x + 1;\n    while (x < 9) {\n"
    "        x = x + y;\n    }\n    y = y + 2;\n    y = 1;\n}\n";

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
    return splitmix(splitmix(seed ^ splitmix(stream)) + trial);
}

std::string canonical(std::string_view source) { return render(parse_source(source, ParseOptions{true})); }

std::string format_value(double v) {
    std::ostringstream out;
    if (v == static_cast<double>(static_cast<std::int64_t>(v))) {
        out << static_cast<std::int64_t>(v);
    } else {
        out << std::fixed << std::setprecision(6) << v;
    }
    return out.str();
}

}  // namespace

struct Harness::Impl {
    std::unordered_map<std::string, MetricValues> cache;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::string> programs;
    std::map<std::pair<std::string, std::string>, std::string> derived;  // (operation, input) -> output
};

Harness::Harness(HarnessConfig config) : config_(std::move(config)), impl_(std::make_unique<Impl>()) {}
Harness::~Harness() = default;

double Harness::measure(std::string_view metric, const std::string& source) {
    auto it = impl_->cache.find(source);
    if (it == impl_->cache.end()) {
        it = impl_->cache.emplace(source, analyze(source, ParseOptions{true}, false).program).first;
    }
    return metric_value(it->second, metric);
}

std::string Harness::program(std::uint64_t stream, std::uint64_t trial) {
    auto [it, fresh] = impl_->programs.try_emplace({stream, trial});
    if (fresh) {
        GeneratorConfig g = config_.generator;
        g.seed = derive(config_.seed, stream, trial);
        it->second = generate(g);
    }
    return it->second;
}

PropertyResult Harness::check(std::string_view property, std::string_view metric_name) {
    const std::string metric = canonical_metric(metric_name);
    if (std::find(property_ids().begin(), property_ids().end(), property) == property_ids().end()) {
        throw std::invalid_argument("unknown property '" + std::string(property) + "'");
    }
    PropertyResult r;
    r.property = std::string(property);
    r.metric = metric;
    const std::uint64_t budget = std::max<std::uint64_t>(config_.trials, 1);
    const auto f = [&](const std::string& src) { return measure(metric, src); };
    const auto memo = [&](std::string key, const std::function<std::string()>& make) {
        auto [it, fresh] = impl_->derived.try_emplace({std::move(key), std::string()});
        if (fresh) it->second = make();
        return it->second;
    };
    const auto cat = [&](const std::string& a, const std::string& b) {
        return memo("concat\n" + std::to_string(a.size()) + "\n" + a + b, [&] { return concat_source(a, b); });
    };
    const auto found = [&](Witness w) {
        r.status = PropertyStatus::Satisfied;
        r.witness = std::move(w);
    };
    // Search pool shared by the existential properties.
    const auto pool = [&](std::uint64_t i) -> std::string {
        static constexpr const char* fixtures[] = {kEsciu, kEmpty, kSumLoop, kSumFormula,
                                                   kAssignsX, kAssignsY, kUsesX, kMixed};
        if (i < std::size(fixtures)) return canonical(fixtures[i]);
        return program(1, i - std::size(fixtures));
    };

    r.status = PropertyStatus::Violated;
    if (property == "1") {
        const std::string first = pool(0);
        const double v0 = f(first);
        for (std::uint64_t i = 1; i <= budget; ++i) {
            ++r.trials;
            const std::string q = pool(i);
            if (f(q) != v0) {
                found({{{"P", first}, {"Q", q}}, {{"|P|", v0}, {"|Q|", f(q)}}});
                break;
            }
        }
        if (!r.witness) r.note = "every program in the search budget scored the same";
    } else if (property == "2") {
        for (std::uint64_t i = 0; i < budget; ++i) {
            ++r.trials;
            const std::string p = program(2, i);
            if (f(p) < 0) {
                if (r.counterexamples++ == 0) r.witness = Witness{{{"P", p}}, {{"|P|", f(p)}}};
            }
        }
        r.status = r.counterexamples == 0 ? PropertyStatus::Satisfied : PropertyStatus::Violated;
        r.note = "nonnegativity checked; finiteness per value is not machine-checkable";
    } else if (property == "3") {
        const std::string p = canonical(kUsesX);
        std::string q = p;
        q[q.find('+')] = '-';
        ++r.trials;
        if (f(p) == f(q)) {
            found({{{"P", p}, {"Q", q}}, {{"|P|", f(p)}, {"|Q|", f(q)}}});
            r.note = "'+' replaced by '-'";
        } else {
            std::map<double, std::string> seen;
            for (std::uint64_t i = 0; i < budget && !r.witness; ++i) {
                ++r.trials;
                const std::string s = pool(i);
                const auto [it, fresh] = seen.emplace(f(s), s);
                if (!fresh && it->second != s) found({{{"P", it->second}, {"Q", s}}, {{"|P|", f(s)}, {"|Q|", f(s)}}});
            }
        }
    } else if (property == "4") {
        const std::string p = canonical(kSumLoop);
        const std::string q = canonical(kSumFormula);
        r.trials = 1;
        r.note = "audited pair: loop summation of 1..n and n*(n+1)/2";
        if (f(p) != f(q)) {
            found({{{"P", p}, {"Q", q}}, {{"|P|", f(p)}, {"|Q|", f(q)}}});
        } else {
            r.witness = Witness{{{"P", p}, {"Q", q}}, {{"|P|", f(p)}, {"|Q|", f(q)}}};
        }
    } else if (property == "5") {
        const auto check_pair = [&](const std::string& p, const std::string& q) {
            ++r.trials;
            const std::string pq = cat(p, q);
            const double vp = f(p), vq = f(q), vpq = f(pq);
            if (vpq < vp || vpq < vq) {
                if (r.counterexamples++ == 0)
                    r.witness = Witness{{{"P", p}, {"Q", q}, {"P;Q", pq}}, {{"|P|", vp}, {"|Q|", vq}, {"|P;Q|", vpq}}};
            }
        };
        check_pair(canonical(kAssignsX), canonical(kUsesX));
        check_pair(canonical(kSumLoop), canonical(kEmpty));
        for (std::uint64_t i = 0; i + 2 < budget; ++i) check_pair(program(5, 2 * i), program(5, 2 * i + 1));
        r.status = r.counterexamples == 0 ? PropertyStatus::Satisfied : PropertyStatus::Violated;
    } else if (property == "6a" || property == "6b") {
        const bool before = property == "6a";
        const auto compose = [&](const std::string& x, const std::string& rr) { return before ? cat(x, rr) : cat(rr, x); };
        const std::string lp = before ? "P;R" : "R;P";
        const std::string lq = before ? "Q;R" : "R;Q";
        const auto attempt = [&](const std::string& p, const std::string& q, const std::string& rr) {
            ++r.trials;
            const std::string pr = compose(p, rr), qr = compose(q, rr);
            if (f(pr) != f(qr)) {
                found({{{"P", p}, {"Q", q}, {"R", rr}, {lp, pr}, {lq, qr}},
                       {{"|P|", f(p)}, {"|Q|", f(q)}, {"|" + lp + "|", f(pr)}, {"|" + lq + "|", f(qr)}}});
            }
        };
        const std::string fx = canonical(kAssignsX), fy = canonical(kAssignsY), fr = canonical(kUsesX);
        if (f(fx) == f(fy)) attempt(fx, fy, fr);

        const std::uint64_t pool_size = std::min<std::uint64_t>(budget, 200);
        std::map<double, std::vector<std::string>> buckets;
        for (std::uint64_t i = 0; i < pool_size; ++i) {
            const std::string s = pool(i);
            auto& b = buckets[f(s)];
            if (std::find(b.begin(), b.end(), s) == b.end()) b.push_back(s);
        }
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [value, texts] : buckets)
            for (std::size_t a = 0; a < texts.size(); ++a)
                for (std::size_t b = a + 1; b < texts.size() && pairs.size() < 400; ++b)
                    pairs.emplace_back(texts[a], texts[b]);
        const std::uint64_t r_count = std::min<std::uint64_t>(pool_size, 25);
        for (std::uint64_t k = 0; k < r_count && !r.witness && r.trials < budget; ++k) {
            const std::string rr = pool(k);
            for (const auto& [p, q] : pairs) {
                if (r.witness || r.trials >= budget) break;
                attempt(p, q, rr);
            }
        }
        if (!r.witness) r.note = pairs.empty() ? "no equal-valued pair in the search pool"
                                               : "no distinguishing extension within the search budget";
    } else if (property == "7") {
        const auto attempt = [&](const std::string& p, std::uint64_t seed) {
            ++r.trials;
            const std::string q = memo("permute " + std::to_string(seed) + "\n" + p,
                                       [&] { return render(permute(parse_source(p, ParseOptions{true}), seed)); });
            if (q != p && f(p) != f(q)) found({{{"P", p}, {"Q", q}}, {{"|P|", f(p)}, {"|Q|", f(q)}}});
        };
        const std::string fixture = canonical(kMixed);
        for (std::uint64_t s = 0; s < 32 && !r.witness && r.trials < budget; ++s) attempt(fixture, derive(config_.seed, 70, s));
        for (std::uint64_t i = 0; !r.witness && r.trials < budget; ++i) attempt(program(7, i), derive(config_.seed, 71, i));
        if (!r.witness) r.note = "every permutation tried kept the value";
    } else if (property == "8") {
        for (std::uint64_t i = 0; i < budget; ++i) {
            ++r.trials;
            const std::string p = program(8, i);
            const std::string q = memo("rename " + std::to_string(i) + "\n" + p, [&] {
                const SourceUnit unit = parse_source(p, ParseOptions{true});
                std::mt19937_64 rng(derive(config_.seed, 80, i));
                return render(rename(unit, random_renaming(unit, rng)));
            });
            if (f(p) != f(q)) {
                if (r.counterexamples++ == 0) r.witness = Witness{{{"P", p}, {"Q", q}}, {{"|P|", f(p)}, {"|Q|", f(q)}}};
            }
        }
        r.status = r.counterexamples == 0 ? PropertyStatus::Satisfied : PropertyStatus::Violated;
    } else if (property == "9") {
        const auto attempt = [&](const std::string& p, const std::string& q) {
            ++r.trials;
            const std::string pq = cat(p, q);
            if (f(p) + f(q) < f(pq))
                found({{{"P", p}, {"Q", q}, {"P;Q", pq}}, {{"|P|", f(p)}, {"|Q|", f(q)}, {"|P;Q|", f(pq)}}});
        };
        attempt(canonical(kAssignsX), canonical(kAssignsXAgain));
        for (std::uint64_t i = 0; !r.witness && r.trials < budget; ++i) attempt(program(9, 2 * i), program(9, 2 * i + 1));
        r.note = "strict inequality |P| + |Q| < |P;Q|";
    }
    return r;
}

PropertyResult check_property(std::string_view property, std::string_view metric, std::uint64_t trials,
                              std::uint64_t seed) {
    HarnessConfig config;
    config.seed = seed;
    config.trials = trials;
    Harness h(config);
    return h.check(property, metric);
}

bool ConformanceTable::row_satisfied(std::size_t metric, std::string_view row) const {
    const auto status_of = [&](std::string_view id) {
        const auto& ids = property_ids();
        const auto index = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
        return results[metric][index].status == PropertyStatus::Satisfied;
    };
    if (row == "6") return status_of("6a") && status_of("6b");
    return status_of(row);
}

std::optional<bool> ConformanceTable::matches_expectation(std::size_t metric) const {
    const auto expected = expected_row(metrics[metric]);
    if (!expected) return std::nullopt;
    for (const auto& [row, want] : *expected)
        if (row_satisfied(metric, row) != want) return false;
    return true;
}

bool ConformanceTable::all_match() const {
    for (std::size_t m = 0; m < metrics.size(); ++m)
        if (matches_expectation(m) == false) return false;
    return true;
}

ConformanceTable run_table(const std::vector<std::string>& metrics, const HarnessConfig& config) {
    ConformanceTable table;
    table.seed = config.seed;
    table.trials = config.trials;
    Harness harness(config);
    for (const auto& m : metrics) {
        table.metrics.push_back(canonical_metric(m));
        std::vector<PropertyResult> row;
        for (const auto& p : property_ids()) row.push_back(harness.check(p, m));
        table.results.push_back(std::move(row));
    }
    return table;
}

namespace {

std::string cell(bool satisfied) { return satisfied ? "/" : "\xC3\x97"; }

std::string pad(const std::string& s, std::size_t width, std::size_t display) {
    return s + std::string(width > display ? width - display : 1, ' ');
}

std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (const unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

}  // namespace

std::string table_text(const ConformanceTable& t) {
    std::ostringstream out;
    out << "Weyuker conformance (seed " << t.seed << ", trials " << t.trials << ")\n";
    constexpr std::size_t w = 10;
    out << pad("property", w, 8);
    for (const auto& m : t.metrics) out << pad(m, w, display_width(m));
    out << "\n";
    for (std::size_t p = 0; p < property_ids().size(); ++p) {
        const std::string& id = property_ids()[p];
        out << pad(id, w, id.size());
        for (std::size_t m = 0; m < t.metrics.size(); ++m) {
            const bool sat = t.results[m][p].status == PropertyStatus::Satisfied;
            std::string c = cell(sat);
            const auto expected = expected_row(t.metrics[m]);
            const std::string row = id == "6a" || id == "6b" ? "6" : id;
            if (expected && expected->at(row) != t.row_satisfied(m, row)) c += " !";
            out << pad(c, w, display_width(c));
        }
        out << "\n";
    }
    out << pad("expected", w, 8);
    for (std::size_t m = 0; m < t.metrics.size(); ++m) {
        const auto match = t.matches_expectation(m);
        const std::string c = !match ? "n/a" : *match ? "match" : "differs";
        out << pad(c, w, c.size());
    }
    out << "\n\n";
    for (std::size_t m = 0; m < t.metrics.size(); ++m) {
        for (const auto& r : t.results[m]) {
            out << t.metrics[m] << " P" << r.property << ": " << property_status_name(r.status) << " (" << r.trials
                << " trials";
            if (r.counterexamples) out << ", " << r.counterexamples << " counterexamples";
            out << ")";
            if (r.witness) {
                for (const auto& [label, value] : r.witness->values) out << " " << label << "=" << format_value(value);
            }
            if (!r.note.empty()) out << "; " << r.note;
            out << "\n";
        }
    }
    out << (t.all_match() ? "all metrics match their expected rows\n" : "some metrics differ from their expected rows\n");
    return out.str();
}

std::string table_json(const ConformanceTable& t) {
    using nlohmann::json;
    json doc;
    doc["seed"] = t.seed;
    doc["trials"] = t.trials;
    doc["all_match"] = t.all_match();
    json metrics = json::array();
    for (std::size_t m = 0; m < t.metrics.size(); ++m) {
        json jm;
        jm["metric"] = t.metrics[m];
        const auto expected = expected_row(t.metrics[m]);
        jm["expected"] = expected ? json(*expected) : json(nullptr);
        const auto match = t.matches_expectation(m);
        jm["matches_expected"] = match ? json(*match) : json(nullptr);
        json rows = json::object();
        for (const char* row : {"1", "2", "3", "4", "5", "6", "7", "8", "9"}) rows[row] = t.row_satisfied(m, row);
        jm["rows"] = rows;
        json props = json::array();
        for (const auto& r : t.results[m]) {
            json jp;
            jp["property"] = r.property;
            jp["status"] = property_status_name(r.status);
            jp["trials"] = r.trials;
            jp["counterexamples"] = r.counterexamples;
            jp["note"] = r.note;
            if (r.witness) {
                json programs = json::array();
                for (const auto& [label, source] : r.witness->programs)
                    programs.push_back({{"label", label}, {"source", source}});
                json values = json::object();
                for (const auto& [label, value] : r.witness->values) values[label] = value;
                jp["witness"] = {{"programs", programs}, {"values", values}};
            } else {
                jp["witness"] = nullptr;
            }
            props.push_back(std::move(jp));
        }
        jm["properties"] = std::move(props);
        metrics.push_back(std::move(jm));
    }
    doc["metrics"] = std::move(metrics);
    return doc.dump(2) + "\n";
}

}  // namespace cogscope
