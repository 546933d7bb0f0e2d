#include "cogscope/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef COGSCOPE_VERSION
#define COGSCOPE_VERSION "0.0.0"
#endif

namespace cogscope {

using nlohmann::json;

const char* tool_version() { return COGSCOPE_VERSION; }

const std::vector<std::string>& report_filters() {
    static const std::vector<std::string> names = {"all", "escim", "cfs", "cicm", "mccm", "cpcm", "scim"};
    return names;
}

std::vector<std::string> report_keys(std::string_view filter) {
    if (filter == "all")
        return {"loc", "wc", "n_i", "n_o", "s_io", "n_i1", "n_i2", "cfs", "wics", "cicm", "mccm", "cpcm",
                "I(L)", "SI(L)", "scim_icn", "escim", "efficiency_e"};
    if (filter == "escim") return {"loc", "wc", "SI(L)", "escim", "efficiency_e"};
    if (filter == "cfs") return {"loc", "wc", "n_i", "n_o", "cfs"};
    if (filter == "cicm") return {"loc", "wc", "wics", "cicm"};
    if (filter == "mccm") return {"loc", "wc", "n_i1", "n_i2", "mccm"};
    if (filter == "cpcm") return {"loc", "wc", "s_io", "cpcm"};
    if (filter == "scim") return {"loc", "wc", "I(L)", "scim_icn"};
    throw std::invalid_argument("unknown metric filter '" + std::string(filter) + "'");
}

namespace {

double round6(double v) { return std::round(v * 1e6) / 1e6; }

json metric_number(std::string_view key, const MetricValues& m) {
    if (key == "loc") return m.loc;
    if (key == "wc") return m.wc;
    if (key == "n_i") return m.inputs;
    if (key == "n_o") return m.outputs;
    if (key == "s_io") return m.s_io;
    if (key == "n_i1") return m.operators;
    if (key == "n_i2") return m.operands;
    if (key == "cfs") return m.cfs;
    if (key == "wics") return round6(m.wics);
    if (key == "cicm") return round6(m.cicm);
    if (key == "mccm") return m.mccm;
    if (key == "cpcm") return m.cpcm;
    if (key == "I(L)") return m.info;
    if (key == "SI(L)") return m.si;
    if (key == "scim_icn") return m.scim_icn;
    if (key == "escim") return m.escim;
    if (key == "efficiency_e") return round6(m.efficiency_e);
    throw std::invalid_argument("unknown metric key '" + std::string(key) + "'");
}

json metrics_json(const MetricValues& m, const std::vector<std::string>& keys) {
    json out = json::object();
    for (const auto& k : keys) out[k] = metric_number(k, m);
    return out;
}

json span_json(const Span& s) {
    return {{"line", s.line}, {"column", s.column}, {"offset", s.offset}, {"length", s.length}};
}

json extrema_json(const std::vector<VariableExtrema>& vars) {
    json out = json::array();
    for (const auto& v : vars) {
        out.push_back({{"name", v.name},
                       {"symbol", v.symbol},
                       {"icn_max", v.icn_max},
                       {"sicn_max", v.sicn_max},
                       {"sicn_min", v.sicn_min}});
    }
    return out;
}

json granule_json(const GranuleRow& g) {
    return {{"id", g.id},
            {"kind", bcs_kind_name(g.kind)},
            {"weight", g.weight},
            {"depth", g.depth},
            {"span", span_json(g.span)},
            {"parent", g.parent ? json(*g.parent) : json(nullptr)},
            {"children", g.children},
            {"si", g.si},
            {"info", g.info},
            {"header_si", g.header_si},
            {"header_info", g.header_info},
            {"wc", g.wc},
            {"escim", g.escim},
            {"scim_icn", g.scim_icn},
            {"contribution", g.contribution},
            {"variables", extrema_json(g.variables)}};
}

std::string fixed6(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << round6(v);
    return out.str();
}

}  // namespace

std::string format_metric(std::string_view key, const MetricValues& values) {
    if (key == "wics") return fixed6(values.wics);
    if (key == "cicm") return fixed6(values.cicm);
    if (key == "efficiency_e") return fixed6(values.efficiency_e);
    return metric_number(key, values).dump();
}

std::string report_json(const Analysis& a, const std::string& input_file, const ReportOptions& options) {
    const auto keys = report_keys(options.metric);
    json doc;
    doc["tool"] = "cogscope";
    doc["tool_version"] = tool_version();
    doc["input_file"] = input_file;
    doc["metrics"] = metrics_json(a.program, keys);
    doc["diagnostics"] = json::array();
    json functions = json::array();
    for (const auto& f : a.functions) {
        json jf = {{"name", f.name}, {"span", span_json(f.span)}, {"metrics", metrics_json(f.metrics, keys)}};
        if (options.granules) {
            json rows = json::array();
            for (const auto& g : f.granules) rows.push_back(granule_json(g));
            jf["granules"] = std::move(rows);
        }
        functions.push_back(std::move(jf));
    }
    doc["functions"] = std::move(functions);
    json vars = json::array();
    for (const auto& v : a.variables) {
        vars.push_back({{"name", v.name},
                        {"symbol", v.symbol},
                        {"kind", v.kind},
                        {"function", v.function.empty() ? json(nullptr) : json(v.function)},
                        {"icn_max", v.icn_max},
                        {"sicn_max", v.sicn_max},
                        {"sicn_min", v.sicn_min}});
    }
    doc["variables"] = std::move(vars);
    return doc.dump(2);
}

std::string report_json_array(const std::vector<std::string>& documents) {
    json arr = json::array();
    for (const auto& d : documents) arr.push_back(json::parse(d));
    return arr.dump(2);
}

std::string report_text(const Analysis& a, const std::string& input_file, const ReportOptions& options) {
    const auto keys = report_keys(options.metric);
    std::ostringstream out;
    const auto block = [&](const MetricValues& m) {
        for (const auto& k : keys) out << "  " << std::left << std::setw(14) << k << format_metric(k, m) << "\n";
    };
    out << input_file << "\n";
    out << "program\n";
    block(a.program);
    for (const auto& f : a.functions) {
        out << "function " << f.name << " (line " << f.span.line << ")\n";
        block(f.metrics);
        if (!options.granules) continue;
        out << "  granules\n";
        out << "    " << std::left << std::setw(5) << "id" << std::setw(11) << "kind" << std::setw(7) << "weight"
            << std::setw(6) << "depth" << std::setw(6) << "line" << std::setw(8) << "parent" << std::setw(6) << "si"
            << std::setw(6) << "info" << std::setw(7) << "escim" << "variables\n";
        for (const auto& g : f.granules) {
            std::string vars;
            for (const auto& v : g.variables) {
                if (!vars.empty()) vars += " ";
                vars += v.name + "#" + std::to_string(v.symbol) + "[" + std::to_string(v.icn_max) + "," +
                        std::to_string(v.sicn_min) + ".." + std::to_string(v.sicn_max) + "]";
            }
            const std::string indent(2 * (g.depth - 1), ' ');
            out << "    " << std::left << std::setw(5) << g.id << std::setw(11) << (indent + bcs_kind_name(g.kind))
                << std::setw(7) << g.weight << std::setw(6) << g.depth << std::setw(6) << g.span.line
                << std::setw(8) << (g.parent ? std::to_string(*g.parent) : "-") << std::setw(6) << g.si
                << std::setw(6) << g.info << std::setw(7) << g.escim << vars << "\n";
        }
    }
    out << "variables\n";
    out << "  " << std::left << std::setw(12) << "name" << std::setw(8) << "symbol" << std::setw(11) << "kind"
        << std::setw(12) << "function" << std::setw(9) << "icn_max" << std::setw(10) << "sicn_max" << "sicn_min\n";
    for (const auto& v : a.variables) {
        out << "  " << std::left << std::setw(12) << v.name << std::setw(8) << v.symbol << std::setw(11) << v.kind
            << std::setw(12) << (v.function.empty() ? "-" : v.function) << std::setw(9) << v.icn_max
            << std::setw(10) << v.sicn_max << v.sicn_min << "\n";
    }
    return out.str();
}

CorpusRow analyze_file(const std::filesystem::path& file, const std::string& label) {
    CorpusRow row;
    row.path = label;
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        row.error = label + ": cannot read file";
        return row;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        row.values = analyze(buffer.str(), {}, false).program;
        row.ok = true;
    } catch (const Error& e) {
        row.error = e.diagnostic().format(label);
    }
    return row;
}

std::vector<CorpusRow> analyze_corpus(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".ml1") files.push_back(entry.path());
    }
    std::vector<CorpusRow> rows;
    rows.reserve(files.size());
    for (const auto& f : files) rows.push_back(analyze_file(f, f.lexically_relative(dir).generic_string()));
    std::sort(rows.begin(), rows.end(), [](const CorpusRow& a, const CorpusRow& b) { return a.path < b.path; });
    return rows;
}

namespace {

const std::vector<std::string> kCorpusKeys = {"loc",  "wc",       "cfs",   "cicm",        "mccm",
                                              "cpcm", "scim_icn", "escim", "efficiency_e"};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string corpus_csv(const std::vector<CorpusRow>& rows) {
    std::ostringstream out;
    out << "path";
    for (const auto& k : kCorpusKeys) out << "," << k;
    out << "\n";
    for (const auto& r : rows) {
        if (!r.ok) continue;
        out << csv_field(r.path);
        for (const auto& k : kCorpusKeys) out << "," << format_metric(k, r.values);
        out << "\n";
    }
    return out.str();
}

std::string corpus_text(const std::vector<CorpusRow>& rows) {
    std::size_t width = 4;
    for (const auto& r : rows) width = std::max(width, r.path.size());
    width += 2;
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(width)) << "path";
    for (const auto& k : kCorpusKeys) out << std::right << std::setw(k == "efficiency_e" ? 14 : 12) << k;
    out << "\n";
    std::vector<const CorpusRow*> ok;
    for (const auto& r : rows) {
        if (!r.ok) continue;
        ok.push_back(&r);
        out << std::left << std::setw(static_cast<int>(width)) << r.path;
        for (const auto& k : kCorpusKeys)
            out << std::right << std::setw(k == "efficiency_e" ? 14 : 12) << format_metric(k, r.values);
        out << "\n";
    }
    std::stable_sort(ok.begin(), ok.end(), [](const CorpusRow* a, const CorpusRow* b) {
        return a->values.efficiency_e > b->values.efficiency_e;
    });
    out << "\nranking by E = ESCIM/LOC\n";
    for (std::size_t i = 0; i < ok.size(); ++i) {
        out << std::right << std::setw(4) << i + 1 << ". " << std::left << std::setw(static_cast<int>(width))
            << ok[i]->path << fixed6(ok[i]->values.efficiency_e) << "\n";
    }
    bool header = false;
    for (const auto& r : rows) {
        if (r.ok) continue;
        if (!header) out << "\nfailed\n";
        header = true;
        out << "  " << r.error << "\n";
    }
    return out.str();
}

}  // namespace cogscope
