#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cogscope/generator.hpp"
#include "cogscope/report.hpp"
#include "cogscope/weyuker.hpp"

namespace fs = std::filesystem;
using namespace cogscope;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

bool read_file(const std::string& path, std::string& text) {
    std::ifstream in(path, std::ios::binary);
    if (!in || fs::is_directory(path)) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
    return true;
}

std::string file_label(std::string label) {
    for (char& c : label)
        if (c == ';' || c == '|' || c == ' ') c = '_';
    return label;
}

struct AnalyzeArgs {
    std::vector<std::string> paths;
    std::string format = "text";
    std::string metric = "all";
    bool granules = false;
};

int run_analyze(const AnalyzeArgs& args) {
    ReportOptions options;
    options.metric = args.metric;
    options.granules = args.granules;
    int status = kOk;
    std::vector<std::string> documents;
    std::string text;
    for (const auto& path : args.paths) {
        std::string source;
        if (!read_file(path, source)) {
            std::cerr << path << ": error: cannot read file\n";
            status = kFailed;
            continue;
        }
        try {
            const Analysis a = analyze(source);
            if (args.format == "json") {
                documents.push_back(report_json(a, path, options));
            } else {
                if (!text.empty()) text += "\n";
                text += report_text(a, path, options);
            }
        } catch (const Error& e) {
            std::cerr << e.diagnostic().format(path) << "\n";
            status = kFailed;
        }
    }
    if (args.format == "json") {
        if (documents.size() == 1 && args.paths.size() == 1) {
            std::cout << documents.front() << "\n";
        } else if (!documents.empty()) {
            std::cout << report_json_array(documents) << "\n";
        }
    } else {
        std::cout << text;
    }
    return status;
}

struct WeyukerArgs {
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000;
    std::vector<std::string> metrics;
    std::string format = "text";
    std::string witness_dir;
};

int run_weyuker(const WeyukerArgs& args) {
    HarnessConfig config;
    config.seed = args.seed;
    config.trials = args.trials;
    std::vector<std::string> metrics = args.metrics.empty() ? metric_ids() : args.metrics;
    try {
        for (auto& m : metrics) m = canonical_metric(m);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    const ConformanceTable table = run_table(metrics, config);
    std::cout << (args.format == "json" ? table_json(table) : table_text(table));
    if (!args.witness_dir.empty()) {
        std::error_code ec;
        fs::create_directories(args.witness_dir, ec);
        if (ec) {
            std::cerr << args.witness_dir << ": error: " << ec.message() << "\n";
            return kFailed;
        }
        for (std::size_t m = 0; m < table.metrics.size(); ++m) {
            for (const auto& r : table.results[m]) {
                if (!r.witness) continue;
                for (const auto& [label, source] : r.witness->programs) {
                    const fs::path out = fs::path(args.witness_dir) /
                                         (table.metrics[m] + "_P" + r.property + "_" + file_label(label) + ".ml1");
                    std::ofstream(out, std::ios::binary) << source;
                }
            }
        }
    }
    return table.all_match() ? kOk : kFailed;
}

struct CorpusArgs {
    std::string dir;
    bool csv = false;
};

int run_corpus(const CorpusArgs& args) {
    if (!fs::is_directory(args.dir)) {
        std::cerr << args.dir << ": error: not a directory\n";
        return kFailed;
    }
    const auto rows = analyze_corpus(args.dir);
    std::cout << (args.csv ? corpus_csv(rows) : corpus_text(rows));
    int status = kOk;
    for (const auto& r : rows) {
        if (r.ok) continue;
        if (args.csv) std::cerr << r.error << "\n";
        status = kFailed;
    }
    return status;
}

struct GenerateArgs {
    std::uint64_t seed = 1;
    std::uint32_t count = 1;
    std::string out_dir;
    int max_statements = 6;
    int max_depth = 3;
};

int run_generate(const GenerateArgs& args) {
    if (!args.out_dir.empty()) {
        std::error_code ec;
        fs::create_directories(args.out_dir, ec);
        if (ec) {
            std::cerr << args.out_dir << ": error: " << ec.message() << "\n";
            return kFailed;
        }
    }
    for (std::uint32_t i = 0; i < args.count; ++i) {
        GeneratorConfig g;
        g.seed = args.seed + i;
        g.max_statements = args.max_statements;
        g.max_depth = args.max_depth;
        const std::string program = generate(g);
        if (args.out_dir.empty()) {
            std::cout << program;
        } else {
            std::ostringstream name;
            name << "gen_" << std::setw(5) << std::setfill('0') << i << ".ml1";
            std::ofstream(fs::path(args.out_dir) / name.str(), std::ios::binary) << program;
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cognitive complexity metrics for MiniLang programs", "cogscope"};
    app.set_version_flag("--version", std::string("cogscope ") + tool_version());
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Report metrics for source files");
    analyze_cmd->add_option("paths", analyze_args.paths, "MiniLang source files")->required();
    analyze_cmd->add_option("--format", analyze_args.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_option("--metric", analyze_args.metric, "Restrict the report to one metric family")->check(CLI::IsMember(report_filters()));
    analyze_cmd->add_flag("--granules", analyze_args.granules, "Add the per-granule table");

    WeyukerArgs weyuker_args;
    auto* weyuker_cmd = app.add_subcommand("weyuker", "Check Weyuker's properties");
    weyuker_cmd->add_option("--seed", weyuker_args.seed, "Random seed")->envname("COGSCOPE_SEED");
    weyuker_cmd->add_option("--trials", weyuker_args.trials, "Random trials per property")->check(CLI::PositiveNumber);
    weyuker_cmd->add_option("--metrics", weyuker_args.metrics, "Comma separated metric ids")->delimiter(',');
    weyuker_cmd->add_option("--format", weyuker_args.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    weyuker_cmd->add_option("--witness-dir", weyuker_args.witness_dir, "Write witness programs here");

    CorpusArgs corpus_args;
    auto* corpus_cmd = app.add_subcommand("corpus", "Tabulate every .ml1 file of a directory");
    corpus_cmd->add_option("dir", corpus_args.dir, "Directory searched recursively")->required();
    corpus_cmd->add_flag("--csv", corpus_args.csv, "Comma separated rows");

    GenerateArgs generate_args;
    auto* generate_cmd = app.add_subcommand("generate", "Print random programs");
    generate_cmd->add_option("--seed", generate_args.seed, "Seed of the first program")->envname("COGSCOPE_SEED");
    generate_cmd->add_option("--count", generate_args.count, "Number of programs")->check(CLI::PositiveNumber);
    generate_cmd->add_option("--out", generate_args.out_dir, "One file per program");
    generate_cmd->add_option("--max-statements", generate_args.max_statements, "Top-level statements of main")->check(CLI::NonNegativeNumber);
    generate_cmd->add_option("--max-depth", generate_args.max_depth, "Nesting of control statements")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze_args);
        if (*weyuker_cmd) return run_weyuker(weyuker_args);
        if (*corpus_cmd) return run_corpus(corpus_args);
        if (*generate_cmd) return run_generate(generate_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
