#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cogscope/metrics.hpp"
#include "cogscope/span.hpp"

namespace cogscope {

[[nodiscard]] const char* tool_version();

/// Metric filter names accepted by `--metric`.
[[nodiscard]] const std::vector<std::string>& report_filters();

struct ReportOptions {
    std::string metric = "all";
    bool granules = false;
};

/// Metric keys kept by a filter, in report order. Throws
/// std::invalid_argument for an unknown filter.
[[nodiscard]] std::vector<std::string> report_keys(std::string_view filter);

/// One report document as JSON text: sorted keys, two-space indent, WICS,
/// CICM and E rounded to six decimals.
[[nodiscard]] std::string report_json(const Analysis& analysis, const std::string& input_file,
                                      const ReportOptions& options = {});

/// Several documents as one JSON array.
[[nodiscard]] std::string report_json_array(const std::vector<std::string>& documents);

[[nodiscard]] std::string report_text(const Analysis& analysis, const std::string& input_file,
                                      const ReportOptions& options = {});

/// Number as printed in reports.
[[nodiscard]] std::string format_metric(std::string_view key, const MetricValues& values);

struct CorpusRow {
    std::string path;
    bool ok = false;
    MetricValues values;
    std::string error;  // file:line:col: message, when !ok
};

/// Every `.ml1` file under `dir` (recursively), analyzed and sorted by path.
/// Paths are reported relative to `dir`.
[[nodiscard]] std::vector<CorpusRow> analyze_corpus(const std::filesystem::path& dir);

[[nodiscard]] CorpusRow analyze_file(const std::filesystem::path& file, const std::string& label);

/// Columns: path, loc, wc, cfs, cicm, mccm, cpcm, scim_icn, escim, efficiency_e.
[[nodiscard]] std::string corpus_csv(const std::vector<CorpusRow>& rows);

/// Metric table, then the E ranking, then failures.
[[nodiscard]] std::string corpus_text(const std::vector<CorpusRow>& rows);

}  // namespace cogscope
