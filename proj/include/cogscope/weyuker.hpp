#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogscope/generator.hpp"
#include "cogscope/metrics.hpp"

namespace cogscope {

enum class PropertyStatus { Satisfied, Violated, Vacuous };

[[nodiscard]] const char* property_status_name(PropertyStatus status);

/// Property ids in table order: 1 2 3 4 5 6a 6b 7 8 9.
[[nodiscard]] const std::vector<std::string>& property_ids();

/// Metric ids accepted by the harness: loc cfs cicm mccm cpcm scim escim.
[[nodiscard]] const std::vector<std::string>& metric_ids();

/// Canonical id for a metric name (accepts `scim_icn` for `scim`); throws
/// std::invalid_argument for unknown names.
[[nodiscard]] std::string canonical_metric(std::string_view metric);

/// Value of a metric id in a report.
[[nodiscard]] double metric_value(const MetricValues& values, std::string_view metric);

struct Witness {
    std::vector<std::pair<std::string, std::string>> programs;  // label, source
    std::vector<std::pair<std::string, double>> values;         // e.g. "|P;Q|", 12
};

struct PropertyResult {
    std::string property;
    std::string metric;
    PropertyStatus status = PropertyStatus::Vacuous;
    std::uint64_t trials = 0;
    std::uint64_t counterexamples = 0;
    std::optional<Witness> witness;
    std::string note;
};

struct HarnessConfig {
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000;
    GeneratorConfig generator;
};

/// Checks properties against any registered metric. Analyses are cached by
/// program text, so checking several metrics over the same seed reuses them.
class Harness {
public:
    explicit Harness(HarnessConfig config);
    ~Harness();
    Harness(const Harness&) = delete;
    Harness& operator=(const Harness&) = delete;

    /// Throws std::invalid_argument for an unknown property or metric id.
    [[nodiscard]] PropertyResult check(std::string_view property, std::string_view metric);

    [[nodiscard]] double measure(std::string_view metric, const std::string& source);
    [[nodiscard]] const HarnessConfig& config() const { return config_; }

    /// Program number `trial` of the stream `stream`.
    [[nodiscard]] std::string program(std::uint64_t stream, std::uint64_t trial);

private:
    struct Impl;
    HarnessConfig config_;
    std::unique_ptr<Impl> impl_;
};

[[nodiscard]] PropertyResult check_property(std::string_view property, std::string_view metric,
                                            std::uint64_t trials, std::uint64_t seed = 1);

/// Expected conformance of a metric, keyed by row "1".."9"; std::nullopt
/// when no expectation is recorded for the metric (cicm).
[[nodiscard]] std::optional<std::map<std::string, bool>> expected_row(std::string_view metric);

struct ConformanceTable {
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<std::string> metrics;
    std::vector<std::vector<PropertyResult>> results;  // [metric][property]

    /// Row verdict for "1".."9"; row 6 needs both 6a and 6b.
    [[nodiscard]] bool row_satisfied(std::size_t metric, std::string_view row) const;
    /// std::nullopt when the metric has no expectation.
    [[nodiscard]] std::optional<bool> matches_expectation(std::size_t metric) const;
    [[nodiscard]] bool all_match() const;
};

[[nodiscard]] ConformanceTable run_table(const std::vector<std::string>& metrics, const HarnessConfig& config);

[[nodiscard]] std::string table_text(const ConformanceTable& table);
[[nodiscard]] std::string table_json(const ConformanceTable& table);

}  // namespace cogscope
