#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cogscope/generator.hpp"
#include "cogscope/report.hpp"
#include "cogscope/weyuker.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Scope-aware cognitive information metrics for MiniLang";
    m.attr("__version__") = cogscope::tool_version();

    py::register_exception<cogscope::Error>(m, "AnalysisError", PyExc_ValueError);

    m.def(
        "analyze_json",
        [](const std::string& source, const std::string& input_file, const std::string& metric, bool granules) {
            cogscope::ReportOptions o;
            o.metric = metric;
            o.granules = granules;
            return cogscope::report_json(cogscope::analyze(source), input_file, o);
        },
        py::arg("source"), py::arg("input_file") = "<string>", py::arg("metric") = "all",
        py::arg("granules") = false, "JSON report of one MiniLang source text.");

    m.def(
        "weyuker_json",
        [](std::uint64_t seed, std::uint64_t trials, const std::vector<std::string>& metrics) {
            cogscope::HarnessConfig config;
            config.seed = seed;
            config.trials = trials;
            py::gil_scoped_release release;
            return cogscope::table_json(cogscope::run_table(metrics, config));
        },
        py::arg("seed") = 1, py::arg("trials") = 1000, py::arg("metrics") = std::vector<std::string>{"escim"},
        "Conformance table as JSON.");

    m.def(
        "generate",
        [](std::uint64_t seed, int max_statements, int max_depth) {
            cogscope::GeneratorConfig g;
            g.seed = seed;
            g.max_statements = max_statements;
            g.max_depth = max_depth;
            return cogscope::generate(g);
        },
        py::arg("seed") = 0, py::arg("max_statements") = 6, py::arg("max_depth") = 3,
        "Random well-formed MiniLang program.");

    m.def("metric_ids", &cogscope::metric_ids);
    m.def("property_ids", &cogscope::property_ids);
}
