#pragma once

#include "gridwalk/chain.hpp"
#include "gridwalk/coverage.hpp"
#include "gridwalk/dependence.hpp"
#include "gridwalk/montecarlo.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gridwalk::io {

/// Shortest text that parses back to the same double: %.17g.
std::string format_double(double value);

/// Numeric table with a mandatory header row and optional leading comment
/// lines. Comments are stored without the "# " prefix. Serialized form uses
/// '.' decimals, ',' separators and Unix newlines.
struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;
};

std::string write_csv(const CsvTable& table);

/// Inverse of write_csv; accepts comment lines anywhere. Throws
/// std::runtime_error on ragged rows or non-numeric cells.
CsvTable read_csv(const std::string& text);

/// Dense matrix table: header from,to_1..to_N, one row per source state.
CsvTable matrix_table(const TransitionMatrix& matrix);

/// Sparse 1-based coordinate form: {"n": N, "rows": [...], "cols": [...],
/// "vals": [...]}.
nlohmann::json matrix_json(const TransitionMatrix& matrix);

/// Rebuilds (and re-validates) a matrix from matrix_json output.
TransitionMatrix matrix_from_json(const nlohmann::json& j);

/// Header step,value.
CsvTable coverage_table(const CoverageCurve& curve);

/// Header step,exact,naive; both curves must cover the same steps.
CsvTable coverage_table(const CoverageCurve& exact, const CoverageCurve& naive);

nlohmann::json coverage_json(const CoverageCurve& curve);
nlohmann::json coverage_json(const CoverageCurve& exact, const CoverageCurve& naive);

/// Header step,mc_mean,mc_stderr with seed/replications/uavs comment lines.
CsvTable simulate_table(const SimResult& result);

nlohmann::json simulate_json(const SimResult& result);

/// Curve-agreement figures for the exact/naive/Monte-Carlo comparison.
/// max_mc_sigma is taken over steps with positive standard error; 0 when
/// every step is deterministic.
struct CompareSummary {
    double max_abs_diff_naive = 0.0;
    double max_mc_sigma = 0.0;
};

CompareSummary summarize_compare(const CoverageCurve& exact, const CoverageCurve& naive,
                                 const SimResult& sim);

/// Header step,exact,naive,mc_mean,mc_stderr plus a summary comment line.
CsvTable compare_table(const CoverageCurve& exact, const CoverageCurve& naive,
                       const SimResult& sim);

nlohmann::json compare_json(const CoverageCurve& exact, const CoverageCurve& naive,
                            const SimResult& sim);

nlohmann::json report_json(const DependenceReport& report);

/// Successive-events verdict carries no conditional sides, only the verdict.
nlohmann::json successive_json(int state, int time, Verdict verdict);

} // namespace gridwalk::io
