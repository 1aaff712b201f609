#include "gridwalk/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace gridwalk::io {

namespace {

const char* method_name(Method method) {
    switch (method) {
    case Method::Exact:
        return "exact";
    case Method::Naive:
        return "naive";
    case Method::MonteCarlo:
        return "monte_carlo";
    }
    return "exact";
}

std::vector<double> step_column(std::size_t count) {
    std::vector<double> steps(count);
    for (std::size_t i = 0; i < count; ++i) {
        steps[i] = static_cast<double>(i);
    }
    return steps;
}

double parse_cell(const std::string& cell, std::size_t line_number) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::runtime_error("line " + std::to_string(line_number) +
                                 ": cell '" + cell + "' is not a number");
    }
    return value;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = line.find(',', begin);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(begin));
            return fields;
        }
        fields.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
}

void check_same_steps(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": curves cover " + std::to_string(a) +
                                    " vs " + std::to_string(b) + " steps");
    }
}

} // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string write_csv(const CsvTable& table) {
    if (table.header.size() != table.columns.size()) {
        throw std::invalid_argument("header names " + std::to_string(table.header.size()) +
                                    " columns " + std::to_string(table.columns.size()));
    }
    const std::size_t rows = table.columns.empty() ? 0 : table.columns.front().size();
    for (const auto& column : table.columns) {
        if (column.size() != rows) {
            throw std::invalid_argument("ragged columns");
        }
    }

    std::string out;
    for (const auto& comment : table.comments) {
        out += "# ";
        out += comment;
        out += '\n';
    }
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c > 0) {
            out += ',';
        }
        out += table.header[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += format_double(table.columns[c][r]);
        }
        out += '\n';
    }
    return out;
}

CsvTable read_csv(const std::string& text) {
    CsvTable table;
    bool have_header = false;
    std::size_t line_number = 0;
    std::size_t begin = 0;

    while (begin < text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::string line = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_number;
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            std::size_t content = 1;
            if (content < line.size() && line[content] == ' ') {
                ++content;
            }
            table.comments.push_back(line.substr(content));
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (!have_header) {
            table.header = fields;
            table.columns.assign(fields.size(), {});
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw std::runtime_error("line " + std::to_string(line_number) + ": got " +
                                     std::to_string(fields.size()) + " fields, header has " +
                                     std::to_string(table.header.size()));
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            table.columns[c].push_back(parse_cell(fields[c], line_number));
        }
    }
    if (!have_header) {
        throw std::runtime_error("no header row");
    }
    return table;
}

CsvTable matrix_table(const TransitionMatrix& matrix) {
    const int states = matrix.size();
    CsvTable table;
    table.header.reserve(static_cast<std::size_t>(states) + 1);
    table.header.push_back("from");
    for (int to = 1; to <= states; ++to) {
        table.header.push_back("to_" + std::to_string(to));
    }
    table.columns.assign(table.header.size(),
                         std::vector<double>(static_cast<std::size_t>(states), 0.0));
    for (int from = 1; from <= states; ++from) {
        table.columns[0][static_cast<std::size_t>(from - 1)] = from;
        const auto cols = matrix.row_cols(from);
        const auto probs = matrix.row_probs(from);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            table.columns[static_cast<std::size_t>(cols[k]) + 1]
                         [static_cast<std::size_t>(from - 1)] = probs[k];
        }
    }
    return table;
}

nlohmann::json matrix_json(const TransitionMatrix& matrix) {
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json cols = nlohmann::json::array();
    nlohmann::json vals = nlohmann::json::array();
    for (int row = 1; row <= matrix.size(); ++row) {
        const auto row_cols = matrix.row_cols(row);
        const auto row_probs = matrix.row_probs(row);
        for (std::size_t k = 0; k < row_cols.size(); ++k) {
            rows.push_back(row);
            cols.push_back(row_cols[k] + 1);
            vals.push_back(row_probs[k]);
        }
    }
    return {{"n", matrix.size()}, {"rows", std::move(rows)}, {"cols", std::move(cols)},
            {"vals", std::move(vals)}};
}

TransitionMatrix matrix_from_json(const nlohmann::json& j) {
    const int states = j.at("n").get<int>();
    const auto& from = j.at("rows");
    const auto& to = j.at("cols");
    const auto& p = j.at("vals");
    if (from.size() != to.size() || from.size() != p.size()) {
        throw std::runtime_error("rows/cols/vals arrays differ in length");
    }

    std::vector<std::vector<std::pair<std::int32_t, double>>> rows(
        static_cast<std::size_t>(states));
    for (std::size_t k = 0; k < from.size(); ++k) {
        const int row = from[k].get<int>();
        const int col = to[k].get<int>();
        if (row < 1 || row > states || col < 1 || col > states) {
            throw std::runtime_error("entry (" + std::to_string(row) + ", " +
                                     std::to_string(col) + ") outside 1.." +
                                     std::to_string(states));
        }
        rows[static_cast<std::size_t>(row - 1)].emplace_back(col - 1, p[k].get<double>());
    }

    std::vector<std::int32_t> row_ptr(static_cast<std::size_t>(states) + 1, 0);
    std::vector<std::int32_t> cols;
    std::vector<double> vals;
    cols.reserve(from.size());
    vals.reserve(from.size());
    for (int row = 0; row < states; ++row) {
        auto& entries = rows[static_cast<std::size_t>(row)];
        std::sort(entries.begin(), entries.end());
        for (const auto& [col, val] : entries) {
            cols.push_back(col);
            vals.push_back(val);
        }
        row_ptr[static_cast<std::size_t>(row) + 1] = static_cast<std::int32_t>(cols.size());
    }
    return {states, std::move(row_ptr), std::move(cols), std::move(vals)};
}

CsvTable coverage_table(const CoverageCurve& curve) {
    CsvTable table;
    table.header = {"step", "value"};
    table.columns = {step_column(curve.values.size()), curve.values};
    return table;
}

CsvTable coverage_table(const CoverageCurve& exact, const CoverageCurve& naive) {
    check_same_steps(exact.values.size(), naive.values.size(), "coverage_table");
    CsvTable table;
    table.header = {"step", "exact", "naive"};
    table.columns = {step_column(exact.values.size()), exact.values, naive.values};
    return table;
}

nlohmann::json coverage_json(const CoverageCurve& curve) {
    return {{"method", method_name(curve.method)},
            {"uavs", curve.uav_count},
            {"values", curve.values}};
}

nlohmann::json coverage_json(const CoverageCurve& exact, const CoverageCurve& naive) {
    check_same_steps(exact.values.size(), naive.values.size(), "coverage_json");
    return {{"uavs", exact.uav_count}, {"exact", exact.values}, {"naive", naive.values}};
}

CsvTable simulate_table(const SimResult& result) {
    CsvTable table;
    table.comments = {"seed=" + std::to_string(result.seed),
                      "replications=" + std::to_string(result.replications),
                      "uavs=" + std::to_string(result.uav_count)};
    table.header = {"step", "mc_mean", "mc_stderr"};
    table.columns = {step_column(result.curve.values.size()), result.curve.values,
                     result.std_error};
    return table;
}

nlohmann::json simulate_json(const SimResult& result) {
    nlohmann::json j{{"seed", result.seed},
                     {"replications", result.replications},
                     {"uavs", result.uav_count},
                     {"mc_mean", result.curve.values},
                     {"mc_stderr", result.std_error}};
    if (!result.first_arrivals.empty()) {
        j["first_arrivals"] = result.first_arrivals;
    }
    return j;
}

CompareSummary summarize_compare(const CoverageCurve& exact, const CoverageCurve& naive,
                                 const SimResult& sim) {
    check_same_steps(exact.values.size(), naive.values.size(), "summarize_compare");
    check_same_steps(exact.values.size(), sim.curve.values.size(), "summarize_compare");

    CompareSummary summary;
    for (std::size_t t = 0; t < exact.values.size(); ++t) {
        summary.max_abs_diff_naive =
            std::max(summary.max_abs_diff_naive, std::abs(exact.values[t] - naive.values[t]));
        if (sim.std_error[t] > 0.0) {
            summary.max_mc_sigma =
                std::max(summary.max_mc_sigma,
                         std::abs(exact.values[t] - sim.curve.values[t]) / sim.std_error[t]);
        }
    }
    return summary;
}

CsvTable compare_table(const CoverageCurve& exact, const CoverageCurve& naive,
                       const SimResult& sim) {
    const CompareSummary summary = summarize_compare(exact, naive, sim);
    CsvTable table;
    table.comments = {"seed=" + std::to_string(sim.seed),
                      "replications=" + std::to_string(sim.replications),
                      "uavs=" + std::to_string(sim.uav_count),
                      "summary max_abs_diff_naive=" + format_double(summary.max_abs_diff_naive) +
                          " max_mc_sigma=" + format_double(summary.max_mc_sigma)};
    table.header = {"step", "exact", "naive", "mc_mean", "mc_stderr"};
    table.columns = {step_column(exact.values.size()), exact.values, naive.values,
                     sim.curve.values, sim.std_error};
    return table;
}

nlohmann::json compare_json(const CoverageCurve& exact, const CoverageCurve& naive,
                            const SimResult& sim) {
    const CompareSummary summary = summarize_compare(exact, naive, sim);
    return {{"seed", sim.seed},
            {"replications", sim.replications},
            {"uavs", sim.uav_count},
            {"exact", exact.values},
            {"naive", naive.values},
            {"mc_mean", sim.curve.values},
            {"mc_stderr", sim.std_error},
            {"summary",
             {{"max_abs_diff_naive", summary.max_abs_diff_naive},
              {"max_mc_sigma", summary.max_mc_sigma}}}};
}

nlohmann::json report_json(const DependenceReport& report) {
    return {{"kind", "two_step"},   {"state", report.state}, {"time", report.time},
            {"p_m", report.p_m},    {"lhs", report.lhs},     {"rhs", report.rhs},
            {"verdict", verdict_name(report.verdict)}};
}

nlohmann::json successive_json(int state, int time, Verdict verdict) {
    return {{"kind", "successive"},
            {"state", state},
            {"time", time},
            {"verdict", verdict_name(verdict)}};
}

} // namespace gridwalk::io
