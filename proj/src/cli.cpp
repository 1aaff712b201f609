#include "gridwalk/cli.hpp"

#include "gridwalk/chain.hpp"
#include "gridwalk/coverage.hpp"
#include "gridwalk/dependence.hpp"
#include "gridwalk/io.hpp"
#include "gridwalk/montecarlo.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace gridwalk::cli {

namespace {

int parse_int(const std::string& text, const std::string& what) {
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument(what + " '" + text + "' is not an integer");
    }
    return value;
}

int resolve_threads(int requested) {
    if (requested != 0) {
        return requested;
    }
    if (const char* env = std::getenv("GRIDWALK_THREADS")) {
        const int value = parse_int(env, "GRIDWALK_THREADS");
        if (value < 0) {
            throw std::invalid_argument("GRIDWALK_THREADS must be nonnegative, got " +
                                        std::string(env));
        }
        return value;
    }
    return 0;
}

std::string resolve_format(const Options& options) {
    std::string format = options.format;
    if (format.empty()) {
        format = options.subcommand == "dependence" ? "json" : "csv";
    }
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("--format must be csv or json, got '" + format + "'");
    }
    if (options.subcommand == "dependence" && format == "csv") {
        throw std::invalid_argument("dependence reports are json only; drop --format csv");
    }
    return format;
}

StartSpec resolve_start(const Options& options, const GridSpec& spec) {
    if (options.start_uniform && options.start_cell) {
        throw std::invalid_argument("--start-uniform conflicts with --start-cell");
    }
    if (options.start_cell) {
        return StartSpec::deterministic(spec.index_of(*options.start_cell));
    }
    return StartSpec::uniform();
}

std::string json_text(const nlohmann::json& j) { return j.dump() + "\n"; }

std::string run_matrix(const Options& options, const GridSpec& spec, const std::string& format) {
    TransitionMatrix matrix = build_transition(spec);
    if (options.absorb != 0) {
        matrix = make_absorbing(matrix, options.absorb);
    }
    return format == "csv" ? io::write_csv(io::matrix_table(matrix))
                           : json_text(io::matrix_json(matrix));
}

std::string run_coverage(const Options& options, const ChainModel& model,
                         const std::string& format, int threads) {
    if (options.naive && options.uavs != 1) {
        throw std::invalid_argument("--naive computes a single-agent curve; drop --uavs");
    }
    const CoverageCurve exact =
        expected_coverage_multi(model, options.steps, options.uavs, threads);
    if (!options.naive) {
        return format == "csv" ? io::write_csv(io::coverage_table(exact))
                               : json_text(io::coverage_json(exact));
    }
    const CoverageCurve naive = expected_coverage_naive(model, options.steps);
    return format == "csv" ? io::write_csv(io::coverage_table(exact, naive))
                           : json_text(io::coverage_json(exact, naive));
}

std::string run_simulate(const Options& options, const ChainModel& model,
                         const std::string& format, int threads) {
    if (options.first_arrivals && format != "json") {
        throw std::invalid_argument("--first-arrivals requires --format json");
    }
    SimConfig cfg;
    cfg.n_max = options.steps;
    cfg.replications = options.replications;
    cfg.uav_count = options.uavs;
    cfg.seed = options.seed;
    cfg.threads = threads;
    cfg.track_first_arrivals = options.first_arrivals;
    const SimResult result = simulate_coverage(model, cfg);
    return format == "csv" ? io::write_csv(io::simulate_table(result))
                           : json_text(io::simulate_json(result));
}

std::string run_compare(const Options& options, const ChainModel& model,
                        const std::string& format, int threads) {
    if (options.uavs != 1) {
        throw std::invalid_argument("compare is single-agent; drop --uavs");
    }
    const CoverageCurve exact = expected_coverage_exact(model, options.steps, threads);
    const CoverageCurve naive = expected_coverage_naive(model, options.steps);
    SimConfig cfg;
    cfg.n_max = options.steps;
    cfg.replications = options.replications;
    cfg.seed = options.seed;
    cfg.threads = threads;
    const SimResult sim = simulate_coverage(model, cfg);
    return format == "csv" ? io::write_csv(io::compare_table(exact, naive, sim))
                           : json_text(io::compare_json(exact, naive, sim));
}

std::string run_dependence(const Options& options, const ChainModel& model,
                           const GridSpec& spec) {
    if (!options.cell) {
        throw std::invalid_argument("dependence requires --cell x,y[,z]");
    }
    const int z = spec.index_of(*options.cell);
    if (options.successive) {
        return json_text(
            io::successive_json(z, options.time, check_successive_dependence(model, z, options.time)));
    }
    return json_text(io::report_json(check_two_step_dependence(model, z, options.time)));
}

void emit(const Options& options, const std::string& payload, std::ostream& out) {
    if (options.output.empty()) {
        out << payload;
        out.flush();
        return;
    }
    std::ofstream file(options.output, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + options.output + "' for writing");
    }
    file << payload;
    file.flush();
    if (!file) {
        throw IoError("writing '" + options.output + "' failed");
    }
}

} // namespace

Coord parse_cell_arg(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = text.find(',', begin);
        if (comma == std::string::npos) {
            parts.push_back(text.substr(begin));
            break;
        }
        parts.push_back(text.substr(begin, comma - begin));
        begin = comma + 1;
    }
    if (parts.size() != 2 && parts.size() != 3) {
        throw std::invalid_argument("cell '" + text + "' must be x,y or x,y,z");
    }
    Coord c;
    c.x = parse_int(parts[0], "cell coordinate");
    c.y = parse_int(parts[1], "cell coordinate");
    c.z = parts.size() == 3 ? parse_int(parts[2], "cell coordinate") : 1;
    return c;
}

int run(const Options& options, std::ostream& out, std::ostream& err) {
    try {
        const std::string format = resolve_format(options);
        const int threads = resolve_threads(options.threads);
        const GridSpec spec(options.width, options.depth, options.height,
                            options.boundless ? Borders::Boundless : Borders::Bordered);

        std::string payload;
        if (options.subcommand == "matrix") {
            payload = run_matrix(options, spec, format);
        } else {
            const ChainModel model = make_chain(spec, resolve_start(options, spec));
            if (options.subcommand == "coverage") {
                payload = run_coverage(options, model, format, threads);
            } else if (options.subcommand == "simulate") {
                payload = run_simulate(options, model, format, threads);
            } else if (options.subcommand == "compare") {
                payload = run_compare(options, model, format, threads);
            } else if (options.subcommand == "dependence") {
                payload = run_dependence(options, model, spec);
            } else {
                throw std::invalid_argument("unknown subcommand '" + options.subcommand + "'");
            }
        }
        emit(options, payload, out);
        return 0;
    } catch (const ResourceLimitError& e) {
        err << "gridwalk: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        err << "gridwalk: " << e.what() << '\n';
        return 4;
    } catch (const std::logic_error& e) {
        err << "gridwalk: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "gridwalk: " << e.what() << '\n';
        return 1;
    }
}

} // namespace gridwalk::cli
