#pragma once

#include "gridwalk/lattice.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gridwalk::cli {

/// Thrown when the output file cannot be opened or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One parsed command line. The flag parser fills this in; run() validates
/// every field against the library preconditions before computing anything.
struct Options {
    std::string subcommand; // matrix | coverage | simulate | compare | dependence

    int width = 0;
    int depth = 0;
    int height = 1;
    bool boundless = false;

    bool start_uniform = false;          // explicit --start-uniform
    std::optional<Coord> start_cell;     // --start-cell x,y[,z]

    int steps = 0;
    int uavs = 1;
    std::int64_t replications = 10000;
    std::uint64_t seed = 0;
    int threads = 0;     // 0 = GRIDWALK_THREADS env, then hardware
    std::string format;  // csv | json; empty = subcommand default
    std::string output;  // output path; empty = the out stream

    int absorb = 0;              // matrix: state made absorbing, 0 = none
    bool naive = false;          // coverage: add the naive curve
    bool first_arrivals = false; // simulate: include first-arrival counts
    std::optional<Coord> cell;   // dependence: target cell z
    int time = 0;                // dependence: time index
    bool successive = false;     // dependence: successive-events check
};

/// Parses "x,y" or "x,y,z" into a coordinate. Throws std::invalid_argument
/// on anything else.
Coord parse_cell_arg(const std::string& text);

/// Executes one command. The artifact goes to options.output when set, to
/// `out` otherwise; diagnostics go to `err`. Returns 0 on success, 2 on
/// validation errors, 3 on resource-guard errors, 4 on I/O errors.
int run(const Options& options, std::ostream& out, std::ostream& err);

} // namespace gridwalk::cli
