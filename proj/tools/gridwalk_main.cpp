#include "gridwalk/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Expected coverage of symmetric random walks on bordered and boundless "
                 "2D/3D lattices"};
    app.require_subcommand(1);

    gridwalk::cli::Options opt;
    std::string start_cell_text;
    std::string cell_text;

    const auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--width", opt.width, "cells along x")->required();
        cmd->add_option("--depth", opt.depth, "cells along y")->required();
        cmd->add_option("--height", opt.height, "cells along z; 1 keeps the grid 2D");
        CLI::Option* borders = cmd->add_flag("--borders", "bordered grid (the default)");
        cmd->add_flag("--boundless", opt.boundless, "wrap-around grid")->excludes(borders);
    };
    const auto add_start = [&](CLI::App* cmd) {
        CLI::Option* cell = cmd->add_option("--start-cell", start_cell_text,
                                            "start the walk at cell x,y[,z]");
        cmd->add_flag("--start-uniform", opt.start_uniform,
                      "uniform start over all cells (the default)")
            ->excludes(cell);
    };
    const auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "csv or json");
        cmd->add_option("--output,-o", opt.output, "output path (default: stdout)");
    };
    const auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", opt.threads,
                        "worker threads; 0 = GRIDWALK_THREADS, then all cores");
    };

    CLI::App* matrix = app.add_subcommand("matrix", "emit the transition matrix");
    add_grid(matrix);
    matrix->add_option("--absorb", opt.absorb, "make this state absorbing");
    add_output(matrix);

    CLI::App* coverage = app.add_subcommand("coverage", "exact expected-coverage curve");
    add_grid(coverage);
    add_start(coverage);
    coverage->add_option("--steps", opt.steps, "last step of the curve");
    coverage->add_option("--uavs", opt.uavs, "independently moving agents");
    coverage->add_flag("--naive", opt.naive, "add the independence-assuming curve");
    add_threads(coverage);
    add_output(coverage);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo coverage estimate");
    add_grid(simulate);
    add_start(simulate);
    simulate->add_option("--steps", opt.steps, "last step of the curve");
    simulate->add_option("--uavs", opt.uavs, "independently moving agents");
    simulate->add_option("--replications", opt.replications, "Monte Carlo replications");
    simulate->add_option("--seed", opt.seed, "RNG seed");
    simulate->add_flag("--first-arrivals", opt.first_arrivals,
                       "include per-state first-arrival counts (json only)");
    add_threads(simulate);
    add_output(simulate);

    CLI::App* compare = app.add_subcommand("compare", "exact vs naive vs Monte Carlo table");
    add_grid(compare);
    add_start(compare);
    compare->add_option("--steps", opt.steps, "last step of the curve");
    compare->add_option("--replications", opt.replications, "Monte Carlo replications");
    compare->add_option("--seed", opt.seed, "RNG seed");
    add_threads(compare);
    add_output(compare);

    CLI::App* dependence = app.add_subcommand("dependence", "coverage-event dependence report");
    add_grid(dependence);
    add_start(dependence);
    dependence->add_option("--cell", cell_text, "target cell x,y[,z]")->required();
    dependence->add_option("--time", opt.time, "time index of the first event");
    dependence->add_flag("--successive", opt.successive,
                         "check the successive-steps events instead of the two-step pair");
    add_output(dependence);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opt.subcommand = app.get_subcommands().front()->get_name();
    try {
        if (!start_cell_text.empty()) {
            opt.start_cell = gridwalk::cli::parse_cell_arg(start_cell_text);
        }
        if (!cell_text.empty()) {
            opt.cell = gridwalk::cli::parse_cell_arg(cell_text);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "gridwalk: " << e.what() << '\n';
        return 2;
    }

    return gridwalk::cli::run(opt, std::cout, std::cerr);
}
