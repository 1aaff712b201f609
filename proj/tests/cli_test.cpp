#include "gridwalk/cli.hpp"

#include "gridwalk/chain.hpp"
#include "gridwalk/coverage.hpp"
#include "gridwalk/io.hpp"
#include "gridwalk/lattice.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using namespace gridwalk;

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const cli::Options& options) {
    std::ostringstream out;
    std::ostringstream err;
    RunResult result;
    result.code = cli::run(options, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

cli::Options base_grid() {
    cli::Options opt;
    opt.width = 3;
    opt.depth = 3;
    return opt;
}

cli::Options center_coverage(int steps) {
    cli::Options opt = base_grid();
    opt.subcommand = "coverage";
    opt.start_cell = Coord{2, 2, 1};
    opt.steps = steps;
    return opt;
}

// Saves and restores one environment variable around a test block.
class EnvGuard {
public:
    explicit EnvGuard(const char* name) : name_(name) {
        if (const char* value = std::getenv(name)) {
            saved_ = value;
            had_value_ = true;
        }
    }
    ~EnvGuard() {
        if (had_value_) {
            setenv(name_, saved_.c_str(), 1);
        } else {
            unsetenv(name_);
        }
    }
    void set(const char* value) { setenv(name_, value, 1); }
    void clear() { unsetenv(name_); }

private:
    const char* name_;
    std::string saved_;
    bool had_value_ = false;
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("the matrix subcommand prints the library's own table") {
    cli::Options opt = base_grid();
    opt.subcommand = "matrix";
    const RunResult run = run_cli(opt);
    CHECK(run.code == 0);
    CHECK(run.err.empty());

    const TransitionMatrix matrix = build_transition(GridSpec(3, 3, 1, Borders::Bordered));
    CHECK(run.out == io::write_csv(io::matrix_table(matrix)));
    CHECK(run_cli(opt).out == run.out);

    SUBCASE("an absorbing state collapses its row to the diagonal") {
        opt.absorb = 5;
        const io::CsvTable table = io::read_csv(run_cli(opt).out);
        for (int to = 1; to <= 9; ++to) {
            CHECK(table.columns[static_cast<std::size_t>(to)][4] == (to == 5 ? 1.0 : 0.0));
        }
    }

    SUBCASE("json output parses back to the same matrix") {
        opt.format = "json";
        const nlohmann::json j = nlohmann::json::parse(run_cli(opt).out);
        const TransitionMatrix back = io::matrix_from_json(j);
        CHECK(back.entry(5, 2) == 0.25);
    }
}

TEST_CASE("the coverage subcommand reproduces the library curve bitwise") {
    const RunResult run = run_cli(center_coverage(12));
    CHECK(run.code == 0);

    const ChainModel model =
        make_chain(GridSpec(3, 3, 1, Borders::Bordered), StartSpec::deterministic(5));
    const CoverageCurve exact = expected_coverage_exact(model, 12);
    const io::CsvTable table = io::read_csv(run.out);
    REQUIRE(table.header == std::vector<std::string>{"step", "value"});
    REQUIRE(table.columns[1].size() == 13);
    for (std::size_t t = 0; t < 13; ++t) {
        CHECK(table.columns[1][t] == exact.values[t]);
    }

    SUBCASE("the naive column joins on request") {
        cli::Options opt = center_coverage(12);
        opt.naive = true;
        const io::CsvTable both = io::read_csv(run_cli(opt).out);
        CHECK(both.header == std::vector<std::string>{"step", "exact", "naive"});
        const CoverageCurve naive = expected_coverage_naive(model, 12);
        CHECK(both.columns[2][12] == naive.values[12]);
    }
}

TEST_CASE("the simulate subcommand echoes its parameters") {
    cli::Options opt = center_coverage(6);
    opt.subcommand = "simulate";
    opt.replications = 400;
    opt.seed = 9;
    const RunResult run = run_cli(opt);
    CHECK(run.code == 0);
    const io::CsvTable table = io::read_csv(run.out);
    CHECK(table.header == std::vector<std::string>{"step", "mc_mean", "mc_stderr"});
    CHECK(table.comments ==
          std::vector<std::string>{"seed=9", "replications=400", "uavs=1"});

    SUBCASE("first-arrival tracking needs json") {
        opt.first_arrivals = true;
        CHECK(run_cli(opt).code == 2);
        opt.format = "json";
        const RunResult tracked = run_cli(opt);
        CHECK(tracked.code == 0);
        const nlohmann::json j = nlohmann::json::parse(tracked.out);
        REQUIRE(j.contains("first_arrivals"));
        CHECK(j.at("first_arrivals").size() == 9);
        CHECK(j.at("mc_mean").size() == 7);
    }
}

TEST_CASE("the compare subcommand is reproducible byte for byte") {
    cli::Options opt = center_coverage(10);
    opt.subcommand = "compare";
    opt.replications = 2000;
    opt.seed = 42;
    const RunResult a = run_cli(opt);
    const RunResult b = run_cli(opt);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const io::CsvTable table = io::read_csv(a.out);
    CHECK(table.header ==
          std::vector<std::string>{"step", "exact", "naive", "mc_mean", "mc_stderr"});
    CHECK(table.comments[3].rfind("summary max_abs_diff_naive=", 0) == 0);
}

TEST_CASE("the dependence subcommand reports verdict JSON") {
    cli::Options opt = base_grid();
    opt.subcommand = "dependence";
    opt.start_cell = Coord{2, 2, 1};
    opt.cell = Coord{1, 1, 1};
    opt.time = 2;
    const RunResult run = run_cli(opt);
    CHECK(run.code == 0);
    const nlohmann::json j = nlohmann::json::parse(run.out);
    CHECK(j.at("kind") == "two_step");
    CHECK(j.at("state") == 1);
    CHECK(j.at("verdict") == "Dependent");

    SUBCASE("successive checks return the bare verdict") {
        opt.cell = Coord{2, 2, 1};
        opt.time = 0;
        opt.successive = true;
        const nlohmann::json s = nlohmann::json::parse(run_cli(opt).out);
        CHECK(s.at("kind") == "successive");
        CHECK(s.at("state") == 5);
        CHECK(s.at("verdict") == "Independent");
    }
}

TEST_CASE("validation problems exit with code two") {
    SUBCASE("naive is single-agent") {
        cli::Options opt = center_coverage(5);
        opt.naive = true;
        opt.uavs = 2;
        const RunResult run = run_cli(opt);
        CHECK(run.code == 2);
        CHECK(run.err.rfind("gridwalk: ", 0) == 0);
    }
    SUBCASE("compare is single-agent") {
        cli::Options opt = center_coverage(5);
        opt.subcommand = "compare";
        opt.uavs = 3;
        CHECK(run_cli(opt).code == 2);
    }
    SUBCASE("dependence rejects csv") {
        cli::Options opt = base_grid();
        opt.subcommand = "dependence";
        opt.cell = Coord{1, 1, 1};
        opt.format = "csv";
        CHECK(run_cli(opt).code == 2);
    }
    SUBCASE("dependence needs a cell") {
        cli::Options opt = base_grid();
        opt.subcommand = "dependence";
        CHECK(run_cli(opt).code == 2);
    }
    SUBCASE("unknown subcommands are rejected") {
        cli::Options opt = base_grid();
        opt.subcommand = "walk";
        CHECK(run_cli(opt).code == 2);
    }
    SUBCASE("degenerate grids are rejected") {
        cli::Options opt = center_coverage(5);
        opt.width = 1;
        CHECK(run_cli(opt).code == 2);
    }
    SUBCASE("start flags conflict") {
        cli::Options opt = center_coverage(5);
        opt.start_uniform = true;
        CHECK(run_cli(opt).code == 2);
    }
    SUBCASE("start cells must lie inside the grid") {
        cli::Options opt = center_coverage(5);
        opt.start_cell = Coord{9, 9, 1};
        CHECK(run_cli(opt).code == 2);
    }
    SUBCASE("formats are csv or json") {
        cli::Options opt = center_coverage(5);
        opt.format = "xml";
        CHECK(run_cli(opt).code == 2);
    }
    SUBCASE("negative horizons are rejected") {
        cli::Options opt = center_coverage(-1);
        CHECK(run_cli(opt).code == 2);
    }
}

TEST_CASE("output lands in the requested file") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "gridwalk_cli_test_out.csv";
    cli::Options opt = center_coverage(8);
    const RunResult direct = run_cli(opt);

    opt.output = path.string();
    const RunResult to_file = run_cli(opt);
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    fs::remove(path);

    SUBCASE("unwritable paths exit with code four") {
        opt.output = "/nonexistent_gridwalk_dir/out.csv";
        const RunResult bad = run_cli(opt);
        CHECK(bad.code == 4);
        CHECK(bad.err.rfind("gridwalk: ", 0) == 0);
    }
}

TEST_CASE("the thread count can come from the environment") {
    EnvGuard guard("GRIDWALK_THREADS");
    cli::Options opt = center_coverage(10);

    guard.clear();
    const RunResult defaulted = run_cli(opt);

    guard.set("2");
    const RunResult from_env = run_cli(opt);
    CHECK(from_env.code == 0);
    CHECK(from_env.out == defaulted.out);

    cli::Options explicit_threads = opt;
    explicit_threads.threads = 2;
    guard.clear();
    CHECK(run_cli(explicit_threads).out == from_env.out);

    guard.set("abc");
    CHECK(run_cli(opt).code == 2);
    guard.set("-1");
    CHECK(run_cli(opt).code == 2);
}

TEST_CASE("cell arguments parse as x,y with optional z") {
    const Coord plane = cli::parse_cell_arg("2,3");
    CHECK(plane.x == 2);
    CHECK(plane.y == 3);
    CHECK(plane.z == 1);

    const Coord volume = cli::parse_cell_arg("1,2,3");
    CHECK(volume.x == 1);
    CHECK(volume.y == 2);
    CHECK(volume.z == 3);

    CHECK_THROWS_AS(cli::parse_cell_arg("2"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_cell_arg("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_cell_arg("1,2,3,4"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_cell_arg(""), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_cell_arg("1,"), std::invalid_argument);
}

} // TEST_SUITE
