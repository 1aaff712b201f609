#include "gridwalk/coverage.hpp"

#include "gridwalk/lattice.hpp"
#include "gridwalk/montecarlo.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace {

using namespace gridwalk;

ChainModel bordered_center_3x3() {
    return make_chain(GridSpec(3, 3, 1, Borders::Bordered), StartSpec::deterministic(5));
}

// Largest per-step difference against the brute-force path enumeration.
double max_gap(const CoverageCurve& got, const CoverageCurve& expect) {
    REQUIRE(got.values.size() == expect.values.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < got.values.size(); ++i) {
        worst = std::max(worst, std::abs(got.values[i] - expect.values[i]));
    }
    return worst;
}

} // namespace

TEST_SUITE("coverage") {

TEST_CASE("single-cell arrival probabilities match hand computations") {
    const ChainModel model = bordered_center_3x3();
    CHECK(coverage_probability_exact(model, 5, 0) == 1.0);
    CHECK(coverage_probability_exact(model, 1, 0) == 0.0);
    CHECK(coverage_probability_exact(model, 1, 1) == 0.0);
    CHECK(std::abs(coverage_probability_exact(model, 2, 1) - 0.25) <= 1e-12);

    const ChainModel two =
        make_chain(GridSpec(2, 2, 1, Borders::Bordered), StartSpec::deterministic(1));
    CHECK(std::abs(coverage_probability_exact(two, 2, 1) - 0.5) <= 1e-12);

    CHECK_THROWS_AS(coverage_probability_exact(model, 0, 1), std::domain_error);
    CHECK_THROWS_AS(coverage_probability_exact(model, 10, 1), std::domain_error);
    CHECK_THROWS_AS(coverage_probability_exact(model, 5, -1), std::domain_error);
}

TEST_CASE("expected coverage starts at the occupied fraction and grows") {
    const CoverageCurve curve = expected_coverage_exact(bordered_center_3x3(), 12);
    CHECK(curve.method == Method::Exact);
    CHECK(curve.uav_count == 1);
    CHECK(curve.n_max() == 12);
    CHECK(std::abs(curve.values[0] - 1.0 / 9.0) <= 1e-12);
    CHECK(std::abs(curve.values[1] - 2.0 / 9.0) <= 1e-12);
    for (int n = 1; n <= 12; ++n) {
        CHECK(curve.values[static_cast<std::size_t>(n)] >=
              curve.values[static_cast<std::size_t>(n) - 1]);
        CHECK(curve.values[static_cast<std::size_t>(n)] <= 1.0);
    }

    const ChainModel two =
        make_chain(GridSpec(2, 2, 1, Borders::Bordered), StartSpec::deterministic(1));
    const CoverageCurve small = expected_coverage_exact(two, 1);
    CHECK(std::abs(small.values[1] - 0.5) <= 1e-12);
}

TEST_CASE("per-cell arrival curves are CDFs") {
    const ChainModel model =
        make_chain(GridSpec(3, 4, 1, Borders::Boundless), StartSpec::uniform());
    for (int r = 1; r <= model.spec.state_count(); ++r) {
        double previous = 0.0;
        for (int n = 0; n <= 15; ++n) {
            const double p = coverage_probability_exact(model, r, n);
            CHECK(p >= previous);
            CHECK(p <= 1.0 + 1e-15);
            previous = p;
        }
    }
}

TEST_CASE("the independence shortcut agrees for the first two steps only") {
    const ChainModel models[] = {
        bordered_center_3x3(),
        make_chain(GridSpec(2, 2, 1, Borders::Bordered), StartSpec::deterministic(1)),
        make_chain(GridSpec(4, 3, 1, Borders::Boundless), StartSpec::deterministic(6)),
        make_chain(GridSpec(2, 3, 2, Borders::Bordered), StartSpec::deterministic(3)),
    };
    for (const ChainModel& model : models) {
        const CoverageCurve exact = expected_coverage_exact(model, 2);
        const CoverageCurve naive = expected_coverage_naive(model, 2);
        CHECK(naive.method == Method::Naive);
        CHECK(std::abs(exact.values[0] - naive.values[0]) <= 1e-12);
        CHECK(std::abs(exact.values[1] - naive.values[1]) <= 1e-12);
    }
}

TEST_CASE("the independence shortcut overshoots visibly by step ten") {
    const ChainModel model = bordered_center_3x3();
    const CoverageCurve exact = expected_coverage_exact(model, 10);
    const CoverageCurve naive = expected_coverage_naive(model, 10);
    const double gap = naive.values[10] - exact.values[10];
    CHECK(gap > 0.01);
    // Pinned on first run; the computation is deterministic.
    CHECK(std::abs(gap - 0.073774005486968552) <= 1e-9);
}

TEST_CASE("a single agent reproduces the base curve bit for bit") {
    const ChainModel model = bordered_center_3x3();
    const CoverageCurve base = expected_coverage_exact(model, 20);
    const CoverageCurve one = expected_coverage_multi(model, 20, 1);
    REQUIRE(one.values.size() == base.values.size());
    CHECK(one.uav_count == 1);
    for (std::size_t i = 0; i < base.values.size(); ++i) {
        CHECK(one.values[i] == base.values[i]);
    }
}

TEST_CASE("two agents from the center cover eleven thirty-sixths after one step") {
    const CoverageCurve two = expected_coverage_multi(bordered_center_3x3(), 1, 2);
    CHECK(std::abs(two.values[0] - 1.0 / 9.0) <= 1e-12);
    CHECK(std::abs(two.values[1] - 11.0 / 36.0) <= 1e-12);
}

TEST_CASE("more agents always cover at least as much") {
    const ChainModel model = bordered_center_3x3();
    CoverageCurve previous = expected_coverage_exact(model, 25);
    for (const int k : {2, 3, 5, 9}) {
        CoverageCurve curve = expected_coverage_multi(model, 25, k);
        CHECK(curve.uav_count == k);
        for (std::size_t i = 0; i < curve.values.size(); ++i) {
            CHECK(curve.values[i] + 1e-15 >= previous.values[i]);
            CHECK(curve.values[i] <= 1.0 + 1e-15);
        }
        previous = std::move(curve);
    }
}

TEST_CASE("exact curves match brute-force path enumeration on small grids") {
    struct Case {
        int width, depth;
        Borders borders;
    };
    const Case grids[] = {
        {2, 2, Borders::Bordered},  {2, 2, Borders::Boundless}, {2, 3, Borders::Bordered},
        {2, 3, Borders::Boundless}, {3, 3, Borders::Bordered},  {3, 3, Borders::Boundless},
    };
    for (const Case& g : grids) {
        const GridSpec spec(g.width, g.depth, 1, g.borders);
        std::vector<StartSpec> starts = {StartSpec::deterministic(1), StartSpec::uniform()};
        if (g.width == 3 && g.depth == 3) {
            starts.push_back(StartSpec::deterministic(5));
        }
        for (const StartSpec& start : starts) {
            CAPTURE(g.width);
            CAPTURE(g.depth);
            const ChainModel model = make_chain(spec, start);
            const CoverageCurve exact = expected_coverage_exact(model, 8);
            const CoverageCurve oracle = brute_force_coverage(model, 8);
            CHECK(max_gap(exact, oracle) <= 1e-12);
        }
    }
}

TEST_CASE("thread count does not change the result") {
    const ChainModel model =
        make_chain(GridSpec(5, 4, 1, Borders::Bordered), StartSpec::deterministic(7));
    const CoverageCurve serial = expected_coverage_exact(model, 30, 1);
    const CoverageCurve parallel = expected_coverage_exact(model, 30, 4);
    REQUIRE(serial.values.size() == parallel.values.size());
    for (std::size_t i = 0; i < serial.values.size(); ++i) {
        CHECK(serial.values[i] == parallel.values[i]);
    }

    const CoverageCurve multi_serial = expected_coverage_multi(model, 30, 4, 1);
    const CoverageCurve multi_parallel = expected_coverage_multi(model, 30, 4, 4);
    for (std::size_t i = 0; i < multi_serial.values.size(); ++i) {
        CHECK(multi_serial.values[i] == multi_parallel.values[i]);
    }
}

TEST_CASE("invalid horizons and agent counts are rejected") {
    const ChainModel model = bordered_center_3x3();
    CHECK_THROWS_AS(expected_coverage_exact(model, -1), std::domain_error);
    CHECK_THROWS_AS(expected_coverage_naive(model, -1), std::domain_error);
    CHECK_THROWS_AS(expected_coverage_multi(model, 5, 0), std::domain_error);
    CHECK_THROWS_AS(expected_coverage_multi(model, -2, 3), std::domain_error);
}

} // TEST_SUITE
