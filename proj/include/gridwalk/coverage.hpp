#pragma once

#include "gridwalk/chain.hpp"

#include <vector>

namespace gridwalk {

enum class Method { Exact, Naive, MonteCarlo };

/// Expected coverage fraction per time step, values[n] for n = 0..n_max.
struct CoverageCurve {
    Method method = Method::Exact;
    int uav_count = 1;
    std::vector<double> values;

    int n_max() const noexcept { return static_cast<int>(values.size()) - 1; }
};

/// P(A_r <= n): the chance that state r has been visited within n steps,
/// read off the absorbing chain M_r.
double coverage_probability_exact(const ChainModel& model, int r, int n);

/// Exact expected coverage: the mean of P(A_r <= n) over all states r, one
/// absorbing propagation per state, each streaming the whole curve in one
/// pass. Deterministic for any thread count.
CoverageCurve expected_coverage_exact(const ChainModel& model, int n_max, int threads = 0);

/// The independence-assuming product formula. Wrong in general; kept as the
/// comparison reference.
CoverageCurve expected_coverage_naive(const ChainModel& model, int n_max);

/// Coverage by uav_count agents moving independently from the same start:
/// per state 1 - (1 - P(A_r <= n))^k.
CoverageCurve expected_coverage_multi(const ChainModel& model, int n_max, int uav_count,
                                      int threads = 0);

} // namespace gridwalk
