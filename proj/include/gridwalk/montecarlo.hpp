#pragma once

#include "gridwalk/chain.hpp"
#include "gridwalk/coverage.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gridwalk {

/// Thrown when a computation would exceed its enforced work bound.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SimConfig {
    int n_max = 0;
    std::int64_t replications = 1;
    int uav_count = 1;
    std::uint64_t seed = 0;
    int threads = 0;
    bool track_first_arrivals = false;
};

struct SimResult {
    CoverageCurve curve;                 // method MonteCarlo
    std::vector<double> std_error;       // per step, sample stddev / sqrt(R)
    /// first_arrivals[r-1][t] counts replications whose first visit to state
    /// r (by any agent) happened at step t. Empty unless tracked.
    std::vector<std::vector<std::int64_t>> first_arrivals;
    std::uint64_t seed = 0;
    std::int64_t replications = 0;
    int uav_count = 1;
};

/// Seeded rollouts of the walk: per replication, uav_count agents start from
/// independent draws of pi0 and move independently; the curve tracks the mean
/// fraction of distinct states visited. Replication i uses its own stream
/// derived from (seed, i), so results are bitwise reproducible and
/// independent of the worker count.
SimResult simulate_coverage(const ChainModel& model, const SimConfig& cfg);

/// Exact expected coverage by weighted enumeration of every path of length
/// n_max. Guarded: throws ResourceLimitError when
/// state_count * max_branching^n_max exceeds 1e8.
CoverageCurve brute_force_coverage(const ChainModel& model, int n_max);

} // namespace gridwalk
