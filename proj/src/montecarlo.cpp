#include "gridwalk/montecarlo.hpp"

#include "gridwalk/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridwalk {

namespace {

constexpr std::int64_t kRepsPerBlock = 1024;
constexpr double kBruteForceBudget = 1e8;

// SplitMix64 finalizer over (seed, replication). Gives every replication its
// own well-separated engine seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t replication) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (replication + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform in [0,1) from the top 53 bits. std::uniform_real_distribution is
// implementation-defined; this is not.
double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class VisitedSet {
public:
    explicit VisitedSet(int states)
        : words_(static_cast<std::size_t>(states + 63) / 64, 0) {}

    void reset() { std::fill(words_.begin(), words_.end(), 0); }

    // Returns true when the state was not yet visited.
    bool mark(int state0) {
        const std::size_t w = static_cast<std::size_t>(state0) / 64;
        const std::uint64_t bit = 1ULL << (static_cast<unsigned>(state0) % 64);
        if (words_[w] & bit) {
            return false;
        }
        words_[w] |= bit;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

int sample_cumulative(const std::vector<double>& cumulative, double u) {
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t idx = std::min(static_cast<std::size_t>(it - cumulative.begin()),
                                     cumulative.size() - 1);
    return static_cast<int>(idx);
}

// Inversion over the sparse row; rows have at most 2*dims entries.
int sample_step(const TransitionMatrix& matrix, int state0, double u) {
    const auto cols = matrix.row_cols(state0 + 1);
    const auto probs = matrix.row_probs(state0 + 1);
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < probs.size(); ++k) {
        acc += probs[k];
        if (u < acc) {
            return cols[k];
        }
    }
    return cols[probs.size() - 1];
}

} // namespace

SimResult simulate_coverage(const ChainModel& model, const SimConfig& cfg) {
    if (cfg.n_max < 0) {
        throw std::domain_error("n_max must be nonnegative, got " + std::to_string(cfg.n_max));
    }
    if (cfg.replications < 1) {
        throw std::domain_error("replication count must be at least 1, got " +
                                std::to_string(cfg.replications));
    }
    if (cfg.uav_count < 1) {
        throw std::domain_error("uav count must be at least 1, got " +
                                std::to_string(cfg.uav_count));
    }

    const int states = model.transition.size();
    const std::size_t steps = static_cast<std::size_t>(cfg.n_max) + 1;
    const std::int64_t block_count = (cfg.replications + kRepsPerBlock - 1) / kRepsPerBlock;

    const auto start = model.start.data();
    std::vector<double> start_cumulative(start.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < start.size(); ++i) {
        acc += start[i];
        start_cumulative[i] = acc;
    }

    // Covered-state counts are integers, so the block sums below stay exact
    // and a degenerate step (every replication covering the same count) gets
    // a mean equal to the exact value and a standard error of exactly zero.
    // Blocks are reduced in block order afterwards; the first-arrival counts
    // are integers too, so their merge order does not matter.
    std::vector<std::vector<double>> block_sum(
        static_cast<std::size_t>(block_count), std::vector<double>(steps, 0.0));
    std::vector<std::vector<double>> block_sumsq(
        static_cast<std::size_t>(block_count), std::vector<double>(steps, 0.0));
    std::vector<std::vector<std::int64_t>> arrivals;
    std::mutex arrivals_mutex;
    if (cfg.track_first_arrivals) {
        arrivals.assign(static_cast<std::size_t>(states), std::vector<std::int64_t>(steps, 0));
    }

    parallel_for_blocks(static_cast<int>(block_count), cfg.threads, [&](int b) {
        std::vector<double>& sum = block_sum[static_cast<std::size_t>(b)];
        std::vector<double>& sumsq = block_sumsq[static_cast<std::size_t>(b)];
        std::vector<std::vector<std::int64_t>> local_arrivals;
        if (cfg.track_first_arrivals) {
            local_arrivals.assign(static_cast<std::size_t>(states),
                                  std::vector<std::int64_t>(steps, 0));
        }

        VisitedSet visited(states);
        std::vector<int> agents(static_cast<std::size_t>(cfg.uav_count));
        const std::int64_t rep_begin = static_cast<std::int64_t>(b) * kRepsPerBlock;
        const std::int64_t rep_end = std::min(cfg.replications, rep_begin + kRepsPerBlock);

        for (std::int64_t rep = rep_begin; rep < rep_end; ++rep) {
            std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(rep)));
            visited.reset();
            int covered = 0;

            for (int a = 0; a < cfg.uav_count; ++a) {
                const int s0 = sample_cumulative(start_cumulative, u01(rng));
                agents[static_cast<std::size_t>(a)] = s0;
                if (visited.mark(s0)) {
                    ++covered;
                    if (cfg.track_first_arrivals) {
                        ++local_arrivals[static_cast<std::size_t>(s0)][0];
                    }
                }
            }
            sum[0] += covered;
            sumsq[0] += static_cast<double>(covered) * covered;

            for (int t = 1; t <= cfg.n_max; ++t) {
                for (int a = 0; a < cfg.uav_count; ++a) {
                    int& s = agents[static_cast<std::size_t>(a)];
                    s = sample_step(model.transition, s, u01(rng));
                    if (visited.mark(s)) {
                        ++covered;
                        if (cfg.track_first_arrivals) {
                            ++local_arrivals[static_cast<std::size_t>(s)]
                                            [static_cast<std::size_t>(t)];
                        }
                    }
                }
                sum[static_cast<std::size_t>(t)] += covered;
                sumsq[static_cast<std::size_t>(t)] += static_cast<double>(covered) * covered;
            }
        }

        if (cfg.track_first_arrivals) {
            std::lock_guard<std::mutex> lock(arrivals_mutex);
            for (std::size_t r = 0; r < arrivals.size(); ++r) {
                for (std::size_t t = 0; t < steps; ++t) {
                    arrivals[r][t] += local_arrivals[r][t];
                }
            }
        }
    });

    SimResult result;
    result.seed = cfg.seed;
    result.replications = cfg.replications;
    result.uav_count = cfg.uav_count;
    result.curve.method = Method::MonteCarlo;
    result.curve.uav_count = cfg.uav_count;
    result.curve.values.assign(steps, 0.0);
    result.std_error.assign(steps, 0.0);
    result.first_arrivals = std::move(arrivals);

    const double r_count = static_cast<double>(cfg.replications);
    for (std::size_t t = 0; t < steps; ++t) {
        double s1 = 0.0;
        double s2 = 0.0;
        for (std::int64_t b = 0; b < block_count; ++b) {
            s1 += block_sum[static_cast<std::size_t>(b)][t];
            s2 += block_sumsq[static_cast<std::size_t>(b)][t];
        }
        result.curve.values[t] = s1 / r_count / states;
        if (cfg.replications > 1) {
            const double variance = std::max(0.0, (s2 - s1 * s1 / r_count) / (r_count - 1.0));
            result.std_error[t] = std::sqrt(variance / r_count) / states;
        }
    }
    return result;
}

CoverageCurve brute_force_coverage(const ChainModel& model, int n_max) {
    if (n_max < 0) {
        throw std::domain_error("n_max must be nonnegative, got " + std::to_string(n_max));
    }
    const int states = model.transition.size();
    const double bound =
        static_cast<double>(states) *
        std::pow(static_cast<double>(model.transition.max_row_nnz()), static_cast<double>(n_max));
    if (!(bound <= kBruteForceBudget)) {
        throw ResourceLimitError("brute-force enumeration would cost about " +
                                 std::to_string(bound) + " path steps, over the 1e8 budget");
    }

    std::vector<double> expected(static_cast<std::size_t>(n_max) + 1, 0.0);
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(states), 0);
    int covered = 0;

    // Depth-first over all continuations; each prefix of length t contributes
    // weight * covered to step t. Children weights sum to the prefix weight,
    // so every step's total is an exact expectation.
    auto walk = [&](auto&& self, int state0, int t, double weight) -> void {
        expected[static_cast<std::size_t>(t)] += weight * covered;
        if (t == n_max) {
            return;
        }
        const auto cols = model.transition.row_cols(state0 + 1);
        const auto probs = model.transition.row_probs(state0 + 1);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const int next = cols[k];
            const bool fresh = !visited[static_cast<std::size_t>(next)];
            if (fresh) {
                visited[static_cast<std::size_t>(next)] = 1;
                ++covered;
            }
            self(self, next, t + 1, weight * probs[k]);
            if (fresh) {
                visited[static_cast<std::size_t>(next)] = 0;
                --covered;
            }
        }
    };

    const auto start = model.start.data();
    for (int s = 0; s < states; ++s) {
        const double p0 = start[static_cast<std::size_t>(s)];
        if (p0 == 0.0) {
            continue;
        }
        visited[static_cast<std::size_t>(s)] = 1;
        covered = 1;
        walk(walk, s, 0, p0);
        visited[static_cast<std::size_t>(s)] = 0;
        covered = 0;
    }

    CoverageCurve curve;
    curve.method = Method::Exact;
    curve.values.resize(expected.size());
    for (std::size_t t = 0; t < expected.size(); ++t) {
        curve.values[t] = expected[t] / states;
    }
    return curve;
}

} // namespace gridwalk
