#include "gridwalk/coverage.hpp"

#include "gridwalk/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridwalk {

namespace {

// States per parallel block. Fixed so the reduction order, and with it the
// result, is independent of the worker count.
constexpr int kStatesPerBlock = 64;

double powi(double base, int exponent) {
    double result = 1.0;
    double factor = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) {
            result *= factor;
        }
        factor *= factor;
    }
    return result;
}

// Streams P(A_r <= n) for n = 0..n_max. Equivalent to propagating
// make_absorbing(P, r) and reading component r: mass entering r is moved into
// an accumulator instead of parking on the absorbing diagonal.
template <typename Visit>
void arrival_cdf(const ChainModel& model, int r, int n_max, Visit&& visit) {
    const auto start = model.start.data();
    std::vector<double> x(start.begin(), start.end());
    std::vector<double> y(x.size());
    const std::size_t ri = static_cast<std::size_t>(r - 1);
    double absorbed = x[ri];
    x[ri] = 0.0;
    visit(0, absorbed);
    for (int t = 1; t <= n_max; ++t) {
        kernels::spmv(model.transition.gather(), x.data(), y.data());
        x.swap(y);
        absorbed += x[ri];
        x[ri] = 0.0;
        visit(t, absorbed);
    }
}

void check_n_max(int n_max) {
    if (n_max < 0) {
        throw std::domain_error("n_max must be nonnegative, got " + std::to_string(n_max));
    }
}

} // namespace

double coverage_probability_exact(const ChainModel& model, int r, int n) {
    if (r < 1 || r > model.transition.size()) {
        throw std::domain_error("state " + std::to_string(r) + " is outside 1.." +
                                std::to_string(model.transition.size()));
    }
    check_n_max(n);
    double result = 0.0;
    arrival_cdf(model, r, n, [&](int, double p) { result = p; });
    return result;
}

CoverageCurve expected_coverage_multi(const ChainModel& model, int n_max, int uav_count,
                                      int threads) {
    check_n_max(n_max);
    if (uav_count < 1) {
        throw std::domain_error("uav count must be at least 1, got " +
                                std::to_string(uav_count));
    }
    const int n = model.transition.size();
    const int block_count = (n + kStatesPerBlock - 1) / kStatesPerBlock;
    std::vector<std::vector<double>> partial(
        static_cast<std::size_t>(block_count),
        std::vector<double>(static_cast<std::size_t>(n_max) + 1, 0.0));

    parallel_for_blocks(block_count, threads, [&](int b) {
        std::vector<double>& sums = partial[static_cast<std::size_t>(b)];
        const int r_begin = b * kStatesPerBlock + 1;
        const int r_end = std::min(n, r_begin + kStatesPerBlock - 1);
        for (int r = r_begin; r <= r_end; ++r) {
            arrival_cdf(model, r, n_max, [&](int t, double p) {
                sums[static_cast<std::size_t>(t)] +=
                    uav_count == 1 ? p : 1.0 - powi(1.0 - p, uav_count);
            });
        }
    });

    CoverageCurve curve;
    curve.method = Method::Exact;
    curve.uav_count = uav_count;
    curve.values.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (const std::vector<double>& sums : partial) {
        for (std::size_t t = 0; t < curve.values.size(); ++t) {
            curve.values[t] += sums[t];
        }
    }
    for (double& v : curve.values) {
        v /= n;
    }
    return curve;
}

CoverageCurve expected_coverage_exact(const ChainModel& model, int n_max, int threads) {
    return expected_coverage_multi(model, n_max, 1, threads);
}

CoverageCurve expected_coverage_naive(const ChainModel& model, int n_max) {
    check_n_max(n_max);
    const std::size_t n = static_cast<std::size_t>(model.transition.size());
    const auto start = model.start.data();
    std::vector<double> x(start.begin(), start.end());
    std::vector<double> y(n);
    std::vector<double> not_visited(n, 1.0);

    CoverageCurve curve;
    curve.method = Method::Naive;
    curve.values.reserve(static_cast<std::size_t>(n_max) + 1);

    auto record = [&] {
        kernels::complement_product(n, x.data(), not_visited.data());
        double covered = 0.0;
        for (const double q : not_visited) {
            covered += 1.0 - q;
        }
        curve.values.push_back(covered / static_cast<double>(n));
    };

    record();
    for (int t = 1; t <= n_max; ++t) {
        kernels::spmv(model.transition.gather(), x.data(), y.data());
        x.swap(y);
        record();
    }
    return curve;
}

} // namespace gridwalk
