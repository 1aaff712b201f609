#include "gridwalk/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace gridwalk {

namespace {

constexpr double kSumTolerance = 1e-12;

void check_index(int value, int limit, const char* what) {
    if (value < 1 || value > limit) {
        throw std::domain_error(std::string(what) + " " + std::to_string(value) +
                                " is outside 1.." + std::to_string(limit));
    }
}

} // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("distribution must not be empty");
    }
    double sum = 0.0;
    for (const double p : probs_) {
        if (!(p >= 0.0)) {
            throw std::invalid_argument("distribution entry " + std::to_string(p) +
                                        " is negative or NaN");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw std::invalid_argument("distribution sums to " + std::to_string(sum) +
                                    ", expected 1 within 1e-12");
    }
}

Distribution Distribution::unit(int size, int state) {
    check_index(state, size, "state");
    std::vector<double> probs(static_cast<std::size_t>(size), 0.0);
    probs[static_cast<std::size_t>(state - 1)] = 1.0;
    return Distribution(std::move(probs));
}

Distribution Distribution::uniform(int size) {
    if (size < 1) {
        throw std::invalid_argument("distribution size must be positive");
    }
    return Distribution(std::vector<double>(static_cast<std::size_t>(size), 1.0 / size));
}

double Distribution::value(int state) const {
    check_index(state, size(), "state");
    return probs_[static_cast<std::size_t>(state - 1)];
}

TransitionMatrix::TransitionMatrix(int size, std::vector<std::int32_t> row_ptr,
                                   std::vector<std::int32_t> cols, std::vector<double> vals)
    : size_(size), row_ptr_(std::move(row_ptr)), cols_(std::move(cols)), vals_(std::move(vals)) {
    if (size_ < 1) {
        throw std::invalid_argument("matrix size must be positive");
    }
    if (row_ptr_.size() != static_cast<std::size_t>(size_) + 1 || row_ptr_.front() != 0 ||
        row_ptr_.back() != static_cast<std::int32_t>(cols_.size()) ||
        cols_.size() != vals_.size()) {
        throw std::invalid_argument("inconsistent CSR arrays");
    }

    std::vector<std::int32_t> indegree(static_cast<std::size_t>(size_), 0);
    for (int r = 0; r < size_; ++r) {
        const std::int32_t begin = row_ptr_[static_cast<std::size_t>(r)];
        const std::int32_t end = row_ptr_[static_cast<std::size_t>(r) + 1];
        if (begin > end) {
            throw std::invalid_argument("CSR row pointers must be non-decreasing");
        }
        double sum = 0.0;
        for (std::int32_t k = begin; k < end; ++k) {
            const std::int32_t c = cols_[static_cast<std::size_t>(k)];
            if (c < 0 || c >= size_) {
                throw std::invalid_argument("CSR column out of range");
            }
            if (k > begin && c <= cols_[static_cast<std::size_t>(k) - 1]) {
                throw std::invalid_argument("CSR columns must be strictly increasing per row");
            }
            const double v = vals_[static_cast<std::size_t>(k)];
            if (!(v >= 0.0 && v <= 1.0)) {
                throw std::invalid_argument("transition probability " + std::to_string(v) +
                                            " is outside [0,1]");
            }
            sum += v;
            ++indegree[static_cast<std::size_t>(c)];
        }
        if (std::abs(sum - 1.0) > kSumTolerance) {
            throw std::invalid_argument("row " + std::to_string(r + 1) + " sums to " +
                                        std::to_string(sum) + ", expected 1 within 1e-12");
        }
        max_row_nnz_ = std::max(max_row_nnz_, static_cast<int>(end - begin));
    }

    // Transposed gather mirror: row t of the ELL lists the in-edges of t in
    // ascending source order. Padding points a zero weight at the row itself.
    gather_.rows = size_;
    gather_.width = std::max(1, *std::max_element(indegree.begin(), indegree.end()));
    const std::size_t n = static_cast<std::size_t>(size_);
    gather_.cols.resize(static_cast<std::size_t>(gather_.width) * n);
    gather_.vals.assign(static_cast<std::size_t>(gather_.width) * n, 0.0);
    for (std::int32_t t = 0; t < size_; ++t) {
        for (std::int32_t j = 0; j < gather_.width; ++j) {
            gather_.cols[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(t)] = t;
        }
    }
    std::vector<std::int32_t> fill(n, 0);
    for (int s = 0; s < size_; ++s) {
        for (std::int32_t k = row_ptr_[static_cast<std::size_t>(s)];
             k < row_ptr_[static_cast<std::size_t>(s) + 1]; ++k) {
            const std::size_t t = static_cast<std::size_t>(cols_[static_cast<std::size_t>(k)]);
            const std::size_t slot = static_cast<std::size_t>(fill[t]++);
            gather_.cols[slot * n + t] = static_cast<std::int32_t>(s);
            gather_.vals[slot * n + t] = vals_[static_cast<std::size_t>(k)];
        }
    }
}

void TransitionMatrix::check_state(int state, const char* what) const {
    check_index(state, size_, what);
}

double TransitionMatrix::entry(int from, int to) const {
    check_state(from, "row state");
    check_state(to, "column state");
    const auto cols = row_cols(from);
    const auto it = std::lower_bound(cols.begin(), cols.end(), to - 1);
    if (it == cols.end() || *it != to - 1) {
        return 0.0;
    }
    return row_probs(from)[static_cast<std::size_t>(it - cols.begin())];
}

int TransitionMatrix::row_nnz(int from) const {
    check_state(from, "row state");
    return static_cast<int>(row_ptr_[static_cast<std::size_t>(from)] -
                            row_ptr_[static_cast<std::size_t>(from) - 1]);
}

std::span<const std::int32_t> TransitionMatrix::row_cols(int from) const {
    check_state(from, "row state");
    const std::size_t begin = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(from) - 1]);
    const std::size_t end = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(from)]);
    return {cols_.data() + begin, end - begin};
}

std::span<const double> TransitionMatrix::row_probs(int from) const {
    check_state(from, "row state");
    const std::size_t begin = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(from) - 1]);
    const std::size_t end = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(from)]);
    return {vals_.data() + begin, end - begin};
}

ChainModel::ChainModel(GridSpec spec_in, TransitionMatrix transition_in, Distribution start_in)
    : spec(std::move(spec_in)), transition(std::move(transition_in)), start(std::move(start_in)) {
    if (transition.size() != spec.state_count() || start.size() != spec.state_count()) {
        throw std::invalid_argument("chain components disagree on the state count");
    }
}

Distribution starting_distribution(const GridSpec& spec, const StartSpec& start) {
    if (start.kind == StartSpec::Kind::Uniform) {
        return Distribution::uniform(spec.state_count());
    }
    return Distribution::unit(spec.state_count(), start.state);
}

TransitionMatrix build_transition(const GridSpec& spec) {
    const int n = spec.state_count();
    std::vector<std::int32_t> row_ptr;
    row_ptr.reserve(static_cast<std::size_t>(n) + 1);
    row_ptr.push_back(0);
    std::vector<std::int32_t> cols;
    std::vector<double> vals;
    cols.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(spec.max_degree()));
    vals.reserve(cols.capacity());

    for (int s = 1; s <= n; ++s) {
        std::vector<int> nb = spec.neighbors(s);
        const double degree = static_cast<double>(nb.size());
        std::sort(nb.begin(), nb.end());
        // Duplicate entries (boundless axes of length 2) merge into one
        // column with the summed multiplicity.
        for (std::size_t i = 0; i < nb.size();) {
            std::size_t j = i;
            while (j < nb.size() && nb[j] == nb[i]) {
                ++j;
            }
            cols.push_back(static_cast<std::int32_t>(nb[i] - 1));
            vals.push_back(static_cast<double>(j - i) / degree);
            i = j;
        }
        row_ptr.push_back(static_cast<std::int32_t>(cols.size()));
    }
    return TransitionMatrix(n, std::move(row_ptr), std::move(cols), std::move(vals));
}

ChainModel make_chain(const GridSpec& spec, const StartSpec& start) {
    return ChainModel(spec, build_transition(spec), starting_distribution(spec, start));
}

Distribution propagate(const ChainModel& model, int steps) {
    if (steps < 0) {
        throw std::domain_error("step count must be nonnegative, got " + std::to_string(steps));
    }
    const auto start = model.start.data();
    std::vector<double> x(start.begin(), start.end());
    std::vector<double> y(x.size());
    for (int t = 0; t < steps; ++t) {
        kernels::spmv(model.transition.gather(), x.data(), y.data());
        x.swap(y);
    }
    return Distribution(std::move(x));
}

double two_step_probability(const ChainModel& model, int from, int to) {
    const int n = model.transition.size();
    check_index(from, n, "state");
    check_index(to, n, "state");
    std::vector<double> row(static_cast<std::size_t>(n), 0.0);
    const auto cols = model.transition.row_cols(from);
    const auto probs = model.transition.row_probs(from);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        row[static_cast<std::size_t>(cols[k])] = probs[k];
    }
    std::vector<double> result(static_cast<std::size_t>(n));
    kernels::spmv(model.transition.gather(), row.data(), result.data());
    return result[static_cast<std::size_t>(to - 1)];
}

TransitionMatrix make_absorbing(const TransitionMatrix& matrix, int r) {
    const int n = matrix.size();
    check_index(r, n, "absorbing state");
    std::vector<std::int32_t> row_ptr;
    row_ptr.reserve(static_cast<std::size_t>(n) + 1);
    row_ptr.push_back(0);
    std::vector<std::int32_t> cols;
    std::vector<double> vals;
    for (int s = 1; s <= n; ++s) {
        if (s == r) {
            cols.push_back(static_cast<std::int32_t>(r - 1));
            vals.push_back(1.0);
        } else {
            const auto c = matrix.row_cols(s);
            const auto v = matrix.row_probs(s);
            cols.insert(cols.end(), c.begin(), c.end());
            vals.insert(vals.end(), v.begin(), v.end());
        }
        row_ptr.push_back(static_cast<std::int32_t>(cols.size()));
    }
    return TransitionMatrix(n, std::move(row_ptr), std::move(cols), std::move(vals));
}

ChainModel make_absorbing(const ChainModel& model, int r) {
    return ChainModel(model.spec, make_absorbing(model.transition, r), model.start);
}

} // namespace gridwalk
