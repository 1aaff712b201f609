#pragma once

#include "gridwalk/kernels.hpp"
#include "gridwalk/lattice.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gridwalk {

/// Probability row vector over the state space. Entries are validated to be
/// nonnegative and to sum to 1 within 1e-12.
class Distribution {
public:
    explicit Distribution(std::vector<double> probs);

    static Distribution unit(int size, int state);
    static Distribution uniform(int size);

    int size() const noexcept { return static_cast<int>(probs_.size()); }

    /// Probability of a 1-based state.
    double value(int state) const;

    /// Raw 0-based storage.
    std::span<const double> data() const noexcept { return probs_; }

private:
    std::vector<double> probs_;
};

struct StartSpec {
    enum class Kind { Deterministic, Uniform };

    Kind kind = Kind::Uniform;
    int state = 0;

    static StartSpec deterministic(int state) { return {Kind::Deterministic, state}; }
    static StartSpec uniform() { return {Kind::Uniform, 0}; }
};

/// Row-stochastic sparse matrix. Canonical storage is CSR with sorted columns;
/// a transposed padded-ELL mirror drives the x -> x*P propagation kernels.
class TransitionMatrix {
public:
    /// Takes CSR arrays with 0-based, per-row sorted, duplicate-free columns.
    /// Validates shape, entry range [0,1] and row sums (1 within 1e-12).
    TransitionMatrix(int size, std::vector<std::int32_t> row_ptr,
                     std::vector<std::int32_t> cols, std::vector<double> vals);

    int size() const noexcept { return size_; }

    /// Entry P[from][to], 1-based; 0.0 when the pair is not adjacent.
    double entry(int from, int to) const;

    int row_nnz(int from) const;
    std::span<const std::int32_t> row_cols(int from) const; // 0-based targets
    std::span<const double> row_probs(int from) const;
    int max_row_nnz() const noexcept { return max_row_nnz_; }

    /// Transposed gather layout consumed by kernels::spmv.
    const kernels::EllMatrix& gather() const noexcept { return gather_; }

private:
    void check_state(int state, const char* what) const;

    int size_;
    std::vector<std::int32_t> row_ptr_;
    std::vector<std::int32_t> cols_;
    std::vector<double> vals_;
    int max_row_nnz_ = 0;
    kernels::EllMatrix gather_;
};

/// The Markov chain M = (E, pi0, P).
struct ChainModel {
    ChainModel(GridSpec spec, TransitionMatrix transition, Distribution start);

    GridSpec spec;
    TransitionMatrix transition;
    Distribution start;
};

Distribution starting_distribution(const GridSpec& spec, const StartSpec& start);

/// Transition matrix of the symmetric random walk on the grid:
/// P[s][t] = multiplicity of t among neighbors(s), divided by the neighbor
/// count. The diagonal is zero; the walk keeps moving.
TransitionMatrix build_transition(const GridSpec& spec);

ChainModel make_chain(const GridSpec& spec, const StartSpec& start);

/// pi_n = pi_0 * P^n by n successive vector-matrix products.
Distribution propagate(const ChainModel& model, int steps);

/// (P^2)[from][to] from one sparse row-matrix product.
double two_step_probability(const ChainModel& model, int from, int to);

/// Copy of the matrix with row r replaced by the unit row e_r.
TransitionMatrix make_absorbing(const TransitionMatrix& matrix, int r);

/// Same model with state r made absorbing.
ChainModel make_absorbing(const ChainModel& model, int r);

} // namespace gridwalk
