#include "gridwalk/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridwalk {

namespace {

constexpr double kProbabilityTolerance = 1e-12;
constexpr double kVerdictTolerance = 1e-10;

void check_state(const ChainModel& model, int z) {
    if (z < 1 || z > model.transition.size()) {
        throw std::domain_error("state " + std::to_string(z) + " outside 1.." +
                                std::to_string(model.transition.size()));
    }
}

void check_time(int t, const char* what) {
    if (t < 0) {
        throw std::domain_error(std::string(what) + " must be nonnegative, got " +
                                std::to_string(t));
    }
}

// Column z of P^2, computed as P applied to column z of P. The gather layout
// already stores columns of P, so reading its row z costs one slot scan.
std::vector<double> two_step_column(const TransitionMatrix& matrix, int z) {
    const int states = matrix.size();
    const kernels::EllMatrix& gather = matrix.gather();

    std::vector<double> column(static_cast<std::size_t>(states), 0.0);
    for (int slot = 0; slot < gather.width; ++slot) {
        const std::size_t at = static_cast<std::size_t>(slot) * states + (z - 1);
        column[static_cast<std::size_t>(gather.cols[at])] += gather.vals[at];
    }

    std::vector<double> result(static_cast<std::size_t>(states), 0.0);
    for (int i = 1; i <= states; ++i) {
        const auto cols = matrix.row_cols(i);
        const auto probs = matrix.row_probs(i);
        double acc = 0.0;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            acc += probs[k] * column[static_cast<std::size_t>(cols[k])];
        }
        result[static_cast<std::size_t>(i - 1)] = acc;
    }
    return result;
}

} // namespace

const char* verdict_name(Verdict verdict) {
    switch (verdict) {
    case Verdict::Independent:
        return "Independent";
    case Verdict::Dependent:
        return "Dependent";
    case Verdict::UndefinedConditional:
        return "UndefinedConditional";
    }
    return "Independent";
}

DependenceReport check_two_step_dependence(const ChainModel& model, int z, int m) {
    check_state(model, z);
    check_time(m, "m");

    const Distribution pi_m = propagate(model, m);
    const std::vector<double> p2_col = two_step_column(model.transition, z);
    const auto pi = pi_m.data();

    DependenceReport report;
    report.state = z;
    report.time = m;
    report.p_m = pi_m.value(z);
    report.lhs = (1.0 - report.p_m) * p2_col[static_cast<std::size_t>(z - 1)];
    double rhs = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (static_cast<int>(i) != z - 1) {
            rhs += pi[i] * p2_col[i];
        }
    }
    report.rhs = rhs;

    // A vanishing p_m leaves the conditional given {X_m = z} undefined; that
    // takes precedence over the trivial-independence reading of p_m in {0,1}.
    if (report.p_m <= kProbabilityTolerance) {
        report.verdict = Verdict::UndefinedConditional;
    } else if (std::abs(report.p_m - 1.0) <= kProbabilityTolerance ||
               std::abs(report.lhs - report.rhs) <= kVerdictTolerance) {
        report.verdict = Verdict::Independent;
    } else {
        report.verdict = Verdict::Dependent;
    }
    return report;
}

Verdict check_successive_dependence(const ChainModel& model, int z, int t) {
    check_state(model, z);
    check_time(t, "t");

    // P(X_t = z, X_{t+1} = z) = 0 since the diagonal of P is zero, so the
    // events are dependent exactly when both marginals are positive.
    const double p_t = propagate(model, t).value(z);
    const double p_next = propagate(model, t + 1).value(z);
    return (p_t > 0.0 && p_next > 0.0) ? Verdict::Dependent : Verdict::Independent;
}

std::pair<bool, bool> complement_independence_check(double pA, double pB, double pAB) {
    const auto feasible = [](double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; };
    if (!feasible(pA) || !feasible(pB) || !std::isfinite(pAB) || pAB < 0.0 ||
        pAB > std::min(pA, pB) || pA + pB - pAB > 1.0) {
        throw std::domain_error("infeasible probability triple (" + std::to_string(pA) + ", " +
                                std::to_string(pB) + ", " + std::to_string(pAB) + ")");
    }

    const bool events = std::abs(pAB - pA * pB) <= kProbabilityTolerance;
    const double p_both_complements = 1.0 - pA - pB + pAB;
    const bool complements =
        std::abs(p_both_complements - (1.0 - pA) * (1.0 - pB)) <= kProbabilityTolerance;
    return {events, complements};
}

} // namespace gridwalk
