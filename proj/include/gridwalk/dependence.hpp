#pragma once

#include "gridwalk/chain.hpp"

#include <utility>

namespace gridwalk {

enum class Verdict { Independent, Dependent, UndefinedConditional };

const char* verdict_name(Verdict verdict);

/// Outcome of the pairwise check on the events {X_m = z} and {X_{m+2} = z}.
/// The events are independent exactly when (1 - p_m) * P^2(z,z) equals
/// sum over i != z of pi_m(i) * P^2(i,z); those two sides are kept verbatim
/// so near-ties stay inspectable.
struct DependenceReport {
    int state = 0; // z
    int time = 0;  // m
    double p_m = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    Verdict verdict = Verdict::Independent;
};

/// Propagates pi_m through the original chain and compares the two sides
/// above. p_m = 0 (within 1e-12) means the conditional law given {X_m = z}
/// does not exist, reported as UndefinedConditional; p_m = 1 or
/// |lhs - rhs| <= 1e-10 is Independent; anything else is Dependent.
DependenceReport check_two_step_dependence(const ChainModel& model, int z, int m);

/// Events {X_t = z} and {X_{t+1} = z}: their joint probability is always 0
/// because the walk never stays put, so they are Dependent exactly when both
/// pi_t(z) > 0 and pi_{t+1}(z) > 0.
Verdict check_successive_dependence(const ChainModel& model, int z, int t);

/// For events A, B given by (P(A), P(B), P(A and B)), returns whether A and B
/// are independent and whether their complements are, each within 1e-12.
/// The two answers agree by the complement identity; tests exercise that.
/// Throws std::domain_error on an infeasible triple.
std::pair<bool, bool> complement_independence_check(double pA, double pB, double pAB);

} // namespace gridwalk
