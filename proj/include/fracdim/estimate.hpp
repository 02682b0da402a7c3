#pragma once

#include <span>
#include <vector>

#include "fracdim/mesh_count.hpp"

namespace fracdim {

/// A strictly decreasing list of mesh scales.
///
///   dyadic(j0, j1)        delta_j = 2^-j, exact
///   paper(k0, k1)         delta_k = 2^-(k+1)/2; exact for odd k, approx for even k
///   linear(d0, d1, n)     n equally spaced values from d0 down to d1, approx
struct Schedule {
    enum class Kind { dyadic, paper, linear };
    Kind kind = Kind::dyadic;
    unsigned j0 = 1, j1 = 1;  // dyadic / paper bounds
    double d0 = 0.0, d1 = 0.0;
    unsigned n = 0;

    static Schedule dyadic(unsigned j0, unsigned j1);
    static Schedule paper(unsigned k0, unsigned k1);
    static Schedule linear(double d0, double d1, unsigned n);
};

std::vector<Scalar> make_schedule(const Schedule& s);

/// 3 * 2^k + 1, exactly. DomainError for k = 0.
BigInt cover_count_formula(unsigned k);

/// Finite-stage dimension estimate 2 * log2(3 * 2^k + 1) / (k + 1): strictly
/// greater than 2 and decreasing toward 2. DomainError for k = 0.
double ratio_estimate(unsigned k);

struct RatioConvergence {
    unsigned k = 0;
    double value = 0.0;
};

/// Smallest k <= k_max with ratio_estimate(k) - 2 <= tolerance. In literal
/// mode, stops at the first k with ratio_estimate(k) >= 2 instead (always
/// k = 1). NonConvergenceError carries the last value when no k qualifies.
RatioConvergence converge_ratio(double tolerance, unsigned k_max, bool literal_rule = false);

struct FitResult {
    double slope = 0.0;       // the dimension estimate
    double intercept = 0.0;
    double r_squared = 0.0;
    int n_points = 0;
};

/// Ordinary least squares of log10(count) against -log10(delta). Requires at
/// least two distinct deltas from one mesh kind; any zero count is a
/// DomainError. r_squared is 1 when the total sum of squares is zero.
FitResult fit_loglog(std::span<const CountRecord> records);

}  // namespace fracdim
