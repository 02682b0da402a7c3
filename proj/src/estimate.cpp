#include "fracdim/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fracdim {

Schedule Schedule::dyadic(unsigned j0, unsigned j1) {
    Schedule s;
    s.kind = Kind::dyadic;
    s.j0 = j0;
    s.j1 = j1;
    return s;
}

Schedule Schedule::paper(unsigned k0, unsigned k1) {
    Schedule s;
    s.kind = Kind::paper;
    s.j0 = k0;
    s.j1 = k1;
    return s;
}

Schedule Schedule::linear(double d0, double d1, unsigned n) {
    Schedule s;
    s.kind = Kind::linear;
    s.d0 = d0;
    s.d1 = d1;
    s.n = n;
    return s;
}

std::vector<Scalar> make_schedule(const Schedule& s) {
    std::vector<Scalar> out;
    switch (s.kind) {
        case Schedule::Kind::dyadic: {
            if (s.j1 < s.j0) throw ValidationError("dyadic schedule needs j0 <= j1");
            for (unsigned j = s.j0; j <= s.j1; ++j) {
                out.emplace_back(Dyadic(BigInt(1), j));
            }
            break;
        }
        case Schedule::Kind::paper: {
            if (s.j0 < 1) throw ValidationError("paper schedule starts at k = 1");
            if (s.j1 < s.j0) throw ValidationError("paper schedule needs k0 <= k1");
            for (unsigned k = s.j0; k <= s.j1; ++k) {
                if ((k + 1) % 2 == 0) {
                    out.emplace_back(Dyadic(BigInt(1), (k + 1) / 2));
                } else {
                    out.push_back(Scalar::approx(std::exp2(-0.5 * (k + 1))));
                }
            }
            break;
        }
        case Schedule::Kind::linear: {
            if (s.n < 2) throw ValidationError("linear schedule needs at least two values");
            if (!(s.d0 > s.d1) || !(s.d1 > 0.0)) {
                throw ValidationError("linear schedule needs d0 > d1 > 0");
            }
            for (unsigned i = 0; i < s.n; ++i) {
                double t = static_cast<double>(i) / static_cast<double>(s.n - 1);
                out.push_back(Scalar::approx(s.d0 + (s.d1 - s.d0) * t));
            }
            break;
        }
    }
    return out;
}

BigInt cover_count_formula(unsigned k) {
    if (k < 1) throw DomainError("cover count is defined for stages k >= 1");
    return (BigInt(3) << k) + 1;
}

double ratio_estimate(unsigned k) {
    if (k < 1) throw DomainError("ratio estimate is defined for stages k >= 1");
    // log2(3 * 2^k + 1) = k + log2(3 + 2^-k), stable for any k
    double log2_count = static_cast<double>(k) + std::log2(3.0 + std::exp2(-static_cast<double>(k)));
    return 2.0 * log2_count / (static_cast<double>(k) + 1.0);
}

RatioConvergence converge_ratio(double tolerance, unsigned k_max, bool literal_rule) {
    if (!literal_rule && !(tolerance > 0.0)) {
        throw ValidationError("tolerance must be positive");
    }
    if (k_max < 1) throw ValidationError("k_max must be at least 1");
    double last = 0.0;
    for (unsigned k = 1; k <= k_max; ++k) {
        last = ratio_estimate(k);
        if (literal_rule ? last >= 2.0 : last - 2.0 <= tolerance) {
            return RatioConvergence{k, last};
        }
    }
    throw NonConvergenceError("ratio did not reach the threshold within k_max", k_max, last);
}

FitResult fit_loglog(std::span<const CountRecord> records) {
    if (records.size() < 2) {
        throw InsufficientDataError("log-log fit needs at least two records");
    }
    MeshKind kind = records[0].mesh;
    std::set<double> deltas;
    std::vector<double> xs, ys;
    xs.reserve(records.size());
    ys.reserve(records.size());
    for (const CountRecord& r : records) {
        if (r.mesh != kind) {
            throw ValidationError("log-log fit mixes mesh kinds");
        }
        if (r.count == 0) throw DomainError("zero count has no logarithm");
        double d = r.delta.to_double();
        if (!(d > 0.0)) throw ValidationError("delta must be positive");
        deltas.insert(d);
        xs.push_back(-std::log10(d));
        ys.push_back(std::log10(static_cast<double>(r.count)));
    }
    if (deltas.size() < 2) {
        throw InsufficientDataError("log-log fit needs at least two distinct deltas");
    }

    const double n = static_cast<double>(xs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double dx = xs[i] - mean_x;
        double dy = ys[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    FitResult fit;
    fit.n_points = static_cast<int>(xs.size());
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    if (syy == 0.0) {
        fit.r_squared = 1.0;
    } else {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double resid = ys[i] - (fit.intercept + fit.slope * xs[i]);
            ss_res += resid * resid;
        }
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

}  // namespace fracdim
