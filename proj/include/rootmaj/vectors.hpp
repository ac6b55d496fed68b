#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "rootmaj/detail.hpp"

namespace rootmaj {

/// Outcome of a majorization comparison u ≻ v.
///
/// prefix_margins[k-1] = (sum of k largest entries of u) - (sum of k largest
/// entries of v), for k = 1..n.  The relation holds iff every margin for
/// k < n is nonnegative and the total-sum margin vanishes, both up to a
/// tolerance scaled by the prefix-sum magnitudes.
struct MajorizationReport {
    bool holds = false;
    std::vector<double> prefix_margins;
    std::optional<std::size_t> failing_k;  // 1-based, smallest violating k
    double total_sum_gap = 0.0;
};

/// Non-increasing copy of v.  Stable with respect to ties.
inline RealVector sort_descending(RealVector v) {
    detail::require_nonempty(v, "sort_descending");
    detail::require_finite(v, "sort_descending");
    std::stable_sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

/// Partial-sum test: does u majorize v?
///
/// Comparisons use an absolute tolerance scaled by max(1, |larger prefix sum|).
inline MajorizationReport majorizes(const RealVector& u, const RealVector& v,
                                    double tol = 1e-9) {
    detail::require_nonempty(u, "majorizes");
    detail::require_nonempty(v, "majorizes");
    detail::require_same_length(u, v, "majorizes");
    detail::require_positive_tol(tol, "majorizes");

    const RealVector su = sort_descending(u);
    const RealVector sv = sort_descending(v);
    const std::size_t n = su.size();

    MajorizationReport report;
    report.prefix_margins.resize(n);
    report.holds = true;

    double pu = 0.0, pv = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        pu += su[k];
        pv += sv[k];
        const double margin = pu - pv;
        report.prefix_margins[k] = margin;
        const double scale = std::max({1.0, std::abs(pu), std::abs(pv)});
        const bool last = (k + 1 == n);
        const bool violated = last ? std::abs(margin) > tol * scale
                                   : margin < -tol * scale;
        if (violated && report.holds) {
            report.holds = false;
            report.failing_k = k + 1;
        }
    }
    report.total_sum_gap = report.prefix_margins.back();
    return report;
}

/// Sampled necessary condition from the convex-function characterization of
/// majorization, using the extreme-ray family phi_a(s) = max(s - a, 0).
///
/// Returns true iff sum phi_a(v_i) <= sum phi_a(u_i) + tol for every knot a.
/// This is a cross-check oracle only; the partial-sum test is authoritative.
inline bool hlp_check(const RealVector& u, const RealVector& v,
                      const RealVector& knots, double tol = 1e-9) {
    detail::require_nonempty(u, "hlp_check");
    detail::require_same_length(u, v, "hlp_check");
    detail::require_nonempty(knots, "hlp_check: knots");
    detail::require_finite(u, "hlp_check");
    detail::require_finite(v, "hlp_check");
    detail::require_positive_tol(tol, "hlp_check");

    for (double a : knots) {
        double su = 0.0, sv = 0.0;
        for (double x : u) su += std::max(x - a, 0.0);
        for (double x : v) sv += std::max(x - a, 0.0);
        const double scale = std::max({1.0, std::abs(su), std::abs(sv)});
        if (sv > su + tol * scale) return false;
    }
    return true;
}

/// Replace (v[i], v[j]) by the convex mixture
/// (lambda*v[i] + (1-lambda)*v[j], (1-lambda)*v[i] + lambda*v[j]).
/// The result is majorized by the input; sums are preserved exactly in
/// exact arithmetic.
inline void t_transform(RealVector& v, std::size_t i, std::size_t j, double lambda) {
    if (i >= v.size() || j >= v.size() || i == j) {
        throw std::invalid_argument("t_transform: invalid index pair");
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("t_transform: lambda must lie in [0,1]");
    }
    const double a = v[i], b = v[j];
    v[i] = lambda * a + (1.0 - lambda) * b;
    v[j] = (1.0 - lambda) * a + lambda * b;
}

struct MajorizationPair {
    RealVector u;
    RealVector v;
};

/// Random instance generator: u uniform in [lo,hi]^n, v derived from u by
/// num_transforms successive random T-transforms, so v is majorized by u by
/// construction and every v_i stays within [lo, hi].
///
/// The default lower bound policy requires lo >= 1 (the domain of the
/// quadratic-factorization results); pass require_unit_lower = false to allow
/// any positive range when only the majorization predicate is under test.
inline MajorizationPair random_majorization_pair(std::size_t n,
                                                 std::size_t num_transforms,
                                                 double lo, double hi,
                                                 std::uint64_t seed,
                                                 bool require_unit_lower = true) {
    if (n < 1) throw std::invalid_argument("random_majorization_pair: n must be >= 1");
    if (!(hi > lo)) throw std::invalid_argument("random_majorization_pair: empty entry range");
    if (require_unit_lower && lo < 1.0) {
        throw std::domain_error("random_majorization_pair: lower bound must be >= 1");
    }
    if (!require_unit_lower && !(lo > 0.0)) {
        throw std::domain_error("random_majorization_pair: lower bound must be positive");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> entry(lo, hi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    MajorizationPair pair;
    pair.u.resize(n);
    for (double& x : pair.u) x = entry(rng);
    pair.v = pair.u;

    if (n >= 2) {
        std::uniform_int_distribution<std::size_t> index(0, n - 1);
        for (std::size_t t = 0; t < num_transforms; ++t) {
            const std::size_t i = index(rng);
            std::size_t j = index(rng);
            while (j == i) j = index(rng);
            t_transform(pair.v, i, j, unit(rng));
        }
    }
    return pair;
}

}  // namespace rootmaj
