#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "rootmaj/detail.hpp"

namespace rootmaj {

/// Power sum of the reciprocal root pairs determined by u:
///   sum_i ((u_i + sqrt(u_i^2-1))^p + (u_i - sqrt(u_i^2-1))^p)
/// computed as sum_i (e^{p a_i} + e^{-p a_i}) with a_i = acosh(u_i) =
/// ln(u_i + sqrt(u_i^2-1)).  Equals power_sum(roots(u), p) by construction.
/// Schur-convex in u for p >= 1 and Schur-concave for 0 < p < 1.
inline double root_power_sum(const RealVector& u, double p) {
    detail::require_nonempty(u, "root_power_sum");
    detail::require_finite(u, "root_power_sum");
    if (!(p > 0.0)) throw std::domain_error("root_power_sum: exponent must be positive");
    RealVector terms;
    terms.reserve(u.size());
    for (double ui : u) {
        if (ui < 1.0) throw std::domain_error("root_power_sum: parameter below 1");
        const double e = std::exp(p * std::acosh(ui));
        terms.push_back(e + 1.0 / e);
    }
    return detail::pairwise_sum(terms);
}

/// The coordinate slope of root_power_sum, up to the factor p:
///   g(t) = ((t + sqrt(t^2-1))^p - (t - sqrt(t^2-1))^p) / sqrt(t^2-1)
///        = 2 sinh(p a) / sinh(a),  a = acosh(t),
/// so that d/dt of a single pair's power sum is p * g(t).  Increasing in t
/// for p >= 1 and decreasing for 0 < p < 1; that monotonicity is exactly the
/// Schur condition for root_power_sum.
inline double pair_slope(double t, double p) {
    if (!(t > 1.0)) {
        throw std::domain_error("pair_slope: t must exceed 1 (see pair_slope_limit_at_1)");
    }
    if (!(p > 0.0)) throw std::domain_error("pair_slope: exponent must be positive");
    const double a = std::acosh(t);
    return 2.0 * std::sinh(p * a) / std::sinh(a);
}

/// Limit of pair_slope as t -> 1+, from the first-order expansion: 2p.
inline double pair_slope_limit_at_1(double p) {
    if (!(p > 0.0)) throw std::domain_error("pair_slope_limit_at_1: exponent must be positive");
    return 2.0 * p;
}

/// Closed-form derivative of pair_slope:
///   g'(t) = (p (t+s)^p + p (t-s)^p - ((t+s)^p - (t-s)^p) t/s) / (t^2 - 1),
///   s = sqrt(t^2-1).
/// Evaluated in the hyperbolic parametrization
///   g'(t) = 2 (p cosh(p a) sinh(a) - sinh(p a) cosh(a)) / sinh(a)^3
/// whose numerator cancels exactly at p = 1.
inline double pair_slope_derivative(double t, double p) {
    if (!(t > 1.0)) throw std::domain_error("pair_slope_derivative: t must exceed 1");
    if (!(p > 0.0)) throw std::domain_error("pair_slope_derivative: exponent must be positive");
    const double a = std::acosh(t);
    const double sh = std::sinh(a);
    return 2.0 * (p * std::cosh(p * a) * sh - std::sinh(p * a) * std::cosh(a)) /
           (sh * sh * sh);
}

/// theta = sqrt(t^2-1)/t, in (0,1) for t > 1.
inline double radical_ratio(double t) {
    if (!(t > 1.0)) throw std::domain_error("radical_ratio: t must exceed 1");
    return std::sqrt((t - 1.0) * (t + 1.0)) / t;
}

/// Alternate algebraic route to pair_slope_derivative through the
/// substitution theta = sqrt(t^2-1)/t:
///   g'(t) = t^p/(t^2-1) * (p(1+theta)^p + p(1-theta)^p
///                          - ((1+theta)^p - (1-theta)^p)/theta).
/// Kept as an independent cross-check of the closed form.
inline double pair_slope_derivative_theta_form(double t, double p) {
    if (!(t > 1.0)) throw std::domain_error("pair_slope_derivative_theta_form: t must exceed 1");
    if (!(p > 0.0)) {
        throw std::domain_error("pair_slope_derivative_theta_form: exponent must be positive");
    }
    const double theta = radical_ratio(t);
    const double tp = std::exp(p * std::log(t));
    const double ap = std::exp(p * std::log1p(theta));
    const double bp = std::exp(p * std::log1p(-theta));
    return tp / ((t - 1.0) * (t + 1.0)) * (p * ap + p * bp - (ap - bp) / theta);
}

/// Sign certificate for the monotonicity of pair_slope:
///   K(theta) = (p theta - 1)(1+theta)^p + (p theta + 1)(1-theta)^p,
/// nonnegative on (0,1) for p >= 1 and nonpositive for 0 < p < 1.
inline double monotonicity_certificate(double theta, double p) {
    if (!(theta > 0.0 && theta < 1.0)) {
        throw std::domain_error("monotonicity_certificate: theta must lie in (0,1)");
    }
    if (!(p > 0.0)) throw std::domain_error("monotonicity_certificate: exponent must be positive");
    const double ap = std::exp(p * std::log1p(theta));
    const double bp = std::exp(p * std::log1p(-theta));
    return (p * theta - 1.0) * ap + (p * theta + 1.0) * bp;
}

/// Logarithmic form of the certificate, valid while p*theta < 1:
///   h(theta) = ln((p theta + 1)(1-theta)^p) - ln((1 - p theta)(1+theta)^p).
/// h(0) = 0 exactly, and sign(h) agrees with sign(K) on this domain.
inline double log_certificate(double theta, double p) {
    if (!(p > 0.0)) throw std::domain_error("log_certificate: exponent must be positive");
    if (!(theta >= 0.0) || theta >= 1.0 || p * theta >= 1.0) {
        throw std::domain_error("log_certificate: outside p*theta < 1 regime");
    }
    const double l1 = std::log1p(p * theta);
    const double l2 = std::log1p(-p * theta);
    const double l3 = std::log1p(theta);
    const double l4 = std::log1p(-theta);
    return (l1 - l2) + p * (l4 - l3);
}

/// h'(theta) = 2p/(1 - p^2 theta^2) - 2p/(1 - theta^2); nonnegative for
/// p >= 1 and nonpositive for 0 < p < 1 on the valid domain.
inline double log_certificate_derivative(double theta, double p) {
    if (!(p > 0.0)) throw std::domain_error("log_certificate_derivative: exponent must be positive");
    if (!(theta >= 0.0) || theta >= 1.0 || p * theta >= 1.0) {
        throw std::domain_error("log_certificate_derivative: outside p*theta < 1 regime");
    }
    const double t2 = theta * theta;
    return 2.0 * p / (1.0 - (p * p) * t2) - 2.0 * p / (1.0 - t2);
}

/// 2 T_p(u) by the three-term recurrence T_0 = 1, T_1 = u,
/// T_{k+1} = 2u T_k - T_{k-1}.  For integer exponents this equals
/// (u + sqrt(u^2-1))^p + (u - sqrt(u^2-1))^p; independent oracle for
/// root_power_sum on singletons.
inline double chebyshev_pair_sum(double u, unsigned p) {
    if (!(u >= 1.0) || !std::isfinite(u)) {
        throw std::domain_error("chebyshev_pair_sum: u must be >= 1");
    }
    if (p == 0) return 2.0;
    double prev = 1.0, cur = u;
    for (unsigned k = 1; k < p; ++k) {
        const double next = 2.0 * u * cur - prev;
        prev = cur;
        cur = next;
    }
    return 2.0 * cur;
}

/// Finite-difference verification of the Schur condition for root_power_sum
/// restricted to two coordinates.
struct SchurCheckReport {
    double p = 0.0;
    std::string grid_description;
    double min_schur_product = 0.0;  // sign-flipped in the concave regime
    bool passed = false;
};

/// For each pair (u1, u2), approximate d(phi)/du1 - d(phi)/du2 by central
/// differences of the two-variable restriction of root_power_sum and test the
/// sign of (u1 - u2)(d1 - d2): nonnegative for p >= 1, nonpositive for
/// 0 < p < 1, up to a tolerance scaled by the product's natural magnitude.
///
/// fd_step is a relative step; the actual step at u is fd_step * max(1, u).
inline SchurCheckReport schur_condition_check(double p,
                                              const std::vector<std::pair<double, double>>& u_grid,
                                              double fd_step = 1e-6,
                                              double tol = 1e-5) {
    if (!(p > 0.0)) throw std::domain_error("schur_condition_check: exponent must be positive");
    if (u_grid.empty()) throw std::invalid_argument("schur_condition_check: empty grid");
    detail::require_positive_tol(tol, "schur_condition_check");
    if (!(fd_step > 0.0)) throw std::invalid_argument("schur_condition_check: fd_step must be positive");

    const double sign = p >= 1.0 ? 1.0 : -1.0;
    SchurCheckReport report;
    report.p = p;
    report.passed = true;
    report.min_schur_product = std::numeric_limits<double>::infinity();
    report.grid_description = std::to_string(u_grid.size()) +
                              " pairs, central differences with relative step " +
                              std::to_string(fd_step);

    for (const auto& [u1, u2] : u_grid) {
        const double d1 = fd_step * std::max(1.0, u1);
        const double d2 = fd_step * std::max(1.0, u2);
        if (!(u1 > 1.0 + d1) || !(u2 > 1.0 + d2)) {
            throw std::domain_error("schur_condition_check: grid point too close to the t=1 singularity");
        }
        auto phi2 = [&](double a, double b) { return root_power_sum({a, b}, p); };
        const double dphi1 = (phi2(u1 + d1, u2) - phi2(u1 - d1, u2)) / (2.0 * d1);
        const double dphi2 = (phi2(u1, u2 + d2) - phi2(u1, u2 - d2)) / (2.0 * d2);
        const double product = sign * (u1 - u2) * (dphi1 - dphi2);
        report.min_schur_product = std::min(report.min_schur_product, product);
        const double scale = std::max(1.0, std::abs(u1 - u2) * (std::abs(dphi1) + std::abs(dphi2)));
        if (product < -tol * scale) report.passed = false;
    }
    return report;
}

/// Bundled sign verification for one exponent: slope-derivative monotonicity
/// on a log grid in t, both certificate families on theta grids, and the
/// finite-difference Schur product on a square (u1, u2) grid.
struct SchurSuiteReport {
    double p = 0.0;
    SchurCheckReport schur;
    double min_slope_derivative_signed = 0.0;
    double min_certificate_signed = 0.0;
    double min_log_certificate_signed = 0.0;
    double min_log_certificate_derivative_signed = 0.0;
    double sign_tol = 0.0;
    bool passed = false;
};

inline SchurSuiteReport schur_sign_suite(double p, double sign_tol = 1e-12) {
    if (!(p > 0.0)) throw std::domain_error("schur_sign_suite: exponent must be positive");
    detail::require_positive_tol(sign_tol, "schur_sign_suite");

    const double sign = p >= 1.0 ? 1.0 : -1.0;
    SchurSuiteReport suite;
    suite.p = p;
    suite.sign_tol = sign_tol;

    // 200-point log grid in t over (1, 100].
    double min_slope = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 200; ++i) {
        const double f = static_cast<double>(i) / 199.0;
        const double t = std::exp(std::log(1.01) + f * (std::log(100.0) - std::log(1.01)));
        min_slope = std::min(min_slope, sign * pair_slope_derivative(t, p));
    }
    suite.min_slope_derivative_signed = min_slope;

    // Certificate on theta in (0, 0.999).
    double min_cert = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 200; ++i) {
        const double theta = 0.999 * i / 201.0;
        min_cert = std::min(min_cert, sign * monotonicity_certificate(theta, p));
    }
    suite.min_certificate_signed = min_cert;

    // Log certificate and its derivative on theta in (0, min(1, 1/p)).
    const double theta_max = 0.999 * std::min(1.0, 1.0 / p);
    double min_log = std::numeric_limits<double>::infinity();
    double min_log_d = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 200; ++i) {
        const double theta = theta_max * i / 201.0;
        min_log = std::min(min_log, sign * log_certificate(theta, p));
        min_log_d = std::min(min_log_d, sign * log_certificate_derivative(theta, p));
    }
    suite.min_log_certificate_signed = min_log;
    suite.min_log_certificate_derivative_signed = min_log_d;

    // 20x20 square grid over (1.01, 10].
    std::vector<std::pair<double, double>> grid;
    grid.reserve(400);
    std::vector<double> axis(20);
    for (int i = 0; i < 20; ++i) axis[i] = 1.01 + (10.0 - 1.01) * (i + 1) / 20.0;
    for (double a : axis) {
        for (double b : axis) grid.emplace_back(a, b);
    }
    suite.schur = schur_condition_check(p, grid);

    suite.passed = suite.schur.passed &&
                   min_slope >= -sign_tol &&
                   min_cert >= -sign_tol &&
                   min_log >= -sign_tol &&
                   min_log_d >= -sign_tol &&
                   log_certificate(0.0, p) == 0.0;
    return suite;
}

}  // namespace rootmaj
