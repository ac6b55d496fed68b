#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "rootmaj/detail.hpp"
#include "rootmaj/vectors.hpp"

namespace rootmaj {

/// P(t) = prod_i (t^2 - 2 u_i t + 1) with every u_i >= 1, so every factor has
/// two positive real roots whose product is exactly 1.
struct QuadraticFactorization {
    RealVector u;

    explicit QuadraticFactorization(RealVector params) : u(std::move(params)) {
        detail::require_nonempty(u, "QuadraticFactorization");
        detail::require_finite(u, "QuadraticFactorization");
        for (double x : u) {
            if (x < 1.0) {
                throw std::domain_error("QuadraticFactorization: parameter below 1");
            }
        }
    }
};

/// Monic real polynomial, coefficients in descending degree order.
struct PolynomialCoefficients {
    RealVector coeffs;

    explicit PolynomialCoefficients(RealVector c) : coeffs(std::move(c)) {
        detail::require_nonempty(coeffs, "PolynomialCoefficients");
        detail::require_finite(coeffs, "PolynomialCoefficients");
        if (std::abs(coeffs.front() - 1.0) > 1e-12) {
            throw std::invalid_argument("PolynomialCoefficients: not monic");
        }
        coeffs.front() = 1.0;
    }

    std::size_t degree() const { return coeffs.size() - 1; }
};

/// Horner evaluation.
inline double evaluate(const PolynomialCoefficients& p, double t) {
    double acc = 0.0;
    for (double c : p.coeffs) acc = acc * t + c;
    return acc;
}

namespace detail {

inline double horner(const RealVector& c, double t) {
    double acc = 0.0;
    for (double x : c) acc = acc * t + x;
    return acc;
}

// Simultaneous evaluation of p and p'.
inline std::pair<double, double> horner_with_derivative(const RealVector& c, double t) {
    double p = 0.0, dp = 0.0;
    for (double x : c) {
        dp = dp * t + p;
        p = p * t + x;
    }
    return {p, dp};
}

// Backward-error scale of Horner evaluation at t: sum |c_i| |t|^i.
inline double evaluation_scale(const RealVector& c, double t) {
    double acc = 0.0;
    const double at = std::abs(t);
    for (double x : c) acc = acc * at + std::abs(x);
    return std::max(1.0, acc);
}

}  // namespace detail

/// Expanded monic coefficient vector of prod (t^2 - 2 u_i t + 1).
/// The convolution is arranged so the output is palindromic bit-for-bit.
inline PolynomialCoefficients expand(const QuadraticFactorization& f) {
    RealVector c{1.0};
    for (double u : f.u) {
        const double b = -2.0 * u;
        RealVector next(c.size() + 2, 0.0);
        for (std::size_t j = 0; j < next.size(); ++j) {
            const double hi = j < c.size() ? c[j] : 0.0;
            const double lo = (j >= 2 && j - 2 < c.size()) ? c[j - 2] : 0.0;
            const double mid = (j >= 1 && j - 1 < c.size()) ? c[j - 1] : 0.0;
            next[j] = (hi + lo) + b * mid;
        }
        c = std::move(next);
    }
    return PolynomialCoefficients(std::move(c));
}

/// The 2n roots {u_i + s_i, u_i - s_i}, s_i = sqrt(u_i^2 - 1), in factor
/// order.  The small root of each pair is computed as the reciprocal of the
/// large one, which avoids the cancellation in u - s and makes each pair's
/// product exact to rounding.
inline RealVector roots(const QuadraticFactorization& f) {
    RealVector out;
    out.reserve(2 * f.u.size());
    for (double u : f.u) {
        const double big = u + std::sqrt((u - 1.0) * (u + 1.0));
        out.push_back(big);
        out.push_back(1.0 / big);
    }
    return out;
}

namespace detail {

// Largest real root of the monic polynomial c (descending coefficients),
// assuming all roots are real and positive.  Newton descent from the Cauchy
// upper bound is monotone for such polynomials; a bisection safeguard keeps
// the iterate inside (0, bound].  Throws if no positive real root is located.
inline double largest_positive_root(const RealVector& c) {
    double bound = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) bound = std::max(bound, std::abs(c[i]));
    bound += 1.0;

    double t = bound;
    double lower = 0.0;  // all roots exceed 0 in the theorem's class
    double upper = bound;
    bool bracketed = false;

    for (int iter = 0; iter < 400; ++iter) {
        const auto [pv, dv] = horner_with_derivative(c, t);
        const double res_tol = 4.0 * std::numeric_limits<double>::epsilon() *
                               evaluation_scale(c, t);
        if (std::abs(pv) <= res_tol) return t;

        if (pv < 0.0) {
            // Crossed below the largest root: switch to a genuine bracket.
            lower = t;
            bracketed = true;
        } else {
            upper = t;
        }

        double next;
        if (dv > 0.0 && pv > 0.0) {
            next = t - pv / dv;
        } else if (bracketed) {
            next = 0.5 * (lower + upper);
        } else {
            next = 0.5 * t;  // walk down; p(0) = const term, so a root < t exists or none at all
        }
        if (!(next > lower && next < upper)) next = 0.5 * (lower + upper);
        if (std::abs(next - t) <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(t)) {
            const double residual = horner(c, next);
            if (std::abs(residual) <=
                64.0 * std::numeric_limits<double>::epsilon() * evaluation_scale(c, next)) {
                return next;
            }
            if (!bracketed) break;
        }
        t = next;
    }
    if (bracketed) {
        // Plain bisection as a last resort.
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lower + upper);
            if (horner(c, mid) < 0.0) lower = mid; else upper = mid;
        }
        return 0.5 * (lower + upper);
    }
    throw std::domain_error("recover_factorization: not in theorem domain");
}

// Keep-best polish: plain Newton for simple roots plus a multiplicity-2
// variant so exactly-repeated quadratic factors still converge; the candidate
// with the smallest residual wins.
inline double polish_root(const RealVector& c, double r) {
    auto residual = [&](double t) { return std::abs(horner(c, t)); };
    double best = r;
    double best_res = residual(r);
    for (double mult : {1.0, 2.0}) {
        double t = r;
        for (int i = 0; i < 4; ++i) {
            const auto [pv, dv] = horner_with_derivative(c, t);
            if (dv == 0.0) break;
            t -= mult * pv / dv;
            if (!std::isfinite(t)) break;
            const double res = residual(t);
            if (res < best_res) {
                best = t;
                best_res = res;
            }
        }
    }
    return best;
}

// Divide c by t^2 - 2u t + 1 in place; returns the quotient and the largest
// remainder magnitude.
inline std::pair<RealVector, double> deflate_quadratic(const RealVector& c, double u) {
    RealVector w = c;
    const std::size_t m = c.size() - 1;  // degree
    RealVector q(m - 1, 0.0);
    for (std::size_t k = 0; k + 2 <= m; ++k) {
        q[k] = w[k];
        w[k + 1] += 2.0 * u * q[k];
        w[k + 2] -= q[k];
    }
    const double rem = std::max(std::abs(w[m - 1]), std::abs(w[m]));
    return {std::move(q), rem};
}

}  // namespace detail

/// Inverse of expand: factor a monic palindromic polynomial of even degree 2n
/// with real positive roots back into its quadratic parameters.
///
/// Roots are located largest-first (bracketed, bisection-safeguarded Newton),
/// polished on the input polynomial, paired with their reciprocal partner,
/// and removed by deflating the paired quadratic t^2 - 2u t + 1 so the
/// remaining polynomial stays in the same class.  Result is sorted descending.
inline QuadraticFactorization recover_factorization(const PolynomialCoefficients& p,
                                                    double tol = 1e-9) {
    detail::require_positive_tol(tol, "recover_factorization");
    const RealVector& c = p.coeffs;
    const std::size_t deg = p.degree();
    if (deg == 0 || deg % 2 != 0) {
        throw std::invalid_argument("recover_factorization: degree must be even and positive");
    }
    double cmax = 0.0;
    for (double x : c) cmax = std::max(cmax, std::abs(x));
    for (std::size_t k = 0; k <= deg; ++k) {
        const double a = c[k], b = c[deg - k];
        if (std::abs(a - b) > 1e-9 * std::max({1.0, std::abs(a), std::abs(b)})) {
            throw std::invalid_argument("recover_factorization: not palindromic");
        }
    }

    const double eps = std::numeric_limits<double>::epsilon();
    const double res_floor = std::max(tol, 256.0 * eps);
    RealVector work = c;
    RealVector params;
    params.reserve(deg / 2);

    while (work.size() - 1 > 2) {
        // Exact double root at t = 1 (unit parameter): deflate (t - 1)^2 directly.
        const auto [p1, dp1] = detail::horner_with_derivative(work, 1.0);
        const double s1 = detail::evaluation_scale(work, 1.0);
        if (std::abs(p1) <= 32.0 * eps * s1 && std::abs(dp1) <= 32.0 * eps * s1 * work.size()) {
            params.push_back(1.0);
            auto [q, rem] = detail::deflate_quadratic(work, 1.0);
            if (rem > res_floor * std::max(1.0, cmax)) {
                throw std::domain_error("recover_factorization: not in theorem domain");
            }
            work = std::move(q);
            continue;
        }

        // Locate on the working (deflated) polynomial, polish on the
        // undeflated input to shed deflation drift.
        double r = detail::polish_root(c, detail::largest_positive_root(work));
        if (!(r > 0.0) || !std::isfinite(r)) {
            throw std::domain_error("recover_factorization: not in theorem domain");
        }

        // A palindromic polynomial must carry the reciprocal partner as a root.
        const double partner = 1.0 / r;
        if (std::abs(detail::horner(c, partner)) >
            res_floor * detail::evaluation_scale(c, partner)) {
            throw std::domain_error("recover_factorization: roots not in reciprocal pairs");
        }

        double u = 0.5 * (r + partner);
        if (u < 1.0 - tol) {
            throw std::domain_error("recover_factorization: not in theorem domain");
        }
        u = std::max(u, 1.0);
        params.push_back(u);

        auto [q, rem] = detail::deflate_quadratic(work, u);
        if (rem > res_floor * std::max(1.0, cmax)) {
            throw std::domain_error("recover_factorization: not in theorem domain");
        }
        work = std::move(q);
    }

    // Trailing quadratic t^2 + b t + c0: its root pair multiplies to c0.
    const double b = work[1], c0 = work[2];
    if (std::abs(c0 - 1.0) > res_floor * std::max(1.0, cmax)) {
        throw std::domain_error("recover_factorization: roots not in reciprocal pairs");
    }
    double u = -0.5 * b;
    if (u < 1.0 - tol) {
        throw std::domain_error("recover_factorization: not in theorem domain");
    }
    params.push_back(std::max(u, 1.0));

    return QuadraticFactorization(sort_descending(std::move(params)));
}

}  // namespace rootmaj
