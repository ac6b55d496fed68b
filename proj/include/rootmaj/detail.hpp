#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootmaj {

/// Carrier for all vector-valued quantities (roots, factor parameters, knots).
using RealVector = std::vector<double>;

namespace detail {

inline void require_finite(const RealVector& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument(std::string(what) + ": non-finite entry");
        }
    }
}

inline void require_nonempty(const RealVector& v, const char* what) {
    if (v.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty input");
    }
}

inline void require_same_length(const RealVector& a, const RealVector& b, const char* what) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
}

inline void require_positive_tol(double tol, const char* what) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument(std::string(what) + ": tolerance must be positive");
    }
}

// Pairwise (cascade) summation; error grows like O(log n) instead of O(n).
inline double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

// splitmix64; used to derive independent per-trial sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace detail
}  // namespace rootmaj
