#ifndef CIRCOAL_ANALYTICS_HPP
#define CIRCOAL_ANALYTICS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "circoal/circle.hpp"

// Closed-form laws of the circular coalescing system.
//
// For m >= 2 coalescing Brownian motions on the unit circle with initial
// gap vector (g_1,...,g_m), the full-coalescence time T_m satisfies
//
//     E[e^{-lambda T_m}] = sum_i sinh(g_i sqrt(lambda)) / sinh(sqrt(lambda)),
//
// because exactly one gap expands to cover the circle and the expansion
// times S_i of distinct gaps are disjoint events. Each S_i is the time a
// variance-2 Brownian difference started at g_i hits 1 before 0, whence
//
//     P{S_i <= t} = g_i + (2/pi) sum_n ((-1)^n / n) sin(n pi g_i) e^{-n^2 pi^2 t},
//
// with total mass g_i (the gambler's-ruin win probability). The dense-gap
// limit gives the fixation law E[e^{-lambda T}] = sqrt(lambda)/sinh(sqrt(lambda))
// and P{T <= t} = 1 + 2 sum_n (-1)^n e^{-n^2 pi^2 t}; the expected number of
// distinct flow images at time t is 1 + 2 sum_n e^{-n^2 pi^2 t}.

namespace circoal {

// Truncation policy for the theta-type series. A sum stops only once a
// geometric (or alternating) tail certificate puts the remainder below
// abs_tol; exceeding max_terms first raises SeriesTruncationError.
struct SeriesControl {
    double abs_tol = 1e-12;
    int max_terms = 10000;
};

class SeriesTruncationError : public std::runtime_error {
public:
    SeriesTruncationError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved bound " + std::to_string(achieved) + ")"),
          achieved_bound(achieved) {}

    double achieved_bound;
};

namespace detail {

// sinh(g s)/sinh(s) evaluated as e^{(g-1)s} expm1(-2 g s)/expm1(-2 s),
// which neither overflows for large s nor loses the s -> 0 limit g.
inline double sinh_ratio(double g, double s) {
    return std::exp((g - 1.0) * s) * std::expm1(-2.0 * g * s) / std::expm1(-2.0 * s);
}

inline double clamp(double x, double lo, double hi) {
    return x < lo ? lo : (x > hi ? hi : x);
}

} // namespace detail

// E[e^{-lambda S}] for the expansion time S of a single gap of length g:
// sinh(g sqrt(lambda))/sinh(sqrt(lambda)). Tends to g as lambda -> 0+.
inline double laplace_gap_win(double lambda, double g) {
    if (!(lambda > 0.0)) throw std::invalid_argument("laplace_gap_win: lambda must be > 0");
    if (!(g > 0.0 && g < 1.0)) throw std::invalid_argument("laplace_gap_win: g must be in (0,1)");
    return detail::sinh_ratio(g, std::sqrt(lambda));
}

// E[e^{-lambda T_m}] = sum_i sinh(g_i sqrt(lambda))/sinh(sqrt(lambda)).
inline double laplace_Tm(double lambda, const GapVector& gaps) {
    if (!(lambda > 0.0)) throw std::invalid_argument("laplace_Tm: lambda must be > 0");
    if (gaps.size() < 2) throw std::invalid_argument("laplace_Tm: need m >= 2 gaps");
    const double s = std::sqrt(lambda);
    double sum = 0.0;
    for (double g : gaps.values()) sum += detail::sinh_ratio(g, s);
    return sum;
}

// E[T_m] = (1 - sum_i g_i^3) / 6, the derivative of the Laplace transform at
// zero. Maximal over configurations exactly at equal spacing, where it equals
// (1 - 1/m^2)/6.
inline double mean_Tm(const GapVector& gaps) {
    if (gaps.size() < 2) throw std::invalid_argument("mean_Tm: need m >= 2 gaps");
    double cubes = 0.0;
    for (double g : gaps.values()) cubes += g * g * g;
    return (1.0 - cubes) / 6.0;
}

// Defective CDF P{S <= t} of the expansion time of a gap of length g;
// increases from 0 to total mass g. Remainder of the truncated series is
// certified below ctrl.abs_tol by a geometric tail bound.
inline double cdf_gap_win(double t, double g, SeriesControl ctrl = {}) {
    if (!(t > 0.0)) throw std::invalid_argument("cdf_gap_win: t must be > 0");
    if (!(g > 0.0 && g < 1.0)) throw std::invalid_argument("cdf_gap_win: g must be in (0,1)");
    const double pi = M_PI;
    const double a = pi * pi * t;
    double sum = 0.0;
    double sign = -1.0;
    for (int n = 1; n <= ctrl.max_terms; ++n, sign = -sign) {
        sum += sign / n * std::sin(n * pi * g) * std::exp(-static_cast<double>(n) * n * a);
        // terms beyond n are bounded by (2/pi)/(n+1) * q^j with q = e^{-(n+1)a}
        const double q = std::exp(-(n + 1.0) * a);
        const double tail = 2.0 / (pi * (n + 1)) * std::pow(q, n + 1.0) / (1.0 - q);
        if (tail < ctrl.abs_tol)
            return detail::clamp(g + 2.0 / pi * sum, 0.0, g);
    }
    const double q = std::exp(-(ctrl.max_terms + 1.0) * a);
    throw SeriesTruncationError("cdf_gap_win: no convergence certificate within max_terms",
                                2.0 / (pi * (ctrl.max_terms + 1)) * std::pow(q, ctrl.max_terms + 1.0) /
                                    (1.0 - q));
}

// P{T_m <= t} = sum_i P{S_i <= t}; a proper CDF in t.
inline double cdf_Tm(double t, const GapVector& gaps, SeriesControl ctrl = {}) {
    if (gaps.size() < 2) throw std::invalid_argument("cdf_Tm: need m >= 2 gaps");
    double sum = 0.0;
    for (double g : gaps.values()) sum += cdf_gap_win(t, g, ctrl);
    return detail::clamp(sum, 0.0, 1.0);
}

// Fixation-time Laplace transform sqrt(lambda)/sinh(sqrt(lambda)) for a
// diffuse initial condition; tends to 1 as lambda -> 0+ and has mean 1/6.
inline double laplace_fixation(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("laplace_fixation: lambda must be > 0");
    const double s = std::sqrt(lambda);
    return -2.0 * s * std::exp(-s) / std::expm1(-2.0 * s);
}

// Fixation-time CDF 1 + 2 sum_n (-1)^n e^{-n^2 pi^2 t}. Alternating with
// decreasing terms, so the first omitted term certifies the remainder.
inline double cdf_fixation(double t, SeriesControl ctrl = {}) {
    if (!(t > 0.0)) throw std::invalid_argument("cdf_fixation: t must be > 0");
    const double a = M_PI * M_PI * t;
    double sum = 0.0;
    double sign = -1.0;
    for (int n = 1; n <= ctrl.max_terms; ++n, sign = -sign) {
        sum += sign * std::exp(-static_cast<double>(n) * n * a);
        const double next = 2.0 * std::exp(-(n + 1.0) * (n + 1.0) * a);
        if (next < ctrl.abs_tol) return detail::clamp(1.0 + 2.0 * sum, 0.0, 1.0);
    }
    throw SeriesTruncationError("cdf_fixation: no convergence certificate within max_terms",
                                2.0 * std::exp(-std::pow(ctrl.max_terms + 1.0, 2.0) * a));
}

// The fixation CDF doubles as a universal lower bound on P{T <= t} for
// arbitrary (not necessarily diffuse) initial conditions.
inline double cdf_fixation_lower_bound(double t, SeriesControl ctrl = {}) {
    return cdf_fixation(t, ctrl);
}

// Expected number of distinct flow images at time t:
// 1 + 2 sum_n e^{-n^2 pi^2 t}. Decreases to 1 as t grows.
inline double mean_cluster_count(double t, SeriesControl ctrl = {}) {
    if (!(t > 0.0)) throw std::invalid_argument("mean_cluster_count: t must be > 0");
    const double a = M_PI * M_PI * t;
    double sum = 0.0;
    for (int n = 1; n <= ctrl.max_terms; ++n) {
        sum += std::exp(-static_cast<double>(n) * n * a);
        const double q = std::exp(-(n + 1.0) * a);
        const double tail = 2.0 * std::pow(q, n + 1.0) / (1.0 - q);
        if (tail < ctrl.abs_tol) return 1.0 + 2.0 * sum;
    }
    const double q = std::exp(-(ctrl.max_terms + 1.0) * a);
    throw SeriesTruncationError("mean_cluster_count: no convergence certificate within max_terms",
                                2.0 * std::pow(q, ctrl.max_terms + 1.0) / (1.0 - q));
}

} // namespace circoal

#endif
