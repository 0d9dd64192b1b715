// Test-only oracles: brute-force counters and high-precision recomputations.
// Everything here is deliberately independent of the library's fast paths
// (plain loops, 50-digit floats); where exact agreement with a library
// counter is asserted, the oracle evaluates the same floating-point
// expressions in the same order, just without the sort-and-window machinery.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ppc/counting.hpp"
#include "ppc/sequence.hpp"

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

inline big big_frac(const big& x) { return x - floor(x); }

// frac(alpha * n^theta) at 50 digits
inline big point_hp(double alpha, double theta, std::int64_t n) {
    big v = big(alpha) * exp(big(theta) * log(big(n)));
    return big_frac(v);
}

// circle distance between a double point and a 50-digit point
inline double circle_gap_hp(double stored, const big& exact) {
    big d = big(stored) - exact;
    d = big_frac(d);
    big dist = d < big(0.5) ? d : big(1) - d;
    return static_cast<double>(dist);
}

// sum over [A,B) of e(alpha*k*y^theta) at 50 digits
inline std::complex<double> exp_sum_hp(double alpha, double theta, std::int64_t k,
                                       std::int64_t A, std::int64_t B) {
    static const big two_pi = 2 * boost::math::constants::pi<big>();
    big re = 0, im = 0;
    for (std::int64_t y = A; y < B; ++y) {
        big ph = big(alpha) * k * exp(big(theta) * log(big(y)));
        ph = two_pi * big_frac(ph);
        re += cos(ph);
        im += sin(ph);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

// O(N^2) ordered-pair count with the sweep's predicate expressions
inline std::uint64_t pair_count_brute(const std::vector<double>& sorted_pts, double s) {
    const std::size_t n = sorted_pts.size();
    const double N = static_cast<double>(n);
    std::uint64_t c = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            double d = sorted_pts[b] - sorted_pts[a];
            if (N * d <= s) ++c;
            if (N * (1.0 - d) <= s) ++c;
        }
    return 2 * c;
}

// O(n^4) quadruple count over pairwise sums, same slack convention
inline std::uint64_t quadruples_brute(const ppc::QuadrupleQuery& q) {
    auto n = static_cast<std::size_t>(q.m_hi - q.m_lo);
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = std::pow(static_cast<double>(q.m_lo) + static_cast<double>(i), q.exponent);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(p[i] + p[j]));
    double thr = q.delta * std::pow(static_cast<double>(q.m_hi), q.exponent) +
                 ppc::count_slack(scale);
    std::uint64_t c = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t e = 0; e < n; ++e)
                for (std::size_t d = 0; d < n; ++d)
                    if (std::fabs((p[a] + p[b]) - (p[e] + p[d])) <= thr) ++c;
    return c;
}

// O(T^2) sextuple count over tabulated phases, same evaluation order
inline std::uint64_t sextuples_brute(const ppc::SextupleQuery& q) {
    std::vector<double> h1s, h2s;
    for (std::int64_t v = q.H1; v < 2 * q.H1; ++v) h1s.push_back(static_cast<double>(v));
    if (q.mirror_h)
        for (std::int64_t v = q.H1; v < 2 * q.H1; ++v) h1s.push_back(static_cast<double>(-v));
    for (std::int64_t v = q.H2; v < 2 * q.H2; ++v) h2s.push_back(static_cast<double>(v));
    if (q.mirror_h)
        for (std::int64_t v = q.H2; v < 2 * q.H2; ++v) h2s.push_back(static_cast<double>(-v));
    auto phase = [&](double m, double h1, double h2) {
        return (std::pow(m + h1 + h2, q.exponent) - std::pow(m + h2, q.exponent)) -
               (std::pow(m + h1, q.exponent) - std::pow(m, q.exponent));
    };
    std::vector<double> t;
    double scale = 0.0;
    for (std::int64_t m = q.M; m < 2 * q.M; ++m)
        for (double h1 : h1s)
            for (double h2 : h2s) {
                double v = phase(static_cast<double>(m), h1, h2);
                scale = std::max(scale, std::fabs(v));
                t.push_back(v);
            }
    double thr = q.Delta * ppc::sextuple_T(q) + ppc::count_slack(scale);
    std::uint64_t c = 0;
    for (double a : t)
        for (double b : t)
            if (std::fabs(a - b) <= thr) ++c;
    return c;
}

// O(S^2) eta-spacing count
inline std::uint64_t eta_spacings_brute(const std::vector<double>& etas, double theta,
                                        double Z, double X) {
    const double Theta = 1.0 - 1.0 / theta;
    std::vector<double> v;
    double scale = 0.0;
    for (double e : etas) {
        double t = std::pow(e, Theta);
        scale = std::max(scale, std::fabs(t));
        v.push_back(t);
    }
    double thr = std::pow(Z, Theta) / X + ppc::count_slack(scale);
    std::uint64_t c = 0;
    for (double a : v)
        for (double b : v)
            if (std::fabs(a - b) <= thr) ++c;
    return c;
}

}  // namespace oracle
