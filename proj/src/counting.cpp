#include "ppc/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ppc/dual.hpp"

namespace ppc {

double count_slack(double value_scale) { return 1e-12 * std::fabs(value_scale); }

std::uint64_t near_pair_count(std::vector<double> v, double thr) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    std::uint64_t total = 0;
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (hi < i) hi = i;
        while (hi + 1 < n && v[hi + 1] - v[i] <= thr) ++hi;
        while (lo < i && v[i] - v[lo] > thr) ++lo;
        total += static_cast<std::uint64_t>(hi - lo + 1);
    }
    return total;
}

namespace {

void check_quad(const QuadrupleQuery& q) {
    if (q.m_lo < 1 || q.m_hi <= q.m_lo)
        throw std::invalid_argument("QuadrupleQuery: require 1 <= m_lo < m_hi");
    if (q.exponent == 0.0 || q.exponent == 1.0)
        throw std::invalid_argument("QuadrupleQuery: exponent must avoid {0,1}");
    if (q.delta < 0.0) throw std::invalid_argument("QuadrupleQuery: delta must be >= 0");
    if (q.m_hi - q.m_lo > 10000)
        throw std::invalid_argument("QuadrupleQuery: range size > 1e4");
}

}  // namespace

std::uint64_t count_quadruples(const QuadrupleQuery& q) {
    check_quad(q);
    const auto n = static_cast<std::size_t>(q.m_hi - q.m_lo);
    std::vector<double> powv(n);
    for (std::size_t i = 0; i < n; ++i)
        powv[i] = std::pow(static_cast<double>(q.m_lo) + static_cast<double>(i), q.exponent);
    std::vector<double> sums;
    sums.reserve(n * n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = powv[i] + powv[j];
            scale = std::max(scale, std::fabs(s));
            sums.push_back(s);
        }
    double thr = q.delta * std::pow(static_cast<double>(q.m_hi), q.exponent);
    return near_pair_count(std::move(sums), thr + count_slack(scale));
}

double rs_bound_ratio(const QuadrupleQuery& q) {
    auto cnt = static_cast<double>(count_quadruples(q));
    double M = static_cast<double>(q.m_hi);
    return cnt / (M * M + q.delta * M * M * M * M);
}

double sextuple_T(const SextupleQuery& q) {
    return std::pow(static_cast<double>(q.M), q.exponent - 2.0) *
           static_cast<double>(q.H1) * static_cast<double>(q.H2);
}

namespace {

void check_sext(const SextupleQuery& q) {
    if (q.M < 1 || q.H1 < 1 || q.H2 < 1)
        throw std::invalid_argument("SextupleQuery: M, H1, H2 must be >= 1");
    if (q.Delta < 0.0) throw std::invalid_argument("SextupleQuery: Delta must be >= 0");
    std::int64_t tuples = q.M * q.H1 * q.H2 * (q.mirror_h ? 4 : 1);
    if (tuples > 10'000'000)
        throw std::invalid_argument("SextupleQuery: M*H1*H2 exceeds 1e7 tuples");
    // mirrored shifts must keep every power base positive:
    // worst case m = M, h_i = -(2*H_i - 1)
    if (q.mirror_h && q.M - 2 * q.H1 - 2 * q.H2 + 2 <= 0)
        throw std::invalid_argument("SextupleQuery: mirror_h needs M > 2*H1 + 2*H2 - 2");
}

// t(m,h1,h2) with exponent a, fixed evaluation order shared with the tests'
// brute force: (p(m+h1+h2) - p(m+h2)) - (p(m+h1) - p(m)).
double phase2_at(double m, double h1, double h2, double a) {
    return (std::pow(m + h1 + h2, a) - std::pow(m + h2, a)) -
           (std::pow(m + h1, a) - std::pow(m, a));
}

std::vector<double> h_values(std::int64_t H, bool mirror) {
    std::vector<double> h;
    for (std::int64_t v = H; v < 2 * H; ++v) h.push_back(static_cast<double>(v));
    if (mirror)
        for (std::int64_t v = H; v < 2 * H; ++v) h.push_back(static_cast<double>(-v));
    return h;
}

}  // namespace

std::uint64_t count_sextuples(const SextupleQuery& q) {
    check_sext(q);
    const std::vector<double> h1s = h_values(q.H1, q.mirror_h);
    const std::vector<double> h2s = h_values(q.H2, q.mirror_h);
    std::vector<double> t;
    t.reserve(static_cast<std::size_t>(q.M) * h1s.size() * h2s.size());
    double scale = 0.0;
    for (std::int64_t m = q.M; m < 2 * q.M; ++m)
        for (double h1 : h1s)
            for (double h2 : h2s) {
                double v = phase2_at(static_cast<double>(m), h1, h2, q.exponent);
                scale = std::max(scale, std::fabs(v));
                t.push_back(v);
            }
    double thr = q.Delta * sextuple_T(q);
    return near_pair_count(std::move(t), thr + count_slack(scale));
}

CzBounds cz_bound_ratio(const SextupleQuery& q, double min_separation) {
    check_sext(q);
    const double a = q.exponent;
    CzBounds out;
    if (a == 0.0 || a == 1.0 || a == 2.0 || a == 3.0) {
        out.guard_violations.push_back("exponent in {0,1,2,3}");
        throw std::invalid_argument("cz_bound_ratio: exponent must avoid {0,1,2,3}");
    }
    const double M = static_cast<double>(q.M);
    const double H1 = static_cast<double>(q.H1);
    const double H2 = static_cast<double>(q.H2);
    const double D = q.Delta;

    const bool region1 = H1 <= H2 && H2 <= std::pow(M, 2.0 / 3.0);
    if (!region1) out.guard_violations.push_back("bound1 needs H1 <= H2 <= M^(2/3)");
    const bool region2 =
        H1 * min_separation < H2 && H2 <= M && H1 * H2 <= std::pow(M, 1.5);
    if (!region2)
        out.guard_violations.push_back(
            "bound2 needs H1*sep < H2 <= M and H1*H2 <= M^(3/2)");
    if (!region1 && !region2) {
        std::string msg = "cz_bound_ratio: no region applies:";
        for (const auto& g : out.guard_violations) msg += " [" + g + "]";
        throw std::invalid_argument(msg);
    }

    const auto cnt = static_cast<double>(count_sextuples(q));
    const double mhh = M * H1 * H2;
    if (region1) {
        out.bound1 = mhh + D * mhh * mhh + H1 * H1 * std::pow(H2, 6.0) / (M * M) +
                     H1 * H1 * std::pow(H2, 8.0 / 3.0);
        out.ratio1 = cnt / *out.bound1;
    }
    if (region2) {
        out.bound2 = mhh + D * mhh * mhh + std::pow(M * std::pow(H1, 7.0) * std::pow(H2, 9.0), 0.25) +
                     std::pow(H1, 4.0) * std::pow(H2, 4.0) / (M * M) +
                     std::pow(D * std::pow(M, 4.0) * std::pow(H1, 15.0) * std::pow(H2, 17.0), 0.125) +
                     std::sqrt(D * std::pow(M, 4.0) * std::pow(H1, 3.0) * H2) +
                     std::pow(std::pow(H1, 13.0) * std::pow(H2, 15.0), 1.0 / 6.0) +
                     std::pow(D * M * M * std::pow(H1, 8.0) * std::pow(H2, 10.0), 0.25) +
                     std::sqrt(std::pow(H1, 5.0) * std::pow(H2, 6.0) / M);
        out.ratio2 = cnt / *out.bound2;
    }
    return out;
}

std::uint64_t count_eta_spacings(const EtaSpacingQuery& q) {
    if (!(q.X > 0.0)) throw std::invalid_argument("EtaSpacingQuery: X must be positive");
    std::vector<EtaElement> set = eta_set(q.K, q.Y1, q.Y2, q.alpha, q.theta, q.r_window);
    if (set.size() > 100'000)
        throw std::invalid_argument("EtaSpacingQuery: eta-set size exceeds 1e5");
    if (set.empty()) return 0;

    const double Theta = 1.0 - 1.0 / q.theta;  // < 0 for theta < 1
    double Z = q.Z.value_or(0.0);
    if (!q.Z) {
        for (const auto& el : set) Z = std::max(Z, el.eta);
    }
    if (!(Z > 0.0)) throw std::invalid_argument("EtaSpacingQuery: Z must be positive");

    std::vector<double> v;
    v.reserve(set.size());
    double scale = 0.0;
    for (const auto& el : set) {
        double t = std::pow(el.eta, Theta);
        scale = std::max(scale, std::fabs(t));
        v.push_back(t);
    }
    double thr = std::pow(Z, Theta) / q.X;
    return near_pair_count(std::move(v), thr + count_slack(scale));
}

}  // namespace ppc
