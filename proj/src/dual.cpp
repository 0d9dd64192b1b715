#include "ppc/dual.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ppc/parallel.hpp"
#include "ppc/sequence.hpp"

namespace ppc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> e_of(double x) {
    double ph = kTwoPi * frac(x);
    return {std::cos(ph), std::sin(ph)};
}

// first integer >= x
std::int64_t iceil(double x) { return static_cast<std::int64_t>(std::ceil(x)); }

void check_at(double alpha, double theta, const char* who) {
    if (!(alpha > 0.0)) throw std::invalid_argument(std::string(who) + ": alpha must be positive");
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument(std::string(who) + ": theta must lie in (0,1)");
}

}  // namespace

DualConstants dual_constants(double alpha, double theta) {
    check_at(alpha, theta, "dual_constants");
    const double at = alpha * theta;
    const double c3 = std::pow(at, 1.0 / (1.0 - theta)) * (1.0 / theta - 1.0);
    const double c4 =
        std::pow(at * (1.0 - theta), -0.5) * std::pow(at, (2.0 - theta) / (2.0 - 2.0 * theta));
    const double c1 = (1.0 - theta) / std::sqrt(c3 * theta) *
                      std::pow((1.0 - theta) / c3, 1.0 / (2.0 * theta) - 1.0);
    const double c2 = -theta * std::pow((1.0 - theta) / c3, 1.0 / theta - 1.0);
    return {c1, c2, c3, c4};
}

DualBlockSum dual_block_sum(std::int64_t k, double Y, double alpha, double theta) {
    check_at(alpha, theta, "dual_block_sum");
    if (k < 1 || !(Y >= 1.0)) throw std::invalid_argument("dual_block_sum: need k >= 1, Y >= 1");
    const DualConstants c = dual_constants(alpha, theta);
    const double at_k = alpha * theta * static_cast<double>(k);
    const std::int64_t m_lo = iceil(at_k * std::pow(2.0 * Y, theta - 1.0));
    const std::int64_t m_hi = iceil(at_k * std::pow(Y, theta - 1.0));  // half-open
    DualBlockSum out;
    out.window_size = std::max<std::int64_t>(0, m_hi - m_lo);
    out.empty_window = out.window_size == 0;
    if (out.empty_window) return out;

    const double b = theta / (1.0 - theta);
    const double kp = std::pow(static_cast<double>(k), 1.0 / (1.0 - theta));
    // largest phase occurs at the window's left edge
    if (c.c3 * kp * std::pow(static_cast<double>(m_lo), -b) > 1099511627776.0)
        throw std::invalid_argument("dual_block_sum: phase guard 2^40 exceeded");
    const double amp0 = c.c4 / std::sqrt(static_cast<double>(k));
    out.value = par::sum<std::complex<double>>(out.window_size, [&](std::int64_t i) {
        double m = static_cast<double>(m_lo + i);
        double amp = amp0 * std::pow(static_cast<double>(k) / m, (2.0 - theta) / (2.0 - 2.0 * theta));
        return amp * e_of(c.c3 * kp * std::pow(m, -b) - 0.125);
    });
    return out;
}

double dual_block_bound(std::int64_t k, double Y, double theta) {
    double main = std::pow(Y, 1.0 - theta / 2.0) / std::sqrt(static_cast<double>(k));
    double logterm = std::log(static_cast<double>(k) * std::pow(Y, theta - 1.0));
    return main + std::max(1.0, logterm);
}

std::vector<EtaElement> eta_set_windows(std::int64_t m1_lo, std::int64_t m1_hi,
                                        std::int64_t m2_lo, std::int64_t m2_hi,
                                        double theta,
                                        std::optional<std::pair<double, double>> r_window) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("eta_set_windows: theta must lie in (0,1)");
    const std::int64_t w1 = std::max<std::int64_t>(0, m1_hi - m1_lo);
    const std::int64_t w2 = std::max<std::int64_t>(0, m2_hi - m2_lo);
    if (w1 * w2 > 20'000'000)
        throw std::invalid_argument("eta_set: window product exceeds 2e7 pairs");

    const double b = theta / (1.0 - theta);
    std::vector<EtaElement> out;
    for (std::int64_t m1 = std::max<std::int64_t>(1, m1_lo); m1 < m1_hi; ++m1) {
        std::int64_t m2_from = std::max(m2_lo, m1 + 1);
        std::int64_t m2_to = m2_hi;
        if (r_window) {
            // m2 - m1 in [R, 2R)
            m2_from = std::max(m2_from, m1 + iceil(r_window->first));
            m2_to = std::min(m2_to, m1 + iceil(r_window->second));
        }
        double p1 = std::pow(static_cast<double>(m1), -b);
        for (std::int64_t m2 = m2_from; m2 < m2_to; ++m2) {
            double eta = p1 - std::pow(static_cast<double>(m2), -b);
            out.push_back({m1, m2, eta});
        }
    }
    return out;
}

std::vector<EtaElement> eta_set(double K, double Y1, double Y2, double alpha,
                                double theta,
                                std::optional<std::pair<double, double>> r_window) {
    check_at(alpha, theta, "eta_set");
    if (!(K > 0.0) || !(Y1 > 0.0) || !(Y2 > 0.0))
        throw std::invalid_argument("eta_set: K, Y1, Y2 must be positive");
    const double atK = alpha * theta * K;
    return eta_set_windows(iceil(atK * std::pow(2.0 * Y1, theta - 1.0)),
                           iceil(2.0 * atK * std::pow(Y1, theta - 1.0)),
                           iceil(atK * std::pow(2.0 * Y2, theta - 1.0)),
                           iceil(2.0 * atK * std::pow(Y2, theta - 1.0)), theta, r_window);
}

EllRange ell_range(const EtaElement& el, double K, double K_tilde, double Y1,
                   double Y2, double alpha, double theta) {
    check_at(alpha, theta, "ell_range");
    const double at = alpha * theta;
    const double m1 = static_cast<double>(el.m1);
    const double m2 = static_cast<double>(el.m2);
    EllRange r;
    r.K1 = std::max({K, m1 / (2.0 * at * std::pow(Y1, theta - 1.0)),
                     m2 / (2.0 * at * std::pow(Y2, theta - 1.0))});
    r.K2 = std::min({K_tilde, m1 / (at * std::pow(2.0 * Y1, theta - 1.0)),
                     m2 / (at * std::pow(2.0 * Y2, theta - 1.0))});
    r.empty = r.K1 > r.K2;
    const double c3 = dual_constants(alpha, theta).c3;
    const double b = theta / (1.0 - theta);
    r.L = c3 * el.eta / (1.0 - theta) * std::pow(r.K1, b);
    r.L_tilde = c3 * el.eta / (1.0 - theta) * std::pow(r.K2, b);
    return r;
}

DualCheck k_sum_dual_check(const EtaElement& el, double K1, double K2,
                           double alpha, double theta) {
    check_at(alpha, theta, "k_sum_dual_check");
    const DualConstants c = dual_constants(alpha, theta);
    const double eta = el.eta;
    const double p = 1.0 / (1.0 - theta);
    const double b = theta / (1.0 - theta);

    DualCheck out;
    const std::int64_t k_lo = iceil(K1);
    const auto k_hi = static_cast<std::int64_t>(std::floor(K2));  // inclusive
    out.k_terms = std::max<std::int64_t>(0, k_hi - k_lo + 1);
    if (out.k_terms > 0) {
        if (c.c3 * std::pow(K2, p) * eta > 1099511627776.0)
            throw std::invalid_argument("k_sum_dual_check: phase guard 2^40 exceeded");
        out.lhs = par::sum<std::complex<double>>(out.k_terms, [&](std::int64_t i) {
            double k = static_cast<double>(k_lo + i);
            return e_of(c.c3 * std::pow(k, p) * eta);
        });
    }

    const double L = c.c3 * eta / (1.0 - theta) * std::pow(K1, b);
    const double Lt = c.c3 * eta / (1.0 - theta) * std::pow(K2, b);
    const std::int64_t l_lo = iceil(L);
    const std::int64_t l_hi = iceil(Lt);  // half-open [L, L~)
    out.ell_terms = std::max<std::int64_t>(0, l_hi - l_lo);
    if (out.ell_terms > 0) {
        const double eexp = 1.0 - 1.0 / theta;
        out.rhs = par::sum<std::complex<double>>(out.ell_terms, [&](std::int64_t i) {
            double l = static_cast<double>(l_lo + i);
            double amp = c.c1 / std::sqrt(eta) * std::pow(l / eta, 1.0 / (2.0 * theta) - 1.0);
            return amp * e_of(c.c2 * std::pow(l, 1.0 / theta) * std::pow(eta, eexp) + 0.125);
        });
    }
    out.residual = std::abs(out.lhs - out.rhs);

    if (out.k_terms > 0) {
        // second-derivative scale of the k-phase, min over the window
        auto g2 = [&](double k) { return c.c3 * eta * p * (p - 1.0) * std::pow(k, p - 2.0); };
        double lambda = std::min(g2(K1), g2(K2));
        out.contract = 5.0 * (1.0 / std::sqrt(lambda) + std::log(Lt - L + 2.0));
    }
    return out;
}

double vdc_phase1(double ell, double h1, double theta) {
    if (!(ell > 0.0) || !(ell + h1 > 0.0))
        throw std::invalid_argument("vdc_phase1: nonpositive base");
    double q = 1.0 / theta;
    return std::pow(ell + h1, q) - std::pow(ell, q);
}

double vdc_phase2(double ell, double h1, double h2, double theta) {
    if (!(ell > 0.0) || !(ell + h1 > 0.0) || !(ell + h2 > 0.0) || !(ell + h1 + h2 > 0.0))
        throw std::invalid_argument("vdc_phase2: nonpositive base");
    return vdc_phase1(ell + h2, h1, theta) - vdc_phase1(ell, h1, theta);
}

double vdc_weight(double h2, double H2) {
    if (!(H2 > 0.0)) throw std::invalid_argument("vdc_weight: H2 must be positive");
    return 1.0 - std::fabs(h2) / H2;
}

}  // namespace ppc
