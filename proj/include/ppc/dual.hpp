// Stationary-phase duals for the block sums sum_{Y<=y<2Y} e(alpha*k*y^theta)
// and their k-side counterparts.
//
// With b := theta/(1-theta) and
//   c3 = (alpha*theta)^(1/(1-theta)) * (1/theta - 1)
//   c4 = (alpha*theta*(1-theta))^(-1/2) * (alpha*theta)^((2-theta)/(2-2theta))
//   c1 = (1-theta)/sqrt(c3*theta) * ((1-theta)/c3)^(1/(2theta)-1)
//   c2 = -theta * ((1-theta)/c3)^(1/theta-1)
// the y-block dual is
//   T_k(Y) = sum_{alpha*theta*k*(2Y)^(theta-1) <= m < alpha*theta*k*Y^(theta-1)}
//            (c4/sqrt(k)) (k/m)^((2-theta)/(2-2theta))
//            e(c3 k^(1/(1-theta)) m^(-b) - 1/8),
// accurate to  R_k(Y) << Y^(1-theta/2)/sqrt(k) + max(1, log(k Y^(theta-1))),
// and the k-block dual of sum_{K1<=k<=K2} e(c3 k^(1/(1-theta)) eta) runs over
// ell in [L, L~) with L = c3*eta/(1-theta) * K1^b, amplitude
// (c1/sqrt(eta)) (ell/eta)^(1/(2theta)-1) and phase c2 ell^(1/theta)
// eta^(1-1/theta) + 1/8.
//
// eta-sets enumerate the paired stationary-phase windows: m_i integer in
// [alpha*theta*K*(2Y_i)^(theta-1), 2*alpha*theta*K*Y_i^(theta-1)), m1 < m2,
// eta = m1^(-b) - m2^(-b), optionally restricted to a dyadic difference
// class m2 - m1 in [R, 2R).
//
// Integer windows are floor/ceil of the real endpoints, half-open on the
// right.  Empty or single-element dual windows are flagged, not errors.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ppc {

struct DualConstants {
    double c1, c2, c3, c4;
};

// Throws unless 0 < theta < 1 and alpha > 0.
DualConstants dual_constants(double alpha, double theta);

struct EtaElement {
    std::int64_t m1, m2;  // m1 < m2
    double eta;           // m1^(-b) - m2^(-b) > 0
};

struct DualBlockSum {
    std::complex<double> value;
    std::int64_t window_size = 0;  // integers in the m-window
    bool empty_window = false;     // window_size == 0
};

// T_k(Y).  Small windows (size <= 1) are legal but flagged via window_size.
DualBlockSum dual_block_sum(std::int64_t k, double Y, double alpha, double theta);

// Y^(1-theta/2)/sqrt(k) + max(1, log(k*Y^(theta-1))): the R_k(Y) shape that
// the residual contract multiplies by 5 (soft) / 20 (hard).
double dual_block_bound(std::int64_t k, double Y, double theta);

// Exhaustive eta-set enumeration ordered by (m1, m2).
std::vector<EtaElement> eta_set(double K, double Y1, double Y2, double alpha,
                                double theta,
                                std::optional<std::pair<double, double>> r_window = {});

// Enumeration from explicit integer windows [m1_lo, m1_hi) x [m2_lo, m2_hi);
// eta_set computes its windows from (K, Y1, Y2) and lands here.
std::vector<EtaElement> eta_set_windows(std::int64_t m1_lo, std::int64_t m1_hi,
                                        std::int64_t m2_lo, std::int64_t m2_hi,
                                        double theta,
                                        std::optional<std::pair<double, double>> r_window = {});

struct EllRange {
    double K1, K2;      // clamped k-window; empty if K1 > K2
    double L, L_tilde;  // dual ell-window [L, L~)
    bool empty = false;
};

// K1 = max(K, m1/(2 a t Y1^(t-1)), m2/(2 a t Y2^(t-1)));
// K2 = min(K~, m1/(a t (2Y1)^(t-1)), m2/(a t (2Y2)^(t-1))).
EllRange ell_range(const EtaElement& el, double K, double K_tilde, double Y1,
                   double Y2, double alpha, double theta);

struct DualCheck {
    std::complex<double> lhs;  // sum_{K1<=k<=K2} e(c3 k^(1/(1-theta)) eta)
    std::complex<double> rhs;  // dual ell-sum
    double residual = 0.0;     // |lhs - rhs|
    double contract = 0.0;     // 5*(Lambda^(-1/2) + log(L~-L+2))
    std::int64_t k_terms = 0;
    std::int64_t ell_terms = 0;
};

DualCheck k_sum_dual_check(const EtaElement& el, double K1, double K2,
                           double alpha, double theta);

// Van der Corput difference phases, exponent 1/theta:
//   t(l,h1)    = (l+h1)^(1/theta) - l^(1/theta)
//   t(l,h1,h2) = ((l+h2+h1)^(1/theta) - (l+h2)^(1/theta)) - t(l,h1)
// Bases must stay positive.
double vdc_phase1(double ell, double h1, double theta);
double vdc_phase2(double ell, double h1, double h2, double theta);

// gamma(h2) = 1 - |h2|/H2, the smoothing weight of the second differencing.
double vdc_weight(double h2, double H2);

}  // namespace ppc
