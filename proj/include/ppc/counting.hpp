// Spacing counters behind the double large sieve: Robert-Sargos quadruples,
// Cao-Zhai sextuples, and the eta-pair count B1.
//
// Every counter tabulates its values, sorts, and counts near pairs with a
// sliding window; each one is matched against an O(n^2)/O(n^4) brute force
// in the tests on the exact same floating-point values, so agreement is
// exact, not approximate.  Thresholds get a relative slack of 1e-12 times
// the value scale so algebraically equal sums that were rounded differently
// still match (the delta = 0 diagonal cases rely on this).
//
// Counts are of ordered tuples and include the diagonal, hence
//   count_quadruples >= 2*n^2 - n      (n integers in range)
//   count_sextuples  >= M*H1*H2       (every tuple pairs with itself)
// for any threshold >= 0.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppc {

struct QuadrupleQuery {
    std::int64_t m_lo, m_hi;  // range [m_lo, m_hi)
    double exponent;          // alpha not in {0,1}
    double delta;             // threshold is delta * m_hi^alpha
};

// Ordered quadruples (m1,m2,m3,m4) in [m_lo,m_hi)^4 with
// |m1^a + m2^a - m3^a - m4^a| <= delta * m_hi^a.
// pre: range size <= 1e4 (memory is O(range^2)).
std::uint64_t count_quadruples(const QuadrupleQuery& q);

// count / (M^2 + delta*M^4) with M = m_hi; epsilon powers dropped.
double rs_bound_ratio(const QuadrupleQuery& q);

struct SextupleQuery {
    std::int64_t M, H1, H2;   // dyadic windows [M,2M), [H1,2H1), [H2,2H2)
    double exponent;          // the phase exponent (1/theta in the application)
    double Delta;             // threshold is Delta * T, T = M^(a-2) * H1 * H2
    bool mirror_h = false;    // also include h in -[Hi, 2Hi)
};

double sextuple_T(const SextupleQuery& q);

// Ordered pairs of (m,h1,h2) tuples with |t(m,h1,h2) - t(m~,h1~,h2~)| <= Delta*T,
// t the second-difference phase with exponent a.
// pre: M*H1*H2 <= 1e7 (times 4 with mirror_h).
std::uint64_t count_sextuples(const SextupleQuery& q);

struct CzBounds {
    std::optional<double> bound1, bound2;  // region-applicable bound values
    std::optional<double> ratio1, ratio2;  // count / bound
    std::vector<std::string> guard_violations;
};

// Region guards with epsilon -> 0:
//   bound 1: H1 <= H2 <= M^(2/3)
//   bound 2: H1 * min_separation < H2 <= M, H1*H2 <= M^(3/2)
// plus the lemma's exponent exclusions a not in {0,1,2,3} (checked here, not
// in count_sextuples, so the a = 2 divisor-pair fixture can still count).
// Throws, naming the violated guards, when neither region applies.
CzBounds cz_bound_ratio(const SextupleQuery& q, double min_separation = 1.0);

struct EtaSpacingQuery {
    double K, Y1, Y2;  // eta-set windows
    double alpha, theta;
    double X;  // spacing condition |eta1^T - eta2^T| <= Z^T / X, T = 1 - 1/theta
    std::optional<std::pair<double, double>> r_window;  // dyadic class [R, 2R)
    std::optional<double> Z;                            // defaults to max eta
};

// Ordered eta pairs (diagonal included) satisfying the B1 spacing condition.
// pre: eta-set size <= 1e5.
std::uint64_t count_eta_spacings(const EtaSpacingQuery& q);

// Shared sorted-window near-pair counter; exposed for reuse and testing.
// Counts ordered pairs (i,j), diagonal included, with |v_i - v_j| <= thr,
// where thr already includes any slack.
std::uint64_t near_pair_count(std::vector<double> values, double thr);

// The 1e-12 relative slack convention used by all counters.
double count_slack(double value_scale);

}  // namespace ppc
