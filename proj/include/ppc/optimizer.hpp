// Exact rational evaluation and optimization of the theta constraint
// families, plus the Holder best-case exponents.
//
// Each constraint encodes theta < p / (q0 + q1*k1 + q2*k2) over the feasible
// square 0 <= k1, k2 < 1 with k1 + k2 <= 3/2.  theta_limit is the pointwise
// min over all 27 built-in fractions (families A, B, C, D and the global
// 3/8); each fraction is linear-fractional with positive denominator on the
// box, hence quasiconcave, so the min is quasiconcave and grid + vertex
// polishing finds the exact maximizer.  The side condition
// (k1+k2)*theta >= 3*theta - 1 is a feasibility predicate evaluated at the
// candidate theta, not a fraction in the min.
//
// All arithmetic is exact rational; no floating point anywhere here.

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ppc {

using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& r);   // "p/q" (or "p" when q == 1)
double rational_double(const Rational& r);

enum class Family { A, B, C, D, Global };

std::string family_name(Family f);

struct FractionalConstraint {
    std::string id;
    Family family;
    Rational p, q0, q1, q2;  // theta < p / (q0 + q1*k1 + q2*k2)

    Rational denom_at(const Rational& k1, const Rational& k2) const;
    // Throws std::domain_error if the denominator is not positive.
    Rational value_at(const Rational& k1, const Rational& k2) const;
    std::string formula() const;  // human-readable "p/(q0 + q1 k1 + q2 k2)"
};

// The 9 + 9 + 4 + 4 + 1 = 27 built-in constraints, ids A1..A9, B1..B9,
// C1..C4, D1..D4, G1.
const std::vector<FractionalConstraint>& builtin_constraints();

struct KappaPoint {
    Rational kappa1, kappa2;
};

// 0 <= k1, k2 < 1 and k1 + k2 <= 3/2.
bool feasible(const KappaPoint& kp);

// (k1+k2)*theta >= 3*theta - 1.
bool side_condition_holds(const KappaPoint& kp, const Rational& theta);

struct ThetaLimit {
    Rational theta_star;
    std::vector<std::string> active_ids;  // all constraints attaining the min
    bool side_condition_ok = true;
};

// Exact min over the selected families (all by default).  Throws on an
// infeasible point.
ThetaLimit theta_limit(const KappaPoint& kp,
                       const std::set<Family>* families = nullptr);

// Equalizes three constraints: solves p_i*D_j = p_j*D_i, p_i*D_k = p_k*D_i.
// Returns the point and the common value, or nullopt when the 2x2 system is
// singular or a denominator fails to be positive at the solution.
std::optional<std::pair<KappaPoint, Rational>> solve_vertex(
    const FractionalConstraint& ci, const FractionalConstraint& cj,
    const FractionalConstraint& ck);

struct OptimizeResult {
    KappaPoint kp;
    Rational theta_star;
    std::vector<std::string> active_ids;
};

// Exact grid max of theta_limit over the feasible region (grid_n x grid_n),
// refine_rounds factor-4 window shrinks around the incumbent, then vertex
// polishing over triples of the near-active constraints.
OptimizeResult optimize(int grid_n, int refine_rounds,
                        const std::set<Family>* families = nullptr);

// E(theta,k): the N-exponent of the best-case Holder + double-large-sieve
// bound; piecewise linear and strictly increasing in theta on (0,1).
Rational holder_exponent(const Rational& theta, int k);

// The unique root of E(., k): largest theta with E <= 0.
Rational holder_best_theta(int k);

}  // namespace ppc
