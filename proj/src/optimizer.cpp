#include "ppc/optimizer.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ppc {

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

double rational_double(const Rational& r) { return static_cast<double>(r); }

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::Global: return "global";
    }
    return "?";
}

Rational FractionalConstraint::denom_at(const Rational& k1, const Rational& k2) const {
    return q0 + q1 * k1 + q2 * k2;
}

Rational FractionalConstraint::value_at(const Rational& k1, const Rational& k2) const {
    Rational d = denom_at(k1, k2);
    if (d <= 0) throw std::domain_error("constraint " + id + ": nonpositive denominator");
    return p / d;
}

std::string FractionalConstraint::formula() const {
    auto term = [](const Rational& c, const char* var) -> std::string {
        if (c == 0) return "";
        std::string s = c > 0 ? " + " : " - ";
        Rational a = abs(c);
        if (a != 1) s += rational_str(a) + "*";
        return s + var;
    };
    return rational_str(p) + "/(" + rational_str(q0) + term(q1, "k1") + term(q2, "k2") + ")";
}

const std::vector<FractionalConstraint>& builtin_constraints() {
    static const std::vector<FractionalConstraint> cs = [] {
        std::vector<FractionalConstraint> v;
        auto add = [&](std::string id, Family f, long p, long q0, long q1, long q2) {
            v.push_back({std::move(id), f, Rational(p), Rational(q0), Rational(q1), Rational(q2)});
        };
        // main case (separated H1, H2)
        add("A1", Family::A, 1, 3, -1, 0);
        add("A2", Family::A, 2, 6, 0, -1);
        add("A3", Family::A, 12, 29, 3, 5);
        add("A4", Family::A, 3, 5, 3, 3);
        add("A5", Family::A, 25, 61, 6, 8);
        add("A6", Family::A, 7, 19, 0, -2);
        add("A7", Family::A, 18, 42, 7, 9);
        add("A8", Family::A, 13, 31, 3, 5);
        add("A9", Family::A, 6, 13, 3, 4);
        // case 2.2 (Y2 small)
        add("B1", Family::B, 2, 6, -1, -1);
        add("B2", Family::B, 3, 8, -1, -1);
        add("B3", Family::B, 8, 21, -1, 1);
        add("B4", Family::B, 2, 3, 2, 2);
        add("B5", Family::B, 17, 45, -16, 0);
        add("B6", Family::B, 5, 15, -2, -4);
        add("B7", Family::B, 12, 30, 1, 3);
        add("B8", Family::B, 9, 23, -1, 1);
        add("B9", Family::B, 4, 9, 1, 2);
        // H1 ~ H2, main case
        add("C1", Family::C, 3, 8, 2, -2);
        add("C2", Family::C, 2, 5, 1, -1);
        add("C3", Family::C, 3, 5, 8, -2);
        add("C4", Family::C, 9, 21, 14, -6);
        // H1 ~ H2, case 2.2
        add("D1", Family::D, 1, 3, 0, -1);
        add("D2", Family::D, 3, 8, 0, -2);
        add("D3", Family::D, 2, 3, 6, -2);
        add("D4", Family::D, 6, 15, 8, -6);
        // kappa-free bound from the first two terms
        add("G1", Family::Global, 3, 8, 0, 0);
        return v;
    }();
    return cs;
}

bool feasible(const KappaPoint& kp) {
    return kp.kappa1 >= 0 && kp.kappa1 < 1 && kp.kappa2 >= 0 && kp.kappa2 < 1 &&
           kp.kappa1 + kp.kappa2 <= Rational(3, 2);
}

bool side_condition_holds(const KappaPoint& kp, const Rational& theta) {
    return (kp.kappa1 + kp.kappa2) * theta >= 3 * theta - 1;
}

ThetaLimit theta_limit(const KappaPoint& kp, const std::set<Family>* families) {
    if (!feasible(kp))
        throw std::invalid_argument("theta_limit: infeasible kappa point");
    ThetaLimit out;
    bool first = true;
    for (const auto& c : builtin_constraints()) {
        if (families && !families->count(c.family)) continue;
        Rational v = c.value_at(kp.kappa1, kp.kappa2);
        if (first || v < out.theta_star) {
            out.theta_star = v;
            out.active_ids.clear();
            first = false;
        }
        if (v == out.theta_star) out.active_ids.push_back(c.id);
    }
    if (first) throw std::invalid_argument("theta_limit: empty family selection");
    out.side_condition_ok = side_condition_holds(kp, out.theta_star);
    return out;
}

std::optional<std::pair<KappaPoint, Rational>> solve_vertex(
    const FractionalConstraint& ci, const FractionalConstraint& cj,
    const FractionalConstraint& ck) {
    // p_i * D_x = p_x * D_i  (x = j, k) as linear equations in (k1, k2)
    auto row = [&](const FractionalConstraint& a, const FractionalConstraint& b) {
        // (a.p*b.q1 - b.p*a.q1) k1 + (a.p*b.q2 - b.p*a.q2) k2 = b.p*a.q0 - a.p*b.q0
        return std::array<Rational, 3>{a.p * b.q1 - b.p * a.q1, a.p * b.q2 - b.p * a.q2,
                                       b.p * a.q0 - a.p * b.q0};
    };
    auto r1 = row(ci, cj);
    auto r2 = row(ci, ck);
    Rational det = r1[0] * r2[1] - r2[0] * r1[1];
    if (det == 0) return std::nullopt;
    KappaPoint kp{(r1[2] * r2[1] - r2[2] * r1[1]) / det,
                  (r1[0] * r2[2] - r2[0] * r1[2]) / det};
    if (ci.denom_at(kp.kappa1, kp.kappa2) <= 0) return std::nullopt;
    return std::make_pair(kp, ci.value_at(kp.kappa1, kp.kappa2));
}

namespace {

struct Incumbent {
    KappaPoint kp{Rational(0), Rational(0)};
    Rational value{-1};
    bool valid = false;

    void offer(const KappaPoint& cand, const std::set<Family>* families) {
        if (!feasible(cand)) return;
        ThetaLimit tl = theta_limit(cand, families);
        if (!tl.side_condition_ok) return;
        if (!valid || tl.theta_star > value) {
            kp = cand;
            value = tl.theta_star;
            valid = true;
        }
    }
};

}  // namespace

OptimizeResult optimize(int grid_n, int refine_rounds, const std::set<Family>* families) {
    if (grid_n < 64) throw std::invalid_argument("optimize: grid_n must be >= 64");

    Incumbent best;
    // window in each kappa coordinate, shrunk by 4 around the incumbent
    Rational lo1(0), hi1(1), lo2(0), hi2(1);
    for (int round = 0; round <= refine_rounds; ++round) {
        for (int i = 0; i <= grid_n; ++i) {
            Rational k1 = lo1 + (hi1 - lo1) * i / grid_n;
            if (k1 >= 1) continue;
            for (int j = 0; j <= grid_n; ++j) {
                Rational k2 = lo2 + (hi2 - lo2) * j / grid_n;
                if (k2 >= 1) continue;
                best.offer({k1, k2}, families);
            }
        }
        if (!best.valid) break;
        Rational w1 = (hi1 - lo1) / 4, w2 = (hi2 - lo2) / 4;
        lo1 = max(Rational(0), best.kp.kappa1 - w1 / 2);
        hi1 = lo1 + w1;
        lo2 = max(Rational(0), best.kp.kappa2 - w2 / 2);
        hi2 = lo2 + w2;
    }
    if (!best.valid) throw std::runtime_error("optimize: no feasible grid point");

    // vertex polishing: equalize triples of the near-active constraints
    std::vector<const FractionalConstraint*> cand;
    {
        std::vector<std::pair<Rational, const FractionalConstraint*>> ranked;
        for (const auto& c : builtin_constraints()) {
            if (families && !families->count(c.family)) continue;
            Rational d = c.denom_at(best.kp.kappa1, best.kp.kappa2);
            if (d <= 0) continue;
            ranked.emplace_back(c.p / d, &c);
        }
        std::sort(ranked.begin(), ranked.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < ranked.size() && i < 6; ++i)
            cand.push_back(ranked[i].second);
    }
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            for (std::size_t k = j + 1; k < cand.size(); ++k)
                if (auto v = solve_vertex(*cand[i], *cand[j], *cand[k]))
                    best.offer(v->first, families);

    ThetaLimit tl = theta_limit(best.kp, families);
    return {best.kp, tl.theta_star, tl.active_ids};
}

Rational holder_exponent(const Rational& theta, int k) {
    if (k < 2) throw std::invalid_argument("holder_exponent: k must be >= 2");
    if (!(theta > 0 && theta < 1))
        throw std::invalid_argument("holder_exponent: theta must lie in (0,1)");
    const Rational kq(k);
    // -1/2 - 3t/2 + 2t(1 - 1/k)
    Rational e = Rational(-1, 2) - Rational(3, 2) * theta + 2 * theta * (1 - 1 / kq);
    // + (1/k) [ (1+t)/2 + max(2t, 4t-(1+t))/2 + max(kt, 2kt-(1+t))/2 ]
    Rational inner = (1 + theta) / 2;
    inner += max(2 * theta, 4 * theta - (1 + theta)) / 2;
    inner += max(kq * theta, 2 * kq * theta - (1 + theta)) / 2;
    return e + inner / kq;
}

Rational holder_best_theta(int k) {
    if (k < 2) throw std::invalid_argument("holder_best_theta: k must be >= 2");
    // E is continuous, piecewise linear, strictly increasing, with the single
    // breakpoint theta = 1/(k-1) (where the k-th-moment max switches branch).
    // Piece roots: (k-1)/(2k-1) below the breakpoint, k/(3k-2) above it.
    Rational r1(k - 1, 2 * k - 1);
    if (k == 2 || r1 <= Rational(1, k - 1)) return r1;
    return Rational(k, 3 * k - 2);
}

}  // namespace ppc
