#include "ppc/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ppc/parallel.hpp"

namespace ppc {

namespace {
constexpr double kPhaseGuard = 1099511627776.0;  // 2^40
}

double frac(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("frac: non-finite input");
    double r = x - std::floor(x);
    // x slightly below an integer can round to 1.0; the invariant is [0,1).
    if (r >= 1.0) r = 0.0;
    return r;
}

double circle_dist(double x) {
    double f = frac(x);
    return std::min(f, 1.0 - f);
}

double pow_theta(double y, double theta) {
    return std::exp(theta * std::log(y));
}

bool is_square(std::int64_t n) {
    if (n < 0) return false;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    for (std::int64_t m = std::max<std::int64_t>(0, r - 1); m <= r + 1; ++m)
        if (m * m == n) return true;
    return false;
}

std::int64_t max_safe_n(double alpha, double theta) {
    // alpha * n^theta <= 2^40  <=>  n <= (2^40/alpha)^(1/theta)
    double lim = std::pow(kPhaseGuard / alpha, 1.0 / theta);
    if (lim >= 9.2e18) return std::numeric_limits<std::int64_t>::max();
    return static_cast<std::int64_t>(lim);
}

void validate(const SequenceSpec& spec) {
    if (!(spec.alpha > 0.0) || !std::isfinite(spec.alpha))
        throw std::invalid_argument("SequenceSpec: alpha must be positive and finite");
    if (!(spec.theta > 0.0 && spec.theta < 1.0))
        throw std::invalid_argument("SequenceSpec: theta must lie in (0,1)");
    if (spec.n < 1 || spec.n > 100'000'000)
        throw std::invalid_argument("SequenceSpec: n must lie in [1, 1e8]");
    std::int64_t safe = max_safe_n(spec.alpha, spec.theta);
    if (spec.n > safe)
        throw std::invalid_argument(
            "SequenceSpec: alpha*n^theta exceeds 2^40; maximal safe n = " +
            std::to_string(safe));
}

std::vector<double> generate_points(const SequenceSpec& spec) {
    validate(spec);
    std::vector<std::int64_t> idx;
    idx.reserve(static_cast<std::size_t>(spec.n));
    for (std::int64_t i = 1; i <= spec.n; ++i) {
        if (spec.exclude_squares && is_square(i)) continue;
        idx.push_back(i);
    }
    std::vector<double> pts(idx.size());
    par::for_chunks(static_cast<std::int64_t>(idx.size()),
                    [&](std::int64_t, std::int64_t lo, std::int64_t hi) {
                        for (std::int64_t j = lo; j < hi; ++j) {
                            double v = spec.alpha * pow_theta(static_cast<double>(idx[j]), spec.theta);
                            pts[j] = frac(v);
                        }
                    });
    return pts;
}

std::vector<double> sorted_points(const SequenceSpec& spec) {
    std::vector<double> pts = generate_points(spec);
    std::stable_sort(pts.begin(), pts.end());
    return pts;
}

std::vector<double> uniform_points(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("uniform_points: n must be >= 1");
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        pts[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(n);
    return pts;
}

}  // namespace ppc
