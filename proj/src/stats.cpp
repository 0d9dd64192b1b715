#include "ppc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ppc {

namespace {

bool sorted_ok(std::span<const double> p) {
    return std::is_sorted(p.begin(), p.end());
}

void require_sorted(std::span<const double> p) {
    if (!sorted_ok(p)) throw std::invalid_argument("points must be sorted ascending");
}

std::int64_t bin_count(double bin_width, double t_max) {
    if (!(bin_width > 0.0) || !(t_max > 0.0))
        throw std::invalid_argument("bin_width and t_max must be positive");
    return static_cast<std::int64_t>(std::ceil(t_max / bin_width));
}

}  // namespace

// Both families evaluate the same floating-point expressions a brute-force
// scan over sorted indices would (N*(y_b - y_a) and N*(1 - (y_b - y_a)) with
// a < b), and each predicate is monotone in a and in b even in floating
// point, so the windows are exact and sweep == oracle bit for bit.  The two
// families are disjoint while s < N/2.

std::uint64_t pair_count(std::span<const double> y, double s) {
    const std::size_t n = y.size();
    const double N = static_cast<double>(n);
    std::uint64_t unordered = 0;
    // forward family, counted with a true two-pointer (no re-walk)
    std::size_t b = 1;
    for (std::size_t a = 0; a < n; ++a) {
        if (b < a + 1) b = a + 1;
        while (b < n && N * (y[b] - y[a]) <= s) ++b;
        unordered += static_cast<std::uint64_t>(b - (a + 1));
    }
    // wrap family
    std::size_t w = 1;
    for (std::size_t a = 0; a < n; ++a) {
        if (w < a + 1) w = a + 1;
        while (w < n && !(N * (1.0 - (y[w] - y[a])) <= s)) ++w;
        if (w >= n) break;
        unordered += static_cast<std::uint64_t>(n - w);
    }
    return 2 * unordered;  // ordered pairs, both orders
}

double pair_correlation(std::span<const double> y, double s) {
    if (y.size() < 2) throw std::invalid_argument("pair_correlation: need >= 2 points");
    require_sorted(y);
    const double N = static_cast<double>(y.size());
    if (!(s > 0.0) || !(s < N / 2.0))
        throw std::invalid_argument("pair_correlation: require 0 < s < N/2");
    return static_cast<double>(pair_count(y, s)) / N;
}

Histogram pair_correlation_histogram(std::span<const double> y, double bin_width,
                                     double t_max) {
    if (y.size() < 2) throw std::invalid_argument("pair histogram: need >= 2 points");
    require_sorted(y);
    const double N = static_cast<double>(y.size());
    if (!(t_max < N / 2.0))
        throw std::invalid_argument("pair histogram: require t_max < N/2");
    const std::int64_t nb = bin_count(bin_width, t_max);

    Histogram h;
    h.bin_width = bin_width;
    h.t_max = t_max;
    h.masses.assign(static_cast<std::size_t>(nb), 0.0);
    h.sample_count = static_cast<std::int64_t>(y.size());
    h.normalization = Normalization::PerPoint;

    // collect pairs out to the last bin edge
    const double edge = static_cast<double>(nb) * bin_width;
    std::size_t n = y.size();
    std::size_t b = 1;
    auto deposit = [&](double d) {
        auto i = static_cast<std::int64_t>(std::floor(d / bin_width));
        if (i >= 0 && i < nb) h.masses[static_cast<std::size_t>(i)] += 2.0;  // both orders
    };
    for (std::size_t a = 0; a < n; ++a) {
        b = a + 1;
        while (b < n && N * (y[b] - y[a]) <= edge) {
            deposit(N * (y[b] - y[a]));
            ++b;
        }
    }
    std::size_t w = 1;
    for (std::size_t a = 0; a < n; ++a) {
        if (w < a + 1) w = a + 1;
        while (w < n && !(N * (1.0 - (y[w] - y[a])) <= edge)) ++w;
        if (w >= n) break;
        for (std::size_t j = w; j < n; ++j)
            if (!(N * (y[j] - y[a]) <= edge))  // not already a forward pair
                deposit(N * (1.0 - (y[j] - y[a])));
    }
    double total = 0.0;
    for (auto& m : h.masses) {
        m /= N;
        total += m;
    }
    // every point has N-1 partners in all, so the mass beyond t_max is
    h.overflow_mass = (N - 1.0) - total;
    return h;
}

Histogram gap_histogram(std::span<const double> y, double bin_width, double t_max) {
    if (y.size() < 2) throw std::invalid_argument("gap_histogram: need >= 2 points");
    require_sorted(y);
    const std::size_t n = y.size();
    const double N = static_cast<double>(n);
    const std::int64_t nb = bin_count(bin_width, t_max);

    Histogram h;
    h.bin_width = bin_width;
    h.t_max = t_max;
    h.masses.assign(static_cast<std::size_t>(nb), 0.0);
    h.sample_count = static_cast<std::int64_t>(n);
    h.normalization = Normalization::Probability;

    std::int64_t overflow = 0;
    auto deposit = [&](double gap) {
        double sg = gap * N;
        auto i = static_cast<std::int64_t>(std::floor(sg / bin_width));
        if (i >= 0 && i < nb)
            h.masses[static_cast<std::size_t>(i)] += 1.0;
        else
            ++overflow;
    };
    for (std::size_t i = 0; i + 1 < n; ++i) deposit(y[i + 1] - y[i]);
    deposit(y[0] + 1.0 - y[n - 1]);  // wrap-around gap: exactly N gaps, mean 1

    for (auto& m : h.masses) m /= N;
    h.overflow_mass = static_cast<double>(overflow) / N;
    return h;
}

Histogram poisson_reference(double bin_width, double t_max) {
    const std::int64_t nb = bin_count(bin_width, t_max);
    Histogram h;
    h.bin_width = bin_width;
    h.t_max = t_max;
    h.normalization = Normalization::Probability;
    h.masses.resize(static_cast<std::size_t>(nb));
    for (std::int64_t i = 0; i < nb; ++i)
        h.masses[static_cast<std::size_t>(i)] =
            std::exp(-static_cast<double>(i) * bin_width) -
            std::exp(-static_cast<double>(i + 1) * bin_width);
    h.overflow_mass = std::exp(-static_cast<double>(nb) * bin_width);
    return h;
}

Histogram flat_pair_reference(double bin_width, double t_max) {
    const std::int64_t nb = bin_count(bin_width, t_max);
    Histogram h;
    h.bin_width = bin_width;
    h.t_max = t_max;
    h.normalization = Normalization::PerPoint;
    h.masses.assign(static_cast<std::size_t>(nb), 2.0 * bin_width);
    return h;
}

double histogram_distance(const Histogram& a, const Histogram& b, HistMetric m) {
    if (a.masses.size() != b.masses.size() || a.bin_width != b.bin_width)
        throw std::invalid_argument("histogram_distance: binning mismatch");
    constexpr double kEpsFloor = 1e-12;
    double acc = 0.0;
    for (std::size_t i = 0; i < a.masses.size(); ++i) {
        double d = a.masses[i] - b.masses[i];
        if (m == HistMetric::Sup)
            acc = std::max(acc, std::fabs(d));
        else
            acc += d * d / std::max(b.masses[i], kEpsFloor);
    }
    return acc;
}

}  // namespace ppc
