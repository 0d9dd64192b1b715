// Pair correlation, gap and pair-distance histograms, Poisson references.
//
// R2(s) = (1/N) #{ ordered pairs i != j : N*||y_i - y_j|| <= s }.  For a
// Poissonian sequence R2(s) -> 2s, the pair-distance histogram flattens at
// density 2, and the scaled gaps follow density e^{-t}.
//
// The sweep counts pairs in O(N log N + output) with two exact two-pointer
// passes over the sorted points (forward pairs N*(y_b - y_a) <= s and wrap
// pairs N*(1 - (y_b - y_a)) <= s, disjoint while s < N/2).  Both passes
// evaluate the same floating-point expressions a brute-force scan would, so
// sweep and oracle agree exactly, not just to tolerance.
//
// "Spacings" in the figure sense is read as the pair-distance histogram
// (density -> 2); the gap histogram is the law of the N circular gaps
// (successor differences plus the wrap-around gap), whose scaled values sum
// to exactly N.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ppc {

enum class Normalization { PerPoint, Probability };

struct Histogram {
    double bin_width = 0.0;
    double t_max = 0.0;
    std::vector<double> masses;       // one per bin [i*w, (i+1)*w)
    std::int64_t sample_count = 0;    // points (gaps) or points (pairs)
    Normalization normalization = Normalization::Probability;
    double overflow_mass = 0.0;       // mass beyond t_max, reported separately
};

// Ordered-pair count behind R2; exposed for the oracle tests.
std::uint64_t pair_count(std::span<const double> sorted_pts, double s);

// pre: points sorted ascending, s < N/2.
double pair_correlation(std::span<const double> sorted_pts, double s);

// Bin i holds (1/N) * ordered pairs with N*||y_i-y_j|| in [i*w, (i+1)*w).
// PerPoint normalization; each bin -> 2w for a PPC sequence.
Histogram pair_correlation_histogram(std::span<const double> sorted_pts,
                                     double bin_width, double t_max);

// The N scaled circular gaps, binned; Probability normalization.
Histogram gap_histogram(std::span<const double> sorted_pts, double bin_width,
                        double t_max);

// Bin i holds exp(-i*w) - exp(-(i+1)*w).
Histogram poisson_reference(double bin_width, double t_max);

// Flat density 2: bin i holds 2*w.  Reference for the pair-distance panel.
Histogram flat_pair_reference(double bin_width, double t_max);

enum class HistMetric { Sup, Chi2 };

// Sup = max |a_i - b_i|; Chi2 = sum (a_i-b_i)^2 / max(b_i, 1e-12).
// Throws on binning mismatch.
double histogram_distance(const Histogram& a, const Histogram& b, HistMetric m);

}  // namespace ppc
