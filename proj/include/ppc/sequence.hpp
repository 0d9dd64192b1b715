// Fractional parts of alpha*n^theta and circle arithmetic.
//
// Working precision is binary64.  n^theta is computed as exp(theta*log(n));
// for the advertised ranges (alpha*N^theta <= ~1e5) the absolute mod-1 error
// is ~1e-11, far below the 1/N resolution any statistic here needs.  A hard
// guard refuses configurations where alpha*n^theta exceeds 2^40, at which
// point binary64 would retain fewer than 12 fractional bits.

#pragma once

#include <cstdint>
#include <vector>

namespace ppc {

struct SequenceSpec {
    double alpha = 1.0;            // > 0
    double theta = 1.0 / 3.0;      // in (0,1)
    std::int64_t n = 0;            // number of indices, 1..n
    bool exclude_squares = false;  // drop n = m^2 (theta = 1/2 experiments)
};

// x - floor(x), always in [0,1).  Throws on non-finite input.
double frac(double x);

// Distance to the nearest integer, in [0, 1/2].  Throws on non-finite input.
double circle_dist(double x);

// exp(theta*log(y)); y > 0.
double pow_theta(double y, double theta);

bool is_square(std::int64_t n);

// Largest n with alpha*n^theta <= 2^40.
std::int64_t max_safe_n(double alpha, double theta);

// Throws std::invalid_argument naming the offending field; the precision
// guard message names the maximal safe n.
void validate(const SequenceSpec& spec);

// Point i is frac(alpha * n_i^theta) for the i-th admissible index, in index
// order.  Length = n minus excluded squares.
std::vector<double> generate_points(const SequenceSpec& spec);

// Stable ascending sort of generate_points.
std::vector<double> sorted_points(const SequenceSpec& spec);

// Equally spaced synthetic points i/n, i = 0..n-1 (the CLI's
// --synthetic-uniform mode and a handy exact fixture).
std::vector<double> uniform_points(std::int64_t n);

}  // namespace ppc
