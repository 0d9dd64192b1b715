// Long exponential sums sum_y e(alpha*k*y^theta) and the two sides of the
// smoothed pair-correlation identity
//
//   direct(N)  = (1/N) sum_{k in Z} sum_{i != j} f(N*(x_i - x_j + k))
//   fourier(N) = (2/N^2) sum_{1 <= k <= ceil(N^(1+eps))} fhat(k/N) |S_k|^2
//   direct(N)  = fourier_full(N) - f(0) + fhat(0) - sum_{j != 0} f(jN),
//
// which is exact; truncating the k-sum leaves the kernel tail as the whole
// residual.  The Gaussian kernel makes that tail negligible at desk scale;
// the triangles have exact compact support (their fhat tail is fat, which is
// precisely what the exact-truncation tests measure).
//
// e(x) = exp(2*pi*i*frac(x)); all reductions are deterministic pairwise.

#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace ppc {

enum class KernelKind { Triangle, Triangle2, Gaussian };

// Even test function with closed-form transform.
//   triangle(s):  f(x) = max(0, 1-|x|/s),           fhat(xi) = s*sinc^2(s*xi)
//   triangle2(s): triangle(s) convolved with itself, fhat(xi) = s^2*sinc^4(s*xi)
//   gaussian(s):  f(x) = exp(-x^2/(2 s^2)),          fhat(xi) = s*sqrt(2*pi)*exp(-2*pi^2*s^2*xi^2)
// sinc(u) = sin(pi*u)/(pi*u).
struct Kernel {
    KernelKind kind;
    double scale;
    double f_at_0;
    double fhat_at_0;

    static Kernel triangle(double s);
    static Kernel triangle2(double s);
    static Kernel gaussian(double s);

    double f(double x) const;
    double fhat(double xi) const;
    // radius beyond which f is treated as exactly 0 (true support for the
    // triangles, 12 standard widths for the gaussian)
    double support_radius() const;
    const char* name() const;
};

struct ExpSumQuery {
    double alpha;
    double theta;          // in (0,1)
    std::int64_t k;        // >= 1
    std::int64_t y_begin;  // half-open [y_begin, y_end), 1 <= y_begin
    std::int64_t y_end;
};

// sum over y in [y_begin, y_end) of e(alpha*k*y^theta).
// Guard: alpha*k*y_end^theta <= 2^40.
std::complex<double> exp_sum(const ExpSumQuery& q);

// (2/N^2) sum_{k=1}^{ceil(N^(1+eps))} fhat(k/N) |sum_{y=1}^{N} e(alpha*k*y^theta)|^2
double fourier_side(std::int64_t N, double eps, const Kernel& kernel,
                    double alpha, double theta);

// (1/N) sum_{k in Z} sum_{i != j} f(N*(x_i - x_j + k)) over the sequence points.
double direct_side(std::int64_t N, const Kernel& kernel, double alpha, double theta);

// Same sums over an arbitrary point set (synthetic fixtures).
double direct_side_points(std::span<const double> pts, const Kernel& kernel);
double fourier_side_points(std::span<const double> pts, double eps, const Kernel& kernel);

// | direct - (fourier - f(0) + fhat(0)) |
double identity_residual(std::int64_t N, const Kernel& kernel, double alpha,
                         double theta, double eps = 0.1);

}  // namespace ppc
