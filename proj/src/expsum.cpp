#include "ppc/expsum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ppc/parallel.hpp"
#include "ppc/sequence.hpp"

namespace ppc {

namespace {

constexpr double kPhaseGuard = 1099511627776.0;  // 2^40
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sinc(double u) {
    if (u == 0.0) return 1.0;
    double pu = std::numbers::pi * u;
    return std::sin(pu) / pu;
}

std::complex<double> e_of(double x) {
    double ph = kTwoPi * frac(x);
    return {std::cos(ph), std::sin(ph)};
}

}  // namespace

Kernel Kernel::triangle(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("kernel scale must be positive");
    return {KernelKind::Triangle, s, 1.0, s};
}

Kernel Kernel::triangle2(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("kernel scale must be positive");
    // (tri_s * tri_s)(0) = integral of tri^2 = 2s/3
    return {KernelKind::Triangle2, s, 2.0 * s / 3.0, s * s};
}

Kernel Kernel::gaussian(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("kernel scale must be positive");
    return {KernelKind::Gaussian, s, 1.0, s * std::sqrt(kTwoPi)};
}

double Kernel::f(double x) const {
    double u = std::fabs(x) / scale;
    switch (kind) {
        case KernelKind::Triangle:
            return u >= 1.0 ? 0.0 : 1.0 - u;
        case KernelKind::Triangle2:
            // self-convolution of the triangle, a cubic B-spline piece
            if (u >= 2.0) return 0.0;
            if (u <= 1.0) return scale * (0.5 * u * u * u - u * u + 2.0 / 3.0);
            return scale * ((2.0 - u) * (2.0 - u) * (2.0 - u) / 6.0);
        case KernelKind::Gaussian:
            return u >= 12.0 ? 0.0 : std::exp(-0.5 * u * u);
    }
    return 0.0;
}

double Kernel::fhat(double xi) const {
    switch (kind) {
        case KernelKind::Triangle: {
            double t = sinc(scale * xi);
            return scale * t * t;
        }
        case KernelKind::Triangle2: {
            double t = sinc(scale * xi);
            return scale * scale * t * t * t * t;
        }
        case KernelKind::Gaussian: {
            double a = std::numbers::pi * scale * xi;
            return scale * std::sqrt(kTwoPi) * std::exp(-2.0 * a * a);
        }
    }
    return 0.0;
}

double Kernel::support_radius() const {
    switch (kind) {
        case KernelKind::Triangle: return scale;
        case KernelKind::Triangle2: return 2.0 * scale;
        case KernelKind::Gaussian: return 12.0 * scale;
    }
    return 0.0;
}

const char* Kernel::name() const {
    switch (kind) {
        case KernelKind::Triangle: return "triangle";
        case KernelKind::Triangle2: return "triangle2";
        case KernelKind::Gaussian: return "gaussian";
    }
    return "?";
}

std::complex<double> exp_sum(const ExpSumQuery& q) {
    if (!(q.alpha > 0.0)) throw std::invalid_argument("exp_sum: alpha must be positive");
    if (!(q.theta > 0.0 && q.theta < 1.0))
        throw std::invalid_argument("exp_sum: theta must lie in (0,1)");
    if (q.k < 1) throw std::invalid_argument("exp_sum: k must be >= 1");
    if (q.y_begin < 1 || q.y_end < q.y_begin)
        throw std::invalid_argument("exp_sum: require 1 <= y_begin <= y_end");
    if (q.y_end > q.y_begin) {
        double top = q.alpha * static_cast<double>(q.k) *
                     pow_theta(static_cast<double>(q.y_end), q.theta);
        if (top > kPhaseGuard)
            throw std::invalid_argument("exp_sum: alpha*k*y^theta exceeds 2^40");
    }
    const double ak = q.alpha * static_cast<double>(q.k);
    const double theta = q.theta;
    const std::int64_t lo = q.y_begin;
    return par::sum<std::complex<double>>(q.y_end - q.y_begin, [=](std::int64_t i) {
        double y = static_cast<double>(lo + i);
        return e_of(ak * pow_theta(y, theta));
    });
}

namespace {

// |sum_y e(k*x_y)|^2-weighted transform sum over k = 1..K0 for the given
// per-point phase values v_y (x_y = frac of the sequence value, or anything
// else for synthetic fixtures).
double fourier_core(std::span<const double> v, std::int64_t K0, double invN,
                    const Kernel& kernel) {
    const std::int64_t n = static_cast<std::int64_t>(v.size());
    double acc = par::sum<double>(K0, [&](std::int64_t ki) {
        double k = static_cast<double>(ki + 1);
        std::complex<double> s =
            par::detail::pairwise_sum<std::complex<double>>(0, n, [&](std::int64_t y) {
                return e_of(k * v[static_cast<std::size_t>(y)]);
            });
        return kernel.fhat(k * invN) * std::norm(s);
    });
    return 2.0 * invN * invN * acc;
}

double direct_core(std::span<const double> x, const Kernel& kernel) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    const double N = static_cast<double>(n);
    const double rad = kernel.support_radius();
    const double radN = rad / N;
    double acc = par::sum<double>(n, [&](std::int64_t i) {
        double s = 0.0;
        const double xi = x[static_cast<std::size_t>(i)];
        for (std::int64_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double d = xi - x[static_cast<std::size_t>(j)];
            auto klo = static_cast<std::int64_t>(std::ceil(-d - radN));
            auto khi = static_cast<std::int64_t>(std::floor(-d + radN));
            for (std::int64_t k = klo; k <= khi; ++k)
                s += kernel.f(N * (d + static_cast<double>(k)));
        }
        return s;
    });
    return acc / N;
}

std::int64_t k_cutoff(std::int64_t N, double eps) {
    return static_cast<std::int64_t>(
        std::ceil(std::pow(static_cast<double>(N), 1.0 + eps)));
}

}  // namespace

double fourier_side(std::int64_t N, double eps, const Kernel& kernel,
                    double alpha, double theta) {
    if (N < 1) throw std::invalid_argument("fourier_side: N must be >= 1");
    if (N > 20000) throw std::invalid_argument("fourier_side: N > 2e4 (cost ~ N^(2+eps))");
    const std::int64_t K0 = k_cutoff(N, eps);
    double top = alpha * static_cast<double>(K0) * pow_theta(static_cast<double>(N), theta);
    if (top > kPhaseGuard)
        throw std::invalid_argument("fourier_side: phase guard 2^40 exceeded");
    SequenceSpec spec{alpha, theta, N, false};
    std::vector<double> x = generate_points(spec);
    return fourier_core(x, K0, 1.0 / static_cast<double>(N), kernel);
}

double fourier_side_points(std::span<const double> pts, double eps, const Kernel& kernel) {
    auto N = static_cast<std::int64_t>(pts.size());
    if (N < 1) throw std::invalid_argument("fourier_side_points: empty point set");
    return fourier_core(pts, k_cutoff(N, eps), 1.0 / static_cast<double>(N), kernel);
}

double direct_side(std::int64_t N, const Kernel& kernel, double alpha, double theta) {
    if (N < 2) throw std::invalid_argument("direct_side: N must be >= 2");
    if (N > 10000) throw std::invalid_argument("direct_side: N > 1e4 (cost ~ N^2)");
    SequenceSpec spec{alpha, theta, N, false};
    std::vector<double> x = generate_points(spec);
    return direct_core(x, kernel);
}

double direct_side_points(std::span<const double> pts, const Kernel& kernel) {
    if (pts.size() < 2) throw std::invalid_argument("direct_side_points: need >= 2 points");
    return direct_core(pts, kernel);
}

double identity_residual(std::int64_t N, const Kernel& kernel, double alpha,
                         double theta, double eps) {
    double d = direct_side(N, kernel, alpha, theta);
    double f = fourier_side(N, eps, kernel, alpha, theta);
    return std::fabs(d - (f - kernel.f_at_0 + kernel.fhat_at_0));
}

}  // namespace ppc
