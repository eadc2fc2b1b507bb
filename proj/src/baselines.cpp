#include "pskrx/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pskrx/quadrature.hpp"

namespace pskrx::baselines {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_alpha(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("alpha must be finite and nonnegative");
}

}  // namespace

void QuadratureSpec::validate() const {
    if (m < 2) throw std::invalid_argument("alphabet order m must be at least 2");
    check_alpha(alpha);
    if (!(quad_tolerance > 0.0))
        throw std::invalid_argument("quad_tolerance must be positive");
}

double heterodyne_qpsk(double alpha) {
    check_alpha(alpha);
    const double root = 1.0 + std::erf(alpha * kInvSqrt2);
    return 0.25 * root * root;
}

double heterodyne_mpsk(const QuadratureSpec& spec) {
    spec.validate();
    const double a = spec.alpha;
    const double upper = a * std::sin(kPi / spec.m);
    const double a_sq = a * a;
    const auto integrand = [a_sq](double u) {
        return std::exp(-u * u) * std::erf(std::sqrt(std::max(0.0, a_sq - u * u)));
    };
    const QuadratureResult q =
        integrate_adaptive(integrand, 0.0, upper, 0.1 * spec.quad_tolerance, 4000);
    if (!q.converged)
        throw std::runtime_error("heterodyne quadrature did not converge (error estimate " +
                                 std::to_string(q.error_estimate) + ")");
    return std::exp(-a_sq) / spec.m + 0.5 * std::erf(upper) + q.value / std::sqrt(kPi);
}

double heterodyne_wedge_oracle(const QuadratureSpec& spec) {
    spec.validate();
    // Heterodyne outcomes for input amplitude a land in a 2D Gaussian of unit
    // covariance centered at x0 = a * sqrt(2) on the real axis (scaled
    // quadrature coordinates). Success is its mass inside the decision wedge
    // |arg| < pi/m, integrated in polar form. The tail beyond x0 + 12 is
    // below e^{-72}, far under any tolerance used here.
    const double x0 = spec.alpha * std::sqrt(2.0);
    const double wedge = kPi / spec.m;
    const double r_max = x0 + 12.0;
    const auto density = [x0](double r, double theta) {
        const double d_sq = r * r - 2.0 * r * x0 * std::cos(theta) + x0 * x0;
        return r * std::exp(-0.5 * d_sq) / (2.0 * kPi);
    };
    const QuadratureResult q =
        integrate_2d(density, 0.0, r_max, -wedge, wedge, 0.5 * spec.quad_tolerance, 12, 256);
    if (!q.converged)
        throw std::runtime_error("wedge quadrature did not converge (error estimate " +
                                 std::to_string(q.error_estimate) + ")");
    return q.value;
}

double helstrom_mpsk(int m, double alpha) {
    if (m < 2) throw std::invalid_argument("alphabet order m must be at least 2");
    check_alpha(alpha);
    // All states coincide at alpha = 0; picking any fixed state is optimal.
    if (alpha == 0.0) return 1.0 / m;

    const double a_sq = alpha * alpha;
    std::vector<std::complex<double>> gram(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double phase = 2.0 * kPi * j / m;
        gram[static_cast<std::size_t>(j)] =
            std::exp(-a_sq * (1.0 - std::complex<double>(std::cos(phase), std::sin(phase))));
    }

    // The Gram matrix is circulant, so its eigenvalues are the DFT of the
    // first row. They are real; imaginary parts cancel pairwise.
    std::vector<double> eigen(static_cast<std::size_t>(m));
    double largest = 0.0;
    for (int k = 0; k < m; ++k) {
        double lambda = 0.0;
        for (int j = 0; j < m; ++j) {
            const double phase = -2.0 * kPi * k * j / m;
            const std::complex<double> w(std::cos(phase), std::sin(phase));
            lambda += (gram[static_cast<std::size_t>(j)] * w).real();
        }
        eigen[static_cast<std::size_t>(k)] = lambda;
        largest = std::max(largest, lambda);
    }

    double sum_roots = 0.0;
    const double floor_tol = -1e-9 * std::max(largest, 1.0);
    for (double lambda : eigen) {
        if (lambda < floor_tol)
            throw std::runtime_error("Gram eigenvalue unexpectedly negative: " +
                                     std::to_string(lambda));
        sum_roots += std::sqrt(std::max(lambda, 0.0));
    }
    return sum_roots * sum_roots / (static_cast<double>(m) * m);
}

ReceiverParams analytic_receiver_qpsk() {
    ReceiverParams params;
    params.u = {kInvSqrt2, kInvSqrt2};
    params.eps = {Amplitude(0.5, 0.5), Amplitude(-0.5, 0.5)};
    return params;
}

double analytic_success_qpsk(double alpha) {
    check_alpha(alpha);
    const double root =
        1.0 + 2.0 * std::exp(-0.5 * (1.0 + alpha * alpha)) * std::sinh(alpha * kInvSqrt2);
    return 0.25 * root * root;
}

ReceiverParams kennedy_nulling_qpsk(double alpha) {
    check_alpha(alpha);
    ReceiverParams params;
    params.u = {kInvSqrt2, kInvSqrt2};
    params.eps = {Amplitude(alpha * kInvSqrt2, 0.0), Amplitude(alpha * kInvSqrt2, 0.0)};
    return params;
}

ReceiverParams kennedy_optamp_qpsk() {
    ReceiverParams params;
    params.u = {kInvSqrt2, kInvSqrt2};
    params.eps = {Amplitude(0.5, 0.0), Amplitude(0.5, 0.0)};
    return params;
}

double heterodyne_with_efficiency(int m, double alpha, double efficiency) {
    if (!(efficiency > 0.0 && efficiency <= 1.0))
        throw std::invalid_argument("efficiency must lie in (0, 1]");
    QuadratureSpec spec;
    spec.m = m;
    spec.alpha = alpha * std::sqrt(efficiency);
    return heterodyne_mpsk(spec);
}

}  // namespace pskrx::baselines
