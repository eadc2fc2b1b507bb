#include "pskrx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace pskrx {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; the rule
// is symmetric). Odd-indexed Kronrod nodes are the embedded Gauss-7 nodes.
constexpr double kKronrodNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr double kKronrodWeights[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278,
};
constexpr double kGaussWeights[4] = {
    0.1294849661688697,
    0.2797053914892767,
    0.3818300505051189,
    0.4179591836734694,
};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace

std::pair<double, double> gauss_kronrod_15(const std::function<double(double)>& f, double a,
                                           double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = kKronrodWeights[7] * f(center);
    double gauss = kGaussWeights[3] * f(center);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    return {kronrod * half, gauss * half};
}

namespace {

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const auto [kronrod, gauss] = gauss_kronrod_15(f, a, b);
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_intervals) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (!(b >= a)) throw std::invalid_argument("integration bounds must satisfy b >= a");
    QuadratureResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }

    std::priority_queue<Panel> queue;
    queue.push(evaluate_panel(f, a, b));
    result.evaluations = 15;
    int intervals = 1;
    double total_error = queue.top().error;

    while (total_error > abs_tol && intervals < max_intervals) {
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = evaluate_panel(f, worst.a, mid);
        const Panel right = evaluate_panel(f, mid, worst.b);
        result.evaluations += 30;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++intervals;
    }

    double total = 0.0;
    total_error = 0.0;
    while (!queue.empty()) {
        total += queue.top().value;
        total_error += queue.top().error;
        queue.pop();
    }
    result.value = total;
    result.error_estimate = total_error;
    result.converged = total_error <= abs_tol;
    return result;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("quadrature order must be positive");
    std::vector<double> nodes(static_cast<std::size_t>(order));
    std::vector<double> weights(static_cast<std::size_t>(order));
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on the Legendre recurrence.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            derivative = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / derivative;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(order - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(order - 1 - i)] = w;
    }
    if (order % 2 == 1) nodes[static_cast<std::size_t>(order / 2)] = 0.0;
    return {nodes, weights};
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double ax,
                              double bx, double ay, double by, double abs_tol, int order,
                              int max_panels) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (!(bx >= ax && by >= ay))
        throw std::invalid_argument("integration bounds must be ordered");
    QuadratureResult result;
    if (ax == bx || ay == by) {
        result.converged = true;
        return result;
    }

    const auto [nodes, weights] = gauss_legendre(order);
    double previous = 0.0;
    for (int panels = 1; panels <= max_panels; panels *= 2) {
        const double hx = (bx - ax) / panels;
        const double hy = (by - ay) / panels;
        double total = 0.0;
        for (int px = 0; px < panels; ++px) {
            const double cx = ax + (px + 0.5) * hx;
            for (int py = 0; py < panels; ++py) {
                const double cy = ay + (py + 0.5) * hy;
                double panel_sum = 0.0;
                for (int i = 0; i < order; ++i) {
                    const double x = cx + 0.5 * hx * nodes[static_cast<std::size_t>(i)];
                    double row = 0.0;
                    for (int j = 0; j < order; ++j)
                        row += weights[static_cast<std::size_t>(j)] *
                               f(x, cy + 0.5 * hy * nodes[static_cast<std::size_t>(j)]);
                    panel_sum += weights[static_cast<std::size_t>(i)] * row;
                }
                total += panel_sum * 0.25 * hx * hy;
            }
        }
        result.evaluations += panels * panels * order * order;
        result.error_estimate = std::abs(total - previous);
        result.value = total;
        if (panels > 1 && result.error_estimate <= abs_tol) {
            result.converged = true;
            return result;
        }
        previous = total;
    }
    return result;
}

}  // namespace pskrx
