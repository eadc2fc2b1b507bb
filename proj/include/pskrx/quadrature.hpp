#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace pskrx {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int evaluations = 0;
};

/// One Gauss-Kronrod 7/15 panel on [a, b]. Returns the 15-point Kronrod
/// value and the embedded 7-point Gauss value; their difference drives the
/// adaptive refinement. Exposed so tests can pin the node table against
/// polynomial exactness (Kronrod: degree 22, Gauss: degree 13).
std::pair<double, double> gauss_kronrod_15(const std::function<double(double)>& f,
                                           double a, double b);

/// Adaptive bisection with Gauss-Kronrod 7/15 panels. Splits the worst
/// interval until the summed |K15 - G7| estimate drops below abs_tol or the
/// interval budget runs out (converged = false in that case).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_intervals = 2000);

/// Gauss-Legendre nodes and weights on [-1, 1], computed at runtime by
/// Newton iteration on the Legendre recurrence. Used by the independent
/// 2D cross-check integrator, which deliberately shares no tables with
/// gauss_kronrod_15.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order);

/// Composite tensor-product Gauss-Legendre integral of f over
/// [ax, bx] x [ay, by], doubling the panel count per axis until two
/// successive refinements agree within abs_tol.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double ax,
                              double bx, double ay, double by, double abs_tol,
                              int order = 12, int max_panels = 256);

}  // namespace pskrx
