#pragma once

#include "pskrx/types.hpp"

namespace pskrx::baselines {

struct QuadratureSpec {
    int m = 4;
    double alpha = 0.0;
    double quad_tolerance = 1e-9;

    void validate() const;
};

/// Ideal heterodyne success probability for QPSK in closed form:
/// (1/4) * (1 + erf(alpha / sqrt(2)))^2.
double heterodyne_qpsk(double alpha);

/// Ideal heterodyne success probability for M-ary PSK. The Gaussian outcome
/// density integrated over the wedge |arg| < pi/m around the sent state
/// reduces to a single 1D integral,
///   1/m * e^{-a^2} + 1/2 * erf(a sin(pi/m))
///     + 1/sqrt(pi) * Int_0^{a sin(pi/m)} e^{-u^2} erf(sqrt(a^2 - u^2)) du,
/// evaluated with the adaptive Gauss-Kronrod integrator.
double heterodyne_mpsk(const QuadratureSpec& spec);

/// Same quantity by direct 2D integration of the heterodyne outcome density
/// over the decision wedge in polar coordinates. Slower; kept as an
/// independent route to validate heterodyne_mpsk.
double heterodyne_wedge_oracle(const QuadratureSpec& spec);

/// Helstrom (quantum-optimal) success probability for the uniform-prior
/// M-PSK ensemble. The square-root measurement is optimal for this symmetric
/// set, so the answer comes from the Gram circulant's eigenvalues:
///   P = (1/m^2) * (sum_k sqrt(lambda_k))^2,
///   lambda_k = sum_j exp(-a^2 (1 - e^{i 2 pi j / m})) e^{-i 2 pi k j / m}.
double helstrom_mpsk(int m, double alpha);

/// Two-mode QPSK receiver with displacements chosen so the click/no-click
/// exponents take the closed form (1 + a^2 +/- sqrt(2) a) / 2:
/// u = (1, 1)/sqrt(2), eps = ((1+i)/2, (i-1)/2).
ReceiverParams analytic_receiver_qpsk();

/// Closed-form success probability of analytic_receiver_qpsk:
/// (1/4) * (1 + 2 e^{-(1 + a^2)/2} sinh(a / sqrt(2)))^2.
double analytic_success_qpsk(double alpha);

/// Two-mode Kennedy-style QPSK receiver that exactly nulls state k = 2:
/// u = (1, 1)/sqrt(2), eps = (a/sqrt(2), a/sqrt(2)).
ReceiverParams kennedy_nulling_qpsk(double alpha);

/// Kennedy variant with fixed displacement magnitude 1/2 per mode,
/// independent of alpha: u = (1, 1)/sqrt(2), eps = (1/2, 1/2).
ReceiverParams kennedy_optamp_qpsk();

/// Heterodyne baseline with detection efficiency folded in as amplitude
/// damping: heterodyne_mpsk at alpha * sqrt(efficiency).
double heterodyne_with_efficiency(int m, double alpha, double efficiency);

}  // namespace pskrx::baselines
