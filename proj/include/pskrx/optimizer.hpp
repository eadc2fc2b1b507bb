#pragma once

#include <cstdint>

#include "pskrx/sweep.hpp"
#include "pskrx/types.hpp"

namespace pskrx {

struct OptimizerSettings {
    int starts = 64;            // random multi-starts, on top of the built-in warm starts
    std::uint64_t seed = 1;
    int max_iters = 2000;       // direct-search iteration cap per local search
    double x_tolerance = 1e-9;  // simplex diameter at which a search counts as converged
    double f_tolerance = 1e-12; // objective spread / polish improvement floor
    std::vector<ReceiverParams> warm_starts;  // extra user-supplied starting receivers

    void validate() const;
};

struct OptimizationResult {
    ReceiverParams params;
    double success = 0.0;
    int start_index = -1;  // which start produced the winner (warm starts first)
    int iterations = 0;
    bool converged = false;
};

/// Embeds n-1 hyperspherical angles as a unit n-vector:
/// u_k = cos(a_k) * prod_{j<k} sin(a_j), u_n = prod_j sin(a_j).
/// Angles are unconstrained; the image is always exactly unit norm.
std::vector<double> sphere_embed(const std::vector<double>& angles);

/// Inverse of sphere_embed on unit vectors (atan2 chain). Round-trips any
/// unit vector; inputs are normalized defensively first.
std::vector<double> sphere_angles(const std::vector<double>& unit_vector);

/// Flattens a receiver into the 3n-1 real optimization coordinates:
/// n-1 sphere angles for u, then (Re, Im) of each displacement.
std::vector<double> encode_receiver(const ReceiverParams& params);

/// Rebuilds a receiver from coordinates; length must be 3n-1 for some n >= 1.
ReceiverParams decode_receiver(const std::vector<double>& theta);

/// Success probability of the decoded receiver; smooth in theta, which is
/// what makes the gradient polish meaningful.
double objective(const std::vector<double>& theta, const PskAlphabet& alphabet,
                 const NoiseModel& noise);

/// Multi-start maximization of the success probability over all n-mode
/// receivers. Every start runs an independent Nelder-Mead pass followed by a
/// finite-difference gradient polish; starts execute in parallel and the
/// merge is deterministic (best success, ties toward the lowest start
/// index), so results are reproducible for a fixed seed regardless of thread
/// count. Built-in warm starts: the closed-form QPSK receiver (m = 4,
/// n = 2), per-state nulling receivers, the fixed-displacement Kennedy
/// variant, and zero displacement. Returns best-so-far with
/// converged = false when no start converges.
OptimizationResult optimize(const PskAlphabet& alphabet, int n_modes, const NoiseModel& noise,
                            const OptimizerSettings& settings);

/// Optimizes every (alpha, n) cell of the grid and returns one "optimized"
/// row per cell, alpha-major, in the order given. Within one alpha, winners
/// at smaller n are re-used (zero-padded to the larger n) as extra warm
/// starts, so reported success never decreases when modes are added.
std::vector<SweepResult> sweep_modes(int m, const std::vector<double>& alphas,
                                     const std::vector<int>& n_list, const NoiseModel& noise,
                                     const OptimizerSettings& settings);

}  // namespace pskrx
