#pragma once

#include "pskrx/types.hpp"

namespace pskrx {

/// Amplitude reaching each detector for input state amplitude alpha_x:
/// gamma_j = u_j * alpha_x + eps_j.
std::vector<Amplitude> output_amplitudes(const ReceiverParams& params, Amplitude alpha_x);

/// Mean photon number seen by each detector under the noise model:
///   n_j = efficiency * (|u_j a|^2 + |eps_j|^2 + 2 * visibility * Re(conj(u_j a) eps_j))
/// which collapses to efficiency * |gamma_j|^2 at unit visibility.
std::vector<double> mean_photon_numbers(const ReceiverParams& params, Amplitude alpha_x,
                                        const NoiseModel& noise);

/// On-off detector click probability for a coherent mode with the given mean
/// photon number: 1 - (1 - dark_prob) * exp(-mean_photons).
double click_probability(double mean_photons, double dark_prob);

/// Per-detector click probabilities for every input state; row x is the
/// vector of click probabilities when state x was sent. Shared by the
/// pattern/success/decode routines so the exponentials are computed once.
std::vector<std::vector<double>> click_probability_table(const ReceiverParams& params,
                                                         const PskAlphabet& alphabet,
                                                         const NoiseModel& noise);

/// p(y | state): product of independent per-mode click factors.
double pattern_probability(const ReceiverParams& params, const PskAlphabet& alphabet,
                           const NoiseModel& noise, int state, const ClickPattern& y);

/// Exact discrimination success probability of the maximum a posteriori
/// decision rule, by full enumeration of all 2^n click patterns:
///   P = sum_y max_x p(y | x) p(x).
double success_probability(const ReceiverParams& params, const PskAlphabet& alphabet,
                           const NoiseModel& noise);

/// Most probable input state given the observed pattern (argmax of
/// p(y|x) p(x); ties resolved toward the smallest state index).
int ml_decode(const ReceiverParams& params, const PskAlphabet& alphabet,
              const NoiseModel& noise, const ClickPattern& y);

/// Decision rule for every one of the 2^n patterns, with posteriors.
DecodeTable build_decode_table(const ReceiverParams& params, const PskAlphabet& alphabet,
                               const NoiseModel& noise);

}  // namespace pskrx
