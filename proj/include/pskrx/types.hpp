#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace pskrx {

/// Field amplitude in shot-noise units (vacuum quadrature variance 1).
using Amplitude = std::complex<double>;

/// Hard cap on receiver size: success probabilities enumerate all 2^n click
/// patterns, so anything past this is a usage error, not a capacity promise.
inline constexpr int kMaxModes = 24;

/// M-ary phase-shift-keyed alphabet: state k carries amplitude
/// alpha * exp(i 2 pi k / m). Priors are uniform unless given explicitly.
struct PskAlphabet {
    int m = 4;
    double alpha = 0.0;
    std::vector<double> priors;  // empty = uniform 1/m

    PskAlphabet() = default;
    PskAlphabet(int m_, double alpha_) : m(m_), alpha(alpha_) {}
    PskAlphabet(int m_, double alpha_, std::vector<double> priors_)
        : m(m_), alpha(alpha_), priors(std::move(priors_)) {}

    Amplitude amplitude(int k) const;
    double prior(int k) const;
    double mean_photons() const { return alpha * alpha; }

    /// Throws std::invalid_argument on m < 2, alpha < 0, or bad priors
    /// (negative entries, wrong length, sum off 1 by more than 1e-12).
    void validate() const;
};

/// Linear-optics receiver with n on-off detectors. The signal is split over
/// the modes by a real unit vector u and each mode is displaced by eps_j, so
/// mode j of input state x sees amplitude u_j * alpha_x + eps_j.
struct ReceiverParams {
    std::vector<double> u;
    std::vector<Amplitude> eps;

    int modes() const { return static_cast<int>(u.size()); }

    /// Throws std::invalid_argument unless u and eps have equal nonzero
    /// length, every entry is finite, and |u| = 1 within 1e-10.
    void validate() const;
};

/// Detector imperfections applied to every mode identically.
struct NoiseModel {
    double efficiency = 1.0;  // photon survival probability, (0, 1]
    double dark_prob = 0.0;   // dark-count probability per mode per shot, [0, 1)
    double visibility = 1.0;  // interference contrast between signal and displacement, [0, 1]

    void validate() const;
    static NoiseModel ideal() { return NoiseModel{}; }
};

/// Click outcome of one shot: bits[j] is 1 if detector j fired.
struct ClickPattern {
    std::vector<std::uint8_t> bits;

    static ClickPattern from_mask(std::uint32_t mask, int n_modes);
    std::uint32_t to_mask() const;

    /// Throws std::invalid_argument on entries outside {0, 1} or on a
    /// length mismatch against n_modes.
    void validate(int n_modes) const;
};

struct DecodeEntry {
    int best_x = 0;       // maximum-likelihood state, ties broken toward smaller index
    double posterior = 0; // p(best_x | pattern); 0 for patterns of probability zero
};

/// Materialized decision rule: entries are indexed by the click-pattern bit
/// mask (bit j = detector j), so lookup during simulation is a single load.
struct DecodeTable {
    int n_modes = 0;
    std::vector<DecodeEntry> entries;  // size 2^n_modes

    const DecodeEntry& entry(const ClickPattern& y) const;
};

}  // namespace pskrx
