#include "pskrx/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pskrx {

namespace {

void check_capacity(int n_modes) {
    if (n_modes > kMaxModes)
        throw std::invalid_argument("receiver exceeds the 2^n enumeration cap of " +
                                    std::to_string(kMaxModes) + " modes");
}

// p(y|x) p(x) for a pattern given as a bit mask, using a precomputed
// click-probability row.
double weighted_likelihood(const std::vector<double>& q_row, std::uint32_t mask, int n,
                           double prior) {
    double p = prior;
    for (int j = 0; j < n; ++j)
        p *= ((mask >> j) & 1u) ? q_row[static_cast<std::size_t>(j)]
                                : 1.0 - q_row[static_cast<std::size_t>(j)];
    return p;
}

}  // namespace

std::vector<Amplitude> output_amplitudes(const ReceiverParams& params, Amplitude alpha_x) {
    params.validate();
    std::vector<Amplitude> out(params.u.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = params.u[j] * alpha_x + params.eps[j];
    return out;
}

std::vector<double> mean_photon_numbers(const ReceiverParams& params, Amplitude alpha_x,
                                        const NoiseModel& noise) {
    params.validate();
    noise.validate();
    std::vector<double> out(params.u.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const Amplitude s = params.u[j] * alpha_x;
        const Amplitude& e = params.eps[j];
        const double cross = s.real() * e.real() + s.imag() * e.imag();  // Re(conj(s) e)
        // The three-term sum is >= (|s| - |e|)^2 >= 0 for visibility <= 1,
        // but can round slightly negative when the mode is nearly nulled.
        out[j] = std::max(
            0.0, noise.efficiency * (std::norm(s) + std::norm(e) + 2.0 * noise.visibility * cross));
    }
    return out;
}

double click_probability(double mean_photons, double dark_prob) {
    if (!(mean_photons >= 0.0))
        throw std::invalid_argument("mean photon number must be nonnegative");
    if (!(dark_prob >= 0.0 && dark_prob < 1.0))
        throw std::invalid_argument("dark_prob must lie in [0, 1)");
    return 1.0 - (1.0 - dark_prob) * std::exp(-mean_photons);
}

std::vector<std::vector<double>> click_probability_table(const ReceiverParams& params,
                                                         const PskAlphabet& alphabet,
                                                         const NoiseModel& noise) {
    params.validate();
    alphabet.validate();
    noise.validate();
    std::vector<std::vector<double>> table(static_cast<std::size_t>(alphabet.m));
    for (int x = 0; x < alphabet.m; ++x) {
        const std::vector<double> photons =
            mean_photon_numbers(params, alphabet.amplitude(x), noise);
        auto& row = table[static_cast<std::size_t>(x)];
        row.resize(photons.size());
        for (std::size_t j = 0; j < photons.size(); ++j)
            row[j] = click_probability(photons[j], noise.dark_prob);
    }
    return table;
}

double pattern_probability(const ReceiverParams& params, const PskAlphabet& alphabet,
                           const NoiseModel& noise, int state, const ClickPattern& y) {
    if (state < 0 || state >= alphabet.m) throw std::invalid_argument("state index out of range");
    y.validate(params.modes());
    const auto table = click_probability_table(params, alphabet, noise);
    return weighted_likelihood(table[static_cast<std::size_t>(state)], y.to_mask(),
                               params.modes(), 1.0);
}

double success_probability(const ReceiverParams& params, const PskAlphabet& alphabet,
                           const NoiseModel& noise) {
    check_capacity(params.modes());
    const auto table = click_probability_table(params, alphabet, noise);
    const int n = params.modes();
    const int m = alphabet.m;
    const std::uint32_t patterns = 1u << n;
    double total = 0.0;
    for (std::uint32_t mask = 0; mask < patterns; ++mask) {
        double best = 0.0;
        for (int x = 0; x < m; ++x) {
            const double p = weighted_likelihood(table[static_cast<std::size_t>(x)], mask, n,
                                                 alphabet.prior(x));
            if (p > best) best = p;
        }
        total += best;
    }
    return total;
}

int ml_decode(const ReceiverParams& params, const PskAlphabet& alphabet, const NoiseModel& noise,
              const ClickPattern& y) {
    y.validate(params.modes());
    const auto table = click_probability_table(params, alphabet, noise);
    const std::uint32_t mask = y.to_mask();
    int best_x = 0;
    double best = -1.0;
    for (int x = 0; x < alphabet.m; ++x) {
        const double p = weighted_likelihood(table[static_cast<std::size_t>(x)], mask,
                                             params.modes(), alphabet.prior(x));
        if (p > best) {  // strict: ties keep the smaller index
            best = p;
            best_x = x;
        }
    }
    return best_x;
}

DecodeTable build_decode_table(const ReceiverParams& params, const PskAlphabet& alphabet,
                               const NoiseModel& noise) {
    check_capacity(params.modes());
    const auto table = click_probability_table(params, alphabet, noise);
    const int n = params.modes();
    const std::uint32_t patterns = 1u << n;
    DecodeTable out;
    out.n_modes = n;
    out.entries.resize(patterns);
    for (std::uint32_t mask = 0; mask < patterns; ++mask) {
        int best_x = 0;
        double best = -1.0;
        double evidence = 0.0;
        for (int x = 0; x < alphabet.m; ++x) {
            const double p = weighted_likelihood(table[static_cast<std::size_t>(x)], mask, n,
                                                 alphabet.prior(x));
            evidence += p;
            if (p > best) {
                best = p;
                best_x = x;
            }
        }
        // Patterns of probability zero can never be observed; their posterior
        // is reported as 0 rather than dividing by zero evidence.
        out.entries[mask] = {best_x, evidence > 0.0 ? best / evidence : 0.0};
    }
    return out;
}

}  // namespace pskrx
