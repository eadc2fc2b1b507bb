#include "pskrx/types.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pskrx {

Amplitude PskAlphabet::amplitude(int k) const {
    const double phase = 2.0 * std::numbers::pi * k / m;
    return alpha * Amplitude(std::cos(phase), std::sin(phase));
}

double PskAlphabet::prior(int k) const {
    return priors.empty() ? 1.0 / m : priors[static_cast<std::size_t>(k)];
}

void PskAlphabet::validate() const {
    if (m < 2) throw std::invalid_argument("alphabet order m must be at least 2");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("alpha must be finite and nonnegative");
    if (priors.empty()) return;
    if (priors.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("priors must have one entry per state");
    double total = 0.0;
    for (double p : priors) {
        if (!(p >= 0.0) || !std::isfinite(p))
            throw std::invalid_argument("priors must be finite and nonnegative");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("priors must sum to 1 (got " + std::to_string(total) + ")");
}

void ReceiverParams::validate() const {
    if (u.empty()) throw std::invalid_argument("receiver needs at least one mode");
    if (u.size() != eps.size())
        throw std::invalid_argument("u and eps must have the same length");
    double norm_sq = 0.0;
    for (double v : u) {
        if (!std::isfinite(v)) throw std::invalid_argument("u entries must be finite");
        norm_sq += v * v;
    }
    for (const Amplitude& e : eps)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw std::invalid_argument("eps entries must be finite");
    if (std::abs(norm_sq - 1.0) > 1e-10)
        throw std::invalid_argument("u must be a unit vector (|u|^2 = " +
                                    std::to_string(norm_sq) + ")");
}

void NoiseModel::validate() const {
    if (!(efficiency > 0.0 && efficiency <= 1.0))
        throw std::invalid_argument("efficiency must lie in (0, 1]");
    if (!(dark_prob >= 0.0 && dark_prob < 1.0))
        throw std::invalid_argument("dark_prob must lie in [0, 1)");
    if (!(visibility >= 0.0 && visibility <= 1.0))
        throw std::invalid_argument("visibility must lie in [0, 1]");
}

ClickPattern ClickPattern::from_mask(std::uint32_t mask, int n_modes) {
    if (n_modes < 1 || n_modes > kMaxModes)
        throw std::invalid_argument("pattern length out of range");
    ClickPattern y;
    y.bits.resize(static_cast<std::size_t>(n_modes));
    for (int j = 0; j < n_modes; ++j) y.bits[static_cast<std::size_t>(j)] = (mask >> j) & 1u;
    return y;
}

std::uint32_t ClickPattern::to_mask() const {
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) mask |= 1u << j;
    return mask;
}

void ClickPattern::validate(int n_modes) const {
    if (bits.size() != static_cast<std::size_t>(n_modes))
        throw std::invalid_argument("click pattern length does not match receiver modes");
    for (std::uint8_t b : bits)
        if (b > 1) throw std::invalid_argument("click pattern entries must be 0 or 1");
}

const DecodeEntry& DecodeTable::entry(const ClickPattern& y) const {
    y.validate(n_modes);
    return entries[y.to_mask()];
}

}  // namespace pskrx
