// Acceptance suite: end-to-end checks of the shipped claims, one line each.
// Every check recomputes its own reference and pins an explicit tolerance;
// failures print enough detail to relocate the offending point.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "pskrx/baselines.hpp"
#include "pskrx/core.hpp"
#include "pskrx/montecarlo.hpp"
#include "pskrx/optimizer.hpp"
#include "pskrx/rng.hpp"

namespace {

using namespace pskrx;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index, name,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* format, ...) {
    va_list args;
    va_start(args, format);
    char buffer[512];
    std::vsnprintf(buffer, sizeof(buffer), format, args);
    va_end(args);
    return buffer;
}

OptimizerSettings standard_settings() {
    OptimizerSettings settings;
    settings.starts = 64;
    settings.seed = 1;
    return settings;
}

// 1. Pattern-enumeration engine equals the closed-form receiver success
//    (1/4)(1 + 2 e^{-(1+a^2)/2} sinh(a/sqrt(2)))^2 within 1e-12, in under 1 s.
void criterion_engine_vs_closed_form() {
    const auto start = Clock::now();
    const ReceiverParams rx = baselines::analytic_receiver_qpsk();
    double worst = 0.0;
    for (int i = 0; i <= 15; ++i) {
        const double alpha = 0.1 * i;
        const double engine = success_probability(rx, PskAlphabet(4, alpha), NoiseModel::ideal());
        const double closed = baselines::analytic_success_qpsk(alpha);
        worst = std::max(worst, std::fabs(engine - closed));
    }
    const double elapsed = seconds_since(start);
    const bool ok = worst <= 1e-12 && elapsed < 1.0;
    report(1, "engine matches closed-form receiver success",
           ok, fmt("max |engine-closed| = %.3g over 16 amplitudes, %.3f s", worst, elapsed));
}

// 2. Optimized two-mode QPSK beats heterodyne for weak amplitudes and never
//    beats Helstrom (slack >= -1e-9), with 64 starts in under 2 minutes.
void criterion_sql_beating() {
    const auto start = Clock::now();
    const OptimizerSettings settings = standard_settings();
    double min_margin = 1.0;
    double min_slack = 1.0;
    bool ok = true;
    for (int i = 1; i <= 5; ++i) {
        const double alpha = 0.1 * i;
        const double optimized =
            optimize(PskAlphabet(4, alpha), 2, NoiseModel::ideal(), settings).success;
        const double margin = optimized - baselines::heterodyne_qpsk(alpha);
        const double slack = baselines::helstrom_mpsk(4, alpha) - optimized;
        min_margin = std::min(min_margin, margin);
        min_slack = std::min(min_slack, slack);
        ok = ok && margin > 0.0 && slack >= -1e-9;
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 120.0;
    report(2, "optimized QPSK beats heterodyne below Helstrom", ok,
           fmt("min margin over heterodyne = %.3g, min Helstrom slack = %.3g, %.1f s",
               min_margin, min_slack, elapsed));
}

// 3. The optimized-minus-closed-form gap stays below 5e-3 for alpha <= 0.5
//    and grows (to within 5e-6 optimizer jitter) toward alpha = 1.5.
void criterion_near_optimality_gap() {
    const OptimizerSettings settings = standard_settings();
    std::vector<double> gaps;
    for (int i = 1; i <= 15; ++i) {
        const double alpha = 0.1 * i;
        const double optimized =
            optimize(PskAlphabet(4, alpha), 2, NoiseModel::ideal(), settings).success;
        gaps.push_back(optimized - baselines::analytic_success_qpsk(alpha));
    }
    double worst_weak = 0.0;
    for (int i = 0; i < 5; ++i) worst_weak = std::max(worst_weak, gaps[i]);
    double worst_drop = 0.0;
    for (std::size_t i = 1; i < gaps.size(); ++i)
        worst_drop = std::max(worst_drop, gaps[i - 1] - gaps[i]);
    const bool ok = worst_weak <= 5e-3 && worst_drop <= 5e-6;
    report(3, "closed-form receiver is near-optimal at weak amplitude", ok,
           fmt("max gap for alpha<=0.5 = %.3g (bound 5e-3), max adjacent decrease = %.3g",
               worst_weak, worst_drop));
}

// 4. Mode-count crossover: two modes suffice at weak signal, three modes
//    capture the n<=5 optimum at strong signal, both within 1e-3 error.
void criterion_mode_crossover() {
    const auto start = Clock::now();
    std::vector<double> alphas;
    std::vector<double> photon_grid;
    for (int i = 1; i <= 30; ++i) {
        photon_grid.push_back(0.1 * i);
        alphas.push_back(std::sqrt(0.1 * i));
    }
    const std::vector<int> n_list = {2, 3, 4, 5};
    const auto rows =
        sweep_modes(4, alphas, n_list, NoiseModel::ideal(), standard_settings());

    double worst_weak = 0.0;
    double worst_strong = 0.0;
    double worst_strong_at = 0.0;
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        std::vector<double> error(n_list.size());
        for (std::size_t ni = 0; ni < n_list.size(); ++ni)
            error[ni] = rows[ai * n_list.size() + ni].error_rate;
        const double photons = photon_grid[ai];
        if (photons <= 0.5 + 1e-9)
            worst_weak = std::max(
                worst_weak, error[0] - *std::min_element(error.begin(), error.end()));
        if (photons >= 1.0 - 1e-9) {
            const double excess = error[1] - *std::min_element(error.begin() + 1, error.end());
            if (excess > worst_strong) {
                worst_strong = excess;
                worst_strong_at = photons;
            }
        }
    }
    const double elapsed = seconds_since(start);
    const bool ok = worst_weak <= 1e-3 && worst_strong <= 1e-3 && elapsed < 900.0;
    report(4, "two modes suffice when weak, three when strong", ok,
           fmt("n=2 excess error %.3g (photons<=0.5), n=3 excess %.3g at photons=%.1f "
               "(bound 1e-3), %.1f s",
               worst_weak, worst_strong, worst_strong_at, elapsed));
}

// 5. M-PSK frontier: optimized receivers (best of n = 2, 3) beat heterodyne
//    somewhere for M = 3 and nowhere on the grid for M = 5, 6.
void criterion_mpsk_frontier() {
    const OptimizerSettings settings = standard_settings();
    bool m3_beats = false;
    double m3_best_margin = -1.0;
    bool high_m_ok = true;
    std::string violation;
    for (const int m : {3, 5, 6}) {
        for (int i = 1; i <= 15; ++i) {
            const double alpha = 0.1 * i;
            baselines::QuadratureSpec quad;
            quad.m = m;
            quad.alpha = alpha;
            const double het = baselines::heterodyne_mpsk(quad);
            double best = 0.0;
            for (const int n : {2, 3})
                best = std::max(
                    best, optimize(PskAlphabet(m, alpha), n, NoiseModel::ideal(), settings)
                              .success);
            if (m == 3) {
                m3_best_margin = std::max(m3_best_margin, best - het);
                if (best > het) m3_beats = true;
            } else if (best > het) {
                high_m_ok = false;
                if (violation.empty())
                    violation = fmt("; first violation M=%d alpha=%.1f by %.3g", m, alpha,
                                    best - het);
            }
        }
    }
    const bool ok = m3_beats && high_m_ok;
    report(5, "optimized receivers respect the M-PSK heterodyne frontier", ok,
           fmt("M=3 best margin = %.3g, M in {5,6} all below heterodyne = %s%s",
               m3_best_margin, high_m_ok ? "yes" : "no", violation.c_str()));
}

// 6. The 1D closed form for heterodyne M-PSK agrees with the independent 2D
//    wedge quadrature to 1e-6, and with the QPSK erf expression to 1e-10.
void criterion_heterodyne_oracle() {
    const double alphas[] = {0.0, 0.25, 0.5, 1.0, 2.0};
    double worst_wedge = 0.0;
    double worst_qpsk = 0.0;
    for (int m = 2; m <= 8; ++m) {
        for (const double alpha : alphas) {
            baselines::QuadratureSpec quad;
            quad.m = m;
            quad.alpha = alpha;
            const double closed = baselines::heterodyne_mpsk(quad);
            worst_wedge = std::max(
                worst_wedge, std::fabs(closed - baselines::heterodyne_wedge_oracle(quad)));
            if (m == 4)
                worst_qpsk = std::max(
                    worst_qpsk, std::fabs(closed - baselines::heterodyne_qpsk(alpha)));
        }
    }
    const bool ok = worst_wedge <= 1e-6 && worst_qpsk <= 1e-10;
    report(6, "heterodyne closed form matches the wedge oracle", ok,
           fmt("max |1D-2D| = %.3g (bound 1e-6), max QPSK |1D-erf| = %.3g (bound 1e-10)",
               worst_wedge, worst_qpsk));
}

// 7. Helstrom sanity: binary closed form (1+sqrt(1-e^{-4a^2}))/2 within
//    1e-12, and exactly 1/m at zero amplitude.
void criterion_helstrom_sanity() {
    double worst = 0.0;
    for (int i = 0; i <= 15; ++i) {
        const double alpha = 0.1 * i;
        const double closed = 0.5 * (1.0 + std::sqrt(1.0 - std::exp(-4.0 * alpha * alpha)));
        worst = std::max(worst, std::fabs(baselines::helstrom_mpsk(2, alpha) - closed));
    }
    bool zero_exact = true;
    for (int m = 2; m <= 8; ++m)
        zero_exact = zero_exact && baselines::helstrom_mpsk(m, 0.0) == 1.0 / m;
    const bool ok = worst <= 1e-12 && zero_exact;
    report(7, "Helstrom bound reproduces its closed forms", ok,
           fmt("max binary deviation = %.3g, zero-amplitude exact = %s", worst,
               zero_exact ? "yes" : "no"));
}

// 8. Monte Carlo under experimental conditions (efficiency 0.66, dark count
//    2.5e-3) agrees with the exact degraded success within 3 binomial sigma
//    and preserves the receiver ordering optimal > optamp > nulling.
void criterion_experimental_simulation() {
    NoiseModel noise;
    noise.efficiency = 0.66;
    noise.dark_prob = 2.5e-3;
    TrialPlan plan;
    plan.shots_per_run = 40000;
    plan.runs = 5;
    plan.seed = 1;

    double worst_z = 0.0;
    bool ordered = true;
    for (const double alpha : {0.2, 0.4, 0.6}) {
        const PskAlphabet alphabet(4, alpha);
        const ReceiverParams receivers[] = {baselines::analytic_receiver_qpsk(),
                                            baselines::kennedy_optamp_qpsk(),
                                            baselines::kennedy_nulling_qpsk(alpha)};
        double estimates[3];
        for (int r = 0; r < 3; ++r) {
            const double exact = success_probability(receivers[r], alphabet, noise);
            const TrialReport rep = simulate(alphabet, receivers[r], noise, plan);
            const double sigma =
                std::sqrt(exact * (1.0 - exact) / static_cast<double>(plan.total_shots()));
            worst_z = std::max(worst_z, std::fabs(rep.success_estimate - exact) / sigma);
            estimates[r] = rep.success_estimate;
        }
        ordered = ordered && estimates[0] > estimates[1] && estimates[1] > estimates[2];
    }
    const bool ok = worst_z <= 3.0 && ordered;
    report(8, "Monte Carlo reproduces the degraded-receiver ordering", ok,
           fmt("max |z| = %.2f (bound 3), ordering optimal > optamp > nulling = %s", worst_z,
               ordered ? "yes" : "no"));
}

// 9. Conditional pattern distributions are normalized for randomized
//    receivers, alphabets, and noise across 1 to 6 modes.
void criterion_normalization() {
    Xoshiro256 rng(2026);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        const int m = 2 + static_cast<int>(rng.next() % 7);

        std::vector<double> angles(n - 1);
        for (double& a : angles) a = rng.uniform(-3.141592653589793, 3.141592653589793);
        ReceiverParams params;
        params.u = sphere_embed(angles);
        params.eps.resize(n);
        for (auto& e : params.eps) e = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};

        std::vector<double> priors(m);
        double total = 0.0;
        for (double& p : priors) {
            p = rng.uniform(0.1, 1.0);
            total += p;
        }
        for (double& p : priors) p /= total;
        PskAlphabet alphabet(m, rng.uniform(0.0, 2.5), priors);
        alphabet.validate();

        NoiseModel noise;
        noise.efficiency = rng.uniform(0.05, 1.0);
        noise.dark_prob = rng.uniform(0.0, 0.3);
        noise.visibility = rng.uniform(0.0, 1.0);

        const int state = static_cast<int>(rng.next() % static_cast<std::uint64_t>(m));
        double sum = 0.0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
            sum += pattern_probability(params, alphabet, noise, state,
                                       ClickPattern::from_mask(mask, n));
        worst = std::max(worst, std::fabs(sum - 1.0));
    }
    const bool ok = worst <= 1e-12;
    report(9, "click-pattern distributions are normalized", ok,
           fmt("max |sum - 1| = %.3g over 1000 randomized instances", worst));
}

}  // namespace

int main() {
    std::printf("pskrx acceptance suite\n");
    const auto start = Clock::now();

    criterion_engine_vs_closed_form();
    criterion_sql_beating();
    criterion_near_optimality_gap();
    criterion_mode_crossover();
    criterion_mpsk_frontier();
    criterion_heterodyne_oracle();
    criterion_helstrom_sanity();
    criterion_experimental_simulation();
    criterion_normalization();

    std::printf("%d of 9 criteria failed, %.1f s total\n", g_failures,
                seconds_since(start));
    return g_failures == 0 ? 0 : 1;
}
