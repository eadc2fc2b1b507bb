#include "pskrx/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "pskrx/baselines.hpp"
#include "pskrx/core.hpp"
#include "pskrx/parallel.hpp"
#include "pskrx/rng.hpp"

namespace pskrx {

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

struct LocalOutcome {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Nelder-Mead ascent on f. The starting point is always a simplex vertex and
// the best vertex is only ever replaced by a better one, so the outcome can
// never fall below f(x0); warm starts therefore act as hard floors on the
// final result.
LocalOutcome nelder_mead_max(const Objective& f, const std::vector<double>& x0, int max_iters,
                             double x_tol, double f_tol) {
    const std::size_t d = x0.size();
    const auto g = [&f](const std::vector<double>& x) { return -f(x); };

    std::vector<std::vector<double>> pts(d + 1, x0);
    std::vector<double> val(d + 1);
    for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] += 0.25;
    for (std::size_t i = 0; i <= d; ++i) val[i] = g(pts[i]);

    std::vector<std::size_t> order(d + 1);
    LocalOutcome out;
    for (out.iterations = 0; out.iterations < max_iters; ++out.iterations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&val](std::size_t a, std::size_t b) { return val[a] < val[b]; });
        const std::size_t best = order[0];
        const std::size_t second_worst = order[d > 0 ? d - 1 : 0];
        const std::size_t worst = order[d];

        double diameter = 0.0;
        for (std::size_t i = 0; i <= d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                diameter = std::max(diameter, std::abs(pts[i][k] - pts[best][k]));
        if (val[worst] - val[best] <= f_tol && diameter <= x_tol) {
            out.converged = true;
            break;
        }

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < d; ++k) centroid[k] += pts[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(d);

        const auto blend = [&](double t) {
            std::vector<double> p(d);
            for (std::size_t k = 0; k < d; ++k)
                p[k] = centroid[k] + t * (centroid[k] - pts[worst][k]);
            return p;
        };

        std::vector<double> reflected = blend(1.0);
        const double fr = g(reflected);
        if (fr < val[best]) {
            std::vector<double> expanded = blend(2.0);
            const double fe = g(expanded);
            if (fe < fr) {
                pts[worst] = std::move(expanded);
                val[worst] = fe;
            } else {
                pts[worst] = std::move(reflected);
                val[worst] = fr;
            }
            continue;
        }
        if (fr < val[second_worst]) {
            pts[worst] = std::move(reflected);
            val[worst] = fr;
            continue;
        }

        const bool outside = fr < val[worst];
        std::vector<double> contracted = blend(outside ? 0.5 : -0.5);
        const double fc = g(contracted);
        if ((outside && fc <= fr) || (!outside && fc < val[worst])) {
            pts[worst] = std::move(contracted);
            val[worst] = fc;
            continue;
        }

        for (std::size_t i = 0; i <= d; ++i) {  // shrink toward the best vertex
            if (i == best) continue;
            for (std::size_t k = 0; k < d; ++k)
                pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
            val[i] = g(pts[i]);
        }
    }

    const std::size_t best = static_cast<std::size_t>(
        std::min_element(val.begin(), val.end()) - val.begin());
    out.x = pts[best];
    out.value = -val[best];
    return out;
}

// Central-difference steepest-ascent refinement with backtracking line
// search. Cheap insurance against the simplex stalling on a flat ridge.
void gradient_polish(const Objective& f, LocalOutcome& outcome, double f_tol) {
    constexpr double kStep = 1e-6;
    constexpr int kMaxRounds = 25;
    std::vector<double> x = outcome.x;
    double fx = outcome.value;
    const std::size_t d = x.size();

    for (int round = 0; round < kMaxRounds; ++round) {
        std::vector<double> grad(d);
        double grad_norm = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            const double saved = x[k];
            x[k] = saved + kStep;
            const double fp = f(x);
            x[k] = saved - kStep;
            const double fm = f(x);
            x[k] = saved;
            grad[k] = (fp - fm) / (2.0 * kStep);
            grad_norm += grad[k] * grad[k];
        }
        grad_norm = std::sqrt(grad_norm);
        if (grad_norm < 1e-12) break;

        double t = 0.1 / grad_norm;
        bool improved = false;
        for (int halving = 0; halving < 30; ++halving, t *= 0.5) {
            std::vector<double> trial(d);
            for (std::size_t k = 0; k < d; ++k) trial[k] = x[k] + t * grad[k];
            const double ft = f(trial);
            if (ft > fx) {
                x = std::move(trial);
                const double gain = ft - fx;
                fx = ft;
                improved = gain > f_tol;
                break;
            }
        }
        ++outcome.iterations;
        if (!improved) break;
    }

    outcome.x = std::move(x);
    outcome.value = fx;
}

ReceiverParams uniform_split_receiver(int n_modes) {
    ReceiverParams params;
    params.u.assign(static_cast<std::size_t>(n_modes),
                    1.0 / std::sqrt(static_cast<double>(n_modes)));
    params.eps.assign(static_cast<std::size_t>(n_modes), Amplitude(0.0, 0.0));
    return params;
}

// Zero-padding extra modes leaves the success probability unchanged: the new
// detectors see only dark counts, independent of the sent state.
ReceiverParams pad_receiver(const ReceiverParams& params, int n_modes) {
    ReceiverParams padded = params;
    padded.u.resize(static_cast<std::size_t>(n_modes), 0.0);
    padded.eps.resize(static_cast<std::size_t>(n_modes), Amplitude(0.0, 0.0));
    return padded;
}

}  // namespace

void OptimizerSettings::validate() const {
    if (starts < 0) throw std::invalid_argument("starts must be nonnegative");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be positive");
    if (!(x_tolerance > 0.0) || !(f_tolerance > 0.0))
        throw std::invalid_argument("tolerances must be positive");
}

std::vector<double> sphere_embed(const std::vector<double>& angles) {
    std::vector<double> u(angles.size() + 1);
    double sin_prod = 1.0;
    for (std::size_t k = 0; k < angles.size(); ++k) {
        u[k] = sin_prod * std::cos(angles[k]);
        sin_prod *= std::sin(angles[k]);
    }
    u.back() = sin_prod;
    return u;
}

std::vector<double> sphere_angles(const std::vector<double>& unit_vector) {
    const std::size_t n = unit_vector.size();
    if (n == 0) throw std::invalid_argument("vector must be nonempty");
    double norm = 0.0;
    for (double v : unit_vector) norm += v * v;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw std::invalid_argument("cannot embed a zero or non-finite vector");
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = unit_vector[k] / norm;
    if (n == 1) {
        // The one-mode chart only covers u = (+1); the mirrored receiver is
        // reachable by negating the displacement instead.
        if (v[0] < 0.0)
            throw std::invalid_argument("one-mode receivers are parameterized with u = (+1)");
        return {};
    }

    std::vector<double> angles(n - 1);
    double tail_sq = v[n - 1] * v[n - 1] + v[n - 2] * v[n - 2];
    angles[n - 2] = std::atan2(v[n - 1], v[n - 2]);
    for (std::size_t k = n - 2; k-- > 0;) {
        angles[k] = std::atan2(std::sqrt(tail_sq), v[k]);
        tail_sq += v[k] * v[k];
    }
    return angles;
}

std::vector<double> encode_receiver(const ReceiverParams& params) {
    params.validate();
    std::vector<double> theta = sphere_angles(params.u);
    theta.reserve(theta.size() + 2 * params.eps.size());
    for (const Amplitude& e : params.eps) {
        theta.push_back(e.real());
        theta.push_back(e.imag());
    }
    return theta;
}

ReceiverParams decode_receiver(const std::vector<double>& theta) {
    if ((theta.size() + 1) % 3 != 0)
        throw std::invalid_argument("coordinate vector must have length 3n - 1");
    const std::size_t n = (theta.size() + 1) / 3;
    ReceiverParams params;
    params.u = sphere_embed({theta.begin(), theta.begin() + static_cast<std::ptrdiff_t>(n - 1)});
    params.eps.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        params.eps[j] = Amplitude(theta[n - 1 + 2 * j], theta[n + 2 * j]);
    return params;
}

double objective(const std::vector<double>& theta, const PskAlphabet& alphabet,
                 const NoiseModel& noise) {
    return success_probability(decode_receiver(theta), alphabet, noise);
}

OptimizationResult optimize(const PskAlphabet& alphabet, int n_modes, const NoiseModel& noise,
                            const OptimizerSettings& settings) {
    alphabet.validate();
    noise.validate();
    settings.validate();
    if (n_modes < 1) throw std::invalid_argument("n_modes must be at least 1");
    if (n_modes > kMaxModes)
        throw std::invalid_argument("n_modes exceeds the enumeration cap of " +
                                    std::to_string(kMaxModes));

    std::vector<std::vector<double>> starts;
    for (const ReceiverParams& warm : settings.warm_starts) {
        warm.validate();
        if (warm.modes() != n_modes)
            throw std::invalid_argument("warm start has wrong number of modes");
        starts.push_back(encode_receiver(warm));
    }
    if (alphabet.m == 4 && n_modes == 2) {
        starts.push_back(encode_receiver(baselines::analytic_receiver_qpsk()));
        starts.push_back(encode_receiver(baselines::kennedy_optamp_qpsk()));
    }
    const ReceiverParams split = uniform_split_receiver(n_modes);
    starts.push_back(encode_receiver(split));  // zero displacement
    for (int k = 0; k < alphabet.m; ++k) {     // null each state in turn
        ReceiverParams nulling = split;
        const Amplitude a_k = alphabet.amplitude(k);
        for (std::size_t j = 0; j < nulling.eps.size(); ++j)
            nulling.eps[j] = -nulling.u[j] * a_k;
        starts.push_back(encode_receiver(nulling));
    }

    Xoshiro256 rng(settings.seed);
    const double span = alphabet.alpha + 2.0;
    const std::size_t dim = 3 * static_cast<std::size_t>(n_modes) - 1;
    for (int s = 0; s < settings.starts; ++s) {
        std::vector<double> theta(dim);
        for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n_modes); ++k)
            theta[k] = rng.uniform(0.0, std::numbers::pi);
        for (std::size_t k = static_cast<std::size_t>(n_modes) - 1; k < dim; ++k)
            theta[k] = rng.uniform(-span, span);
        starts.push_back(std::move(theta));
    }

    const auto eval = [&alphabet, &noise](const std::vector<double>& theta) {
        return objective(theta, alphabet, noise);
    };
    std::vector<LocalOutcome> outcomes(starts.size());
    parallel_for(starts.size(), [&](std::size_t i) {
        LocalOutcome outcome = nelder_mead_max(eval, starts[i], settings.max_iters,
                                               settings.x_tolerance, settings.f_tolerance);
        gradient_polish(eval, outcome, settings.f_tolerance);
        outcomes[i] = std::move(outcome);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i)
        if (outcomes[i].value > outcomes[best].value) best = i;  // ties keep the lowest index

    OptimizationResult result;
    result.params = decode_receiver(outcomes[best].x);
    result.success = outcomes[best].value;
    result.start_index = static_cast<int>(best);
    result.iterations = outcomes[best].iterations;
    result.converged = outcomes[best].converged;
    return result;
}

std::vector<SweepResult> sweep_modes(int m, const std::vector<double>& alphas,
                                     const std::vector<int>& n_list, const NoiseModel& noise,
                                     const OptimizerSettings& settings) {
    if (alphas.empty()) throw std::invalid_argument("alpha grid must be non-empty");
    if (n_list.empty()) throw std::invalid_argument("mode list must be non-empty");

    std::vector<std::size_t> order(n_list.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&n_list](std::size_t a, std::size_t b) { return n_list[a] < n_list[b]; });

    std::vector<SweepResult> rows(alphas.size() * n_list.size());
    parallel_for(alphas.size(), [&](std::size_t ai) {
        const PskAlphabet alphabet(m, alphas[ai]);
        std::map<int, ReceiverParams> winners;
        for (std::size_t idx : order) {
            const int n = n_list[idx];
            OptimizerSettings local = settings;
            // Per-n user warm starts would mismatch across the grid; keep only
            // the chained winners from smaller receivers.
            local.warm_starts.clear();
            for (const auto& [prev_n, prev_params] : winners)
                if (prev_n < n) local.warm_starts.push_back(pad_receiver(prev_params, n));
            const OptimizationResult result = optimize(alphabet, n, noise, local);
            winners.emplace(n, result.params);

            SweepResult row;
            row.m = m;
            row.alpha = alphas[ai];
            row.n_modes = n;
            row.method = "optimized";
            row.success = result.success;
            row.error_rate = 1.0 - result.success;
            rows[ai * n_list.size() + idx] = std::move(row);
        }
    });
    return rows;
}

}  // namespace pskrx
