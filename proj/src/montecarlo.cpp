#include "pskrx/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "pskrx/core.hpp"
#include "pskrx/parallel.hpp"
#include "pskrx/rng.hpp"

namespace pskrx {

void TrialPlan::validate() const {
    if (shots_per_run < 1) throw std::invalid_argument("shots_per_run must be positive");
    if (runs < 1) throw std::invalid_argument("runs must be positive");
}

TrialReport simulate(const PskAlphabet& alphabet, const ReceiverParams& params,
                     const NoiseModel& noise, const TrialPlan& plan) {
    plan.validate();
    const DecodeTable table = build_decode_table(params, alphabet, noise);
    const auto clicks = click_probability_table(params, alphabet, noise);
    const int m = alphabet.m;
    const int n = params.modes();

    std::vector<double> cumulative(static_cast<std::size_t>(m));
    double acc = 0.0;
    for (int x = 0; x < m; ++x) {
        acc += alphabet.prior(x);
        cumulative[static_cast<std::size_t>(x)] = acc;
    }

    const std::size_t runs = static_cast<std::size_t>(plan.runs);
    std::vector<double> per_run(runs, 0.0);
    std::vector<std::vector<std::vector<long long>>> confusion_per_run(
        runs, std::vector<std::vector<long long>>(static_cast<std::size_t>(m),
                                                  std::vector<long long>(
                                                      static_cast<std::size_t>(m), 0)));

    parallel_for(runs, [&](std::size_t run) {
        Xoshiro256 rng(plan.seed, run);  // stream per run: reproducible and independent
        auto& confusion = confusion_per_run[run];
        long long correct = 0;
        for (long long shot = 0; shot < plan.shots_per_run; ++shot) {
            const double draw = rng.uniform();
            int x = 0;
            while (x < m - 1 && draw >= cumulative[static_cast<std::size_t>(x)]) ++x;
            const auto& q = clicks[static_cast<std::size_t>(x)];
            std::uint32_t mask = 0;
            for (int j = 0; j < n; ++j)
                if (rng.bernoulli(q[static_cast<std::size_t>(j)])) mask |= 1u << j;
            const int decoded = table.entries[mask].best_x;
            ++confusion[static_cast<std::size_t>(x)][static_cast<std::size_t>(decoded)];
            if (decoded == x) ++correct;
        }
        per_run[run] = static_cast<double>(correct) / static_cast<double>(plan.shots_per_run);
    });

    TrialReport report;
    report.per_run = per_run;
    report.total_shots = plan.total_shots();
    report.confusion.assign(static_cast<std::size_t>(m),
                            std::vector<long long>(static_cast<std::size_t>(m), 0));
    for (std::size_t run = 0; run < runs; ++run)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                report.confusion[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] +=
                    confusion_per_run[run][static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];

    double mean = 0.0;
    for (double r : per_run) mean += r;
    mean /= static_cast<double>(runs);
    report.success_estimate = mean;
    if (runs > 1) {
        double ss = 0.0;
        for (double r : per_run) ss += (r - mean) * (r - mean);
        report.std_dev = std::sqrt(ss / static_cast<double>(runs - 1));
    }
    return report;
}

ConfusionCheck confusion_matrix_check(const TrialReport& report, const PskAlphabet& alphabet) {
    alphabet.validate();
    ConfusionCheck check;
    const std::size_t m = static_cast<std::size_t>(alphabet.m);
    if (report.confusion.size() != m) return check;  // pass stays false on shape mismatch

    long long grand_total = 0;
    check.pass = true;
    for (std::size_t x = 0; x < m; ++x) {
        if (report.confusion[x].size() != m) {
            check.pass = false;
            return check;
        }
        ConfusionRowCheck row;
        row.state = static_cast<int>(x);
        for (long long count : report.confusion[x]) {
            if (count < 0) check.pass = false;
            row.row_total += count;
        }
        grand_total += row.row_total;

        const double p = alphabet.prior(static_cast<int>(x));
        const double total = static_cast<double>(report.total_shots);
        row.expected = p * total;
        const double variance = total * p * (1.0 - p);
        row.z_score = variance > 0.0
                          ? (static_cast<double>(row.row_total) - row.expected) /
                                std::sqrt(variance)
                          : 0.0;
        // Row totals are binomial counts of how often state x was drawn;
        // 5 sigma keeps false alarms negligible across repeated checks.
        row.ok = variance > 0.0 ? std::abs(row.z_score) <= 5.0
                                : row.row_total == static_cast<long long>(row.expected);
        check.pass = check.pass && row.ok;
        check.rows.push_back(row);
    }
    check.pass = check.pass && grand_total == report.total_shots;
    return check;
}

}  // namespace pskrx
