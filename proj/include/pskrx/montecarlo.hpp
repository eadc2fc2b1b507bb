#pragma once

#include <cstdint>

#include "pskrx/types.hpp"

namespace pskrx {

struct TrialPlan {
    long long shots_per_run = 40000;
    int runs = 5;
    std::uint64_t seed = 1;

    void validate() const;
    long long total_shots() const { return shots_per_run * runs; }
};

struct TrialReport {
    double success_estimate = 0.0;            // mean of per-run success rates
    double std_dev = 0.0;                     // sample std over run means; 0 for a single run
    std::vector<double> per_run;              // success rate of each run
    std::vector<std::vector<long long>> confusion;  // counts, [sent state][decoded state]
    long long total_shots = 0;
};

/// Simulates shot-by-shot detection: per shot draw the sent state from the
/// priors, draw each detector's click from its Bernoulli probability, then
/// decode through a table built once up front. Run r uses RNG stream r of
/// plan.seed (see rng.hpp), so runs are independent and the report is
/// reproducible for a fixed plan regardless of how runs are scheduled.
TrialReport simulate(const PskAlphabet& alphabet, const ReceiverParams& params,
                     const NoiseModel& noise, const TrialPlan& plan);

struct ConfusionRowCheck {
    int state = 0;
    long long row_total = 0;
    double expected = 0.0;  // prior * total shots
    double z_score = 0.0;
    bool ok = false;
};

struct ConfusionCheck {
    bool pass = false;
    std::vector<ConfusionRowCheck> rows;
};

/// Sanity-checks a report's confusion matrix: row totals must sum to the
/// total shot count exactly and each row total must sit within 5 binomial
/// standard deviations of prior * total.
ConfusionCheck confusion_matrix_check(const TrialReport& report, const PskAlphabet& alphabet);

}  // namespace pskrx
