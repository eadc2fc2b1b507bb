#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pskrx {

/// One output row shared by every CLI command that emits CSV. std_dev is
/// only present for Monte Carlo estimates; exact methods leave it empty.
struct SweepResult {
    int m = 4;
    double alpha = 0.0;
    int n_modes = 1;
    std::string method;
    double success = 0.0;
    double error_rate = 0.0;
    std::optional<double> std_dev;

    double mean_photons() const { return alpha * alpha; }
};

/// Fixed CSV header; column order is part of the output contract.
extern const char* const kCsvHeader;

/// Formats one value with 12 significant digits (printf %.12g).
std::string format_field(double value);

/// Writes header plus rows, LF newlines, no trailing spaces. Real fields get
/// 12 significant digits; an absent std_dev becomes an empty field.
void write_csv(std::ostream& out, const std::vector<SweepResult>& rows);

/// Parses "start:stop:step" into an inclusive grid. A bare number is a
/// one-point grid. Throws std::invalid_argument on step <= 0, stop < start,
/// or malformed input; stop is included when it lands within a 1e-9 relative
/// slack of the final step.
std::vector<double> parse_grid(const std::string& text);

}  // namespace pskrx
