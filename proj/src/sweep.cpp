#include "pskrx/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pskrx {

const char* const kCsvHeader = "m,alpha,mean_photons,n_modes,method,success,error_rate,std_dev";

std::string format_field(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void write_csv(std::ostream& out, const std::vector<SweepResult>& rows) {
    out << kCsvHeader << '\n';
    for (const SweepResult& row : rows) {
        out << row.m << ',' << format_field(row.alpha) << ','
            << format_field(row.mean_photons()) << ',' << row.n_modes << ',' << row.method
            << ',' << format_field(row.success) << ',' << format_field(row.error_rate) << ',';
        if (row.std_dev) out << format_field(*row.std_dev);
        out << '\n';
    }
}

namespace {

double parse_number(const std::string& text) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed grid number: '" + text + "'");
    }
    if (consumed != text.size())
        throw std::invalid_argument("malformed grid number: '" + text + "'");
    return value;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("grid specification is empty");
    const auto first = text.find(':');
    if (first == std::string::npos) return {parse_number(text)};

    const auto second = text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
        throw std::invalid_argument("grid must be a number or start:stop:step");
    const double start = parse_number(text.substr(0, first));
    const double stop = parse_number(text.substr(first + 1, second - first - 1));
    const double step = parse_number(text.substr(second + 1));
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (stop < start) throw std::invalid_argument("grid stop must be >= start");

    // Index-based stepping avoids accumulating rounding error; the stop point
    // is included when it lands within a relative 1e-9 of a step.
    const long long count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count) + 1);
    for (long long i = 0; i <= count; ++i) values.push_back(start + step * static_cast<double>(i));
    return values;
}

}  // namespace pskrx
