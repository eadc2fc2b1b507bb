#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pskrx/baselines.hpp"
#include "pskrx/core.hpp"
#include "pskrx/montecarlo.hpp"
#include "pskrx/optimizer.hpp"
#include "pskrx/sweep.hpp"

namespace {

using namespace pskrx;

// One shared option set across all subcommands; unused fields are ignored by
// commands that do not need them. Config files use the same keys as the long
// flags and command-line flags always win.
struct Options {
    int m = 4;
    std::string alpha;
    std::string alpha_grid;
    std::string modes = "2";
    double efficiency = 1.0;
    double dark = 0.0;
    double visibility = 1.0;
    int starts = 64;
    std::uint64_t seed = 1;
    long long shots = 40000;
    int runs = 5;
    std::string receiver = "optimal";
    std::string out;
    std::string config;
};

const std::vector<std::string> kConfigKeys = {
    "m",     "alpha", "alpha-grid", "modes", "efficiency", "dark",     "visibility",
    "starts", "seed",  "shots",      "runs",  "receiver",   "out"};

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

// Reads a key=value config file and returns flag tokens to splice into argv
// ahead of the user's own flags, so explicit flags win on conflict.
std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::vector<std::string> tokens;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        " is not key=value: " + stripped);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end())
            throw std::invalid_argument("unknown config key '" + key + "' on line " +
                                        std::to_string(line_number));
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

std::vector<int> parse_modes(const std::string& text) {
    std::vector<int> modes;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const std::string stripped = trim(item);
        if (stripped.empty()) continue;
        std::size_t consumed = 0;
        int value = 0;
        try {
            value = std::stoi(stripped, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed mode count: '" + stripped + "'");
        }
        if (consumed != stripped.size() || value < 1 || value > kMaxModes)
            throw std::invalid_argument("mode count must be an integer in [1, " +
                                        std::to_string(kMaxModes) + "]: '" + stripped + "'");
        modes.push_back(value);
    }
    if (modes.empty()) throw std::invalid_argument("mode list must be non-empty");
    return modes;
}

std::vector<double> resolve_alphas(const Options& opts) {
    if (!opts.alpha.empty() && !opts.alpha_grid.empty())
        throw std::invalid_argument("give either --alpha or --alpha-grid, not both");
    const std::string& source = opts.alpha_grid.empty() ? opts.alpha : opts.alpha_grid;
    if (source.empty())
        throw std::invalid_argument("an amplitude is required (--alpha or --alpha-grid)");
    const std::vector<double> alphas = parse_grid(source);
    for (double a : alphas)
        if (a < 0.0) throw std::invalid_argument("alpha must be nonnegative");
    return alphas;
}

double single_alpha(const Options& opts) {
    const auto alphas = resolve_alphas(opts);
    if (alphas.size() != 1)
        throw std::invalid_argument("this command needs a single --alpha value");
    return alphas.front();
}

int single_mode_count(const Options& opts) {
    const auto modes = parse_modes(opts.modes);
    if (modes.size() != 1)
        throw std::invalid_argument("this command needs a single --modes value");
    return modes.front();
}

NoiseModel make_noise(const Options& opts) {
    NoiseModel noise;
    noise.efficiency = opts.efficiency;
    noise.dark_prob = opts.dark;
    noise.visibility = opts.visibility;
    noise.validate();
    return noise;
}

OptimizerSettings make_settings(const Options& opts) {
    OptimizerSettings settings;
    settings.starts = opts.starts;
    settings.seed = opts.seed;
    settings.validate();
    return settings;
}

void require_qpsk_preset(const std::string& name, int m, int n) {
    if (m != 4 || n != 2)
        throw std::invalid_argument("receiver preset '" + name +
                                    "' is defined for m=4 with 2 modes");
}

ReceiverParams resolve_receiver(const std::string& name, const Options& opts, double alpha,
                                const NoiseModel& noise, int n_modes) {
    if (name == "optimal") {
        require_qpsk_preset(name, opts.m, n_modes);
        return baselines::analytic_receiver_qpsk();
    }
    if (name == "nulling") {
        require_qpsk_preset(name, opts.m, n_modes);
        return baselines::kennedy_nulling_qpsk(alpha);
    }
    if (name == "optamp") {
        require_qpsk_preset(name, opts.m, n_modes);
        return baselines::kennedy_optamp_qpsk();
    }
    if (name == "optimized")
        return optimize(PskAlphabet(opts.m, alpha), n_modes, noise, make_settings(opts)).params;
    throw std::invalid_argument("unknown receiver '" + name +
                                "' (expected optimal, nulling, optamp, or optimized)");
}

void emit_rows(const std::vector<SweepResult>& rows, const std::string& out_path) {
    if (out_path.empty()) {
        write_csv(std::cout, rows);
        if (!std::cout) throw std::runtime_error("failed writing CSV to stdout");
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    write_csv(out, rows);
    out.flush();
    if (!out) throw std::runtime_error("failed writing CSV to " + out_path);
}

SweepResult make_row(const Options& opts, double alpha, int n_modes, std::string method,
                     double success) {
    SweepResult row;
    row.m = opts.m;
    row.alpha = alpha;
    row.n_modes = n_modes;
    row.method = std::move(method);
    row.success = success;
    row.error_rate = 1.0 - success;
    return row;
}

int cmd_sweep(const Options& opts) {
    const auto alphas = resolve_alphas(opts);
    const auto modes = parse_modes(opts.modes);
    const auto rows = sweep_modes(opts.m, alphas, modes, make_noise(opts), make_settings(opts));
    emit_rows(rows, opts.out);
    return 0;
}

int cmd_compare(const Options& opts) {
    if (opts.m != 4)
        throw std::invalid_argument("compare reproduces the QPSK baselines and needs --m 4");
    const auto alphas = resolve_alphas(opts);
    const NoiseModel noise = make_noise(opts);
    const OptimizerSettings settings = make_settings(opts);

    std::vector<SweepResult> rows;
    for (double alpha : alphas) {
        const PskAlphabet alphabet(4, alpha);
        baselines::QuadratureSpec quad;
        quad.m = 4;
        quad.alpha = alpha;

        rows.push_back(make_row(opts, alpha, 1, "helstrom", baselines::helstrom_mpsk(4, alpha)));
        rows.push_back(make_row(opts, alpha, 1, "heterodyne", baselines::heterodyne_mpsk(quad)));
        rows.push_back(make_row(opts, alpha, 1, "heterodyne-eff",
                                baselines::heterodyne_with_efficiency(4, alpha,
                                                                      opts.efficiency)));
        rows.push_back(make_row(opts, alpha, 2, "optimized",
                                optimize(alphabet, 2, noise, settings).success));
        rows.push_back(make_row(
            opts, alpha, 2, "analytic",
            success_probability(baselines::analytic_receiver_qpsk(), alphabet, noise)));
        rows.push_back(make_row(
            opts, alpha, 2, "kennedy-null",
            success_probability(baselines::kennedy_nulling_qpsk(alpha), alphabet, noise)));
        rows.push_back(make_row(
            opts, alpha, 2, "kennedy-optamp",
            success_probability(baselines::kennedy_optamp_qpsk(), alphabet, noise)));
    }
    emit_rows(rows, opts.out);
    return 0;
}

int cmd_optimize(const Options& opts) {
    const double alpha = single_alpha(opts);
    const int n = single_mode_count(opts);
    const NoiseModel noise = make_noise(opts);
    const OptimizationResult result =
        optimize(PskAlphabet(opts.m, alpha), n, noise, make_settings(opts));

    std::printf("m=%d alpha=%s modes=%d efficiency=%s dark=%s visibility=%s\n", opts.m,
                format_field(alpha).c_str(), n, format_field(noise.efficiency).c_str(),
                format_field(noise.dark_prob).c_str(), format_field(noise.visibility).c_str());
    std::printf("success     = %s\n", format_field(result.success).c_str());
    std::printf("error_rate  = %s\n", format_field(1.0 - result.success).c_str());
    std::printf("converged   = %s (start %d, %d iterations)\n",
                result.converged ? "true" : "false", result.start_index, result.iterations);
    std::printf("u           = [");
    for (std::size_t j = 0; j < result.params.u.size(); ++j)
        std::printf("%s%s", j ? ", " : "", format_field(result.params.u[j]).c_str());
    std::printf("]\n");
    std::printf("eps         = [");
    for (std::size_t j = 0; j < result.params.eps.size(); ++j)
        std::printf("%s(%s, %s)", j ? ", " : "",
                    format_field(result.params.eps[j].real()).c_str(),
                    format_field(result.params.eps[j].imag()).c_str());
    std::printf("]\n");

    if (!opts.out.empty())
        emit_rows({make_row(opts, alpha, n, "optimized", result.success)}, opts.out);
    return 0;
}

int cmd_montecarlo(const Options& opts) {
    const auto alphas = resolve_alphas(opts);
    const int n = single_mode_count(opts);
    const NoiseModel noise = make_noise(opts);
    TrialPlan plan;
    plan.shots_per_run = opts.shots;
    plan.runs = opts.runs;
    plan.seed = opts.seed;
    plan.validate();

    std::vector<std::string> presets;
    if (opts.receiver == "all")
        presets = {"optimal", "optamp", "nulling"};
    else
        presets = {opts.receiver};

    std::vector<SweepResult> rows;
    for (double alpha : alphas) {
        const PskAlphabet alphabet(opts.m, alpha);
        for (const std::string& preset : presets) {
            const ReceiverParams rx = resolve_receiver(preset, opts, alpha, noise, n);
            const TrialReport report = simulate(alphabet, rx, noise, plan);
            const ConfusionCheck check = confusion_matrix_check(report, alphabet);

            SweepResult row = make_row(opts, alpha, n, "mc-" + preset, report.success_estimate);
            row.std_dev = report.std_dev;
            rows.push_back(row);
            std::fprintf(stderr,
                         "mc m=%d alpha=%s receiver=%s: success=%s +/- %s (%lld shots, "
                         "confusion %s)\n",
                         opts.m, format_field(alpha).c_str(), preset.c_str(),
                         format_field(report.success_estimate).c_str(),
                         format_field(report.std_dev).c_str(), report.total_shots,
                         check.pass ? "ok" : "SUSPECT");
        }
    }
    emit_rows(rows, opts.out);
    return 0;
}

int cmd_decode_table(const Options& opts) {
    const double alpha = single_alpha(opts);
    const int n = single_mode_count(opts);
    const NoiseModel noise = make_noise(opts);
    const ReceiverParams rx = resolve_receiver(opts.receiver, opts, alpha, noise, n);
    const DecodeTable table = build_decode_table(rx, PskAlphabet(opts.m, alpha), noise);

    std::ostringstream text;
    text << "pattern decoded posterior\n";
    for (std::uint32_t mask = 0; mask < table.entries.size(); ++mask) {
        for (int j = 0; j < n; ++j) text << (((mask >> j) & 1u) ? '1' : '0');
        const DecodeEntry& entry = table.entries[mask];
        text << ' ' << entry.best_x << ' ' << format_field(entry.posterior) << '\n';
    }

    if (opts.out.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(opts.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + opts.out);
        out << text.str();
    }
    return 0;
}

void add_shared_options(CLI::App* cmd, Options& opts) {
    // Config tokens are spliced in before the user's flags, so "last one wins"
    // is what makes explicit flags override the config file.
    cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    cmd->add_option("--m", opts.m, "Alphabet order (number of PSK states)");
    cmd->add_option("--alpha", opts.alpha, "Single coherent amplitude");
    cmd->add_option("--alpha-grid", opts.alpha_grid, "Amplitude grid start:stop:step");
    cmd->add_option("--modes", opts.modes, "Receiver mode counts, comma separated");
    cmd->add_option("--efficiency", opts.efficiency, "Detection efficiency in (0, 1]");
    cmd->add_option("--dark", opts.dark, "Dark-count probability per mode in [0, 1)");
    cmd->add_option("--visibility", opts.visibility, "Interference visibility in [0, 1]");
    cmd->add_option("--starts", opts.starts, "Random multi-start count for the optimizer");
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--shots", opts.shots, "Monte Carlo shots per run");
    cmd->add_option("--runs", opts.runs, "Monte Carlo run count");
    cmd->add_option("--receiver", opts.receiver,
                    "Receiver preset: optimal, nulling, optamp, optimized, or all");
    cmd->add_option("--out", opts.out, "Output file (stdout when omitted)");
    // Consumed by hand before CLI11 runs; registered here only for help text.
    cmd->add_option("--config", opts.config, "Config file with key=value lines, flags win");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PSK coherent-state receiver exploration"};
    app.require_subcommand(1);

    Options opts;
    CLI::App* sweep = app.add_subcommand("sweep", "Optimize receivers over an amplitude grid");
    CLI::App* optimize_cmd =
        app.add_subcommand("optimize", "Optimize a single receiver configuration");
    CLI::App* compare =
        app.add_subcommand("compare", "Tabulate QPSK baselines and optimized receivers");
    CLI::App* montecarlo =
        app.add_subcommand("montecarlo", "Simulate shot-by-shot detection");
    CLI::App* decode_table =
        app.add_subcommand("decode-table", "Print the maximum-likelihood decision table");
    for (CLI::App* cmd : {sweep, optimize_cmd, compare, montecarlo, decode_table})
        add_shared_options(cmd, opts);

    // Splice config-file tokens in front of the user's flags so that explicit
    // flags take precedence; --config is located by hand before CLI11 runs.
    std::vector<std::string> args;
    try {
        std::string config_path;
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config") {
                if (i + 1 >= argc) throw std::invalid_argument("--config needs a path");
                config_path = argv[++i];
            } else if (arg.rfind("--config=", 0) == 0) {
                config_path = arg.substr(9);
            } else {
                args.push_back(arg);
            }
        }
        if (!config_path.empty()) {
            auto tokens = config_tokens(config_path);
            // An amplitude given on the command line replaces the config's
            // amplitude under either spelling, instead of colliding with it.
            const auto user_has = [&args](const std::string& flag) {
                for (const std::string& arg : args)
                    if (arg == flag || arg.rfind(flag + "=", 0) == 0) return true;
                return false;
            };
            if (user_has("--alpha"))
                std::erase_if(tokens, [](const std::string& t) {
                    return t.rfind("--alpha-grid=", 0) == 0;
                });
            if (user_has("--alpha-grid"))
                std::erase_if(tokens,
                              [](const std::string& t) { return t.rfind("--alpha=", 0) == 0; });
            const auto insert_at = args.empty() ? args.end() : args.begin() + 1;
            args.insert(insert_at, tokens.begin(), tokens.end());
        }
    } catch (const std::invalid_argument& error) {
        std::fprintf(stderr, "error: %s\n", error.what());
        return 2;
    }

    try {
        std::vector<const char*> argv_view{argv[0]};
        for (const std::string& arg : args) argv_view.push_back(arg.c_str());
        app.parse(static_cast<int>(argv_view.size()), argv_view.data());
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 2;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(opts);
        if (optimize_cmd->parsed()) return cmd_optimize(opts);
        if (compare->parsed()) return cmd_compare(opts);
        if (montecarlo->parsed()) return cmd_montecarlo(opts);
        if (decode_table->parsed()) return cmd_decode_table(opts);
        std::fprintf(stderr, "error: no command selected\n");
        return 2;
    } catch (const std::invalid_argument& error) {
        std::fprintf(stderr, "error: %s\n", error.what());
        return 2;
    } catch (const std::exception& error) {
        std::fprintf(stderr, "error: %s\n", error.what());
        return 1;
    }
}
