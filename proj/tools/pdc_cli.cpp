// Command-line front end: spectrum tables, time evolution runs, and the
// validation suite. Emits RFC-4180-style CSV (mandatory header row) and JSON
// sidecars; floating point is printed with 17 significant digits so output
// round-trips exactly.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pdc/dynamics.hpp"
#include "pdc/fock.hpp"
#include "pdc/hamiltonian.hpp"
#include "pdc/observables.hpp"
#include "pdc/parallel.hpp"
#include "pdc/spectral.hpp"
#include "pdc/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamSources {
    std::string config_path;
    std::string resonance_spec;  // "g=G,omega1=W"
    std::optional<double> omega1, omega2, K1, K2, g;

    void add_options(CLI::App& cmd) {
        cmd.add_option("--config", config_path,
                       "JSON config file with keys omega1, omega2, K1, K2, g");
        cmd.add_option("--resonance", resonance_spec,
                       "construct resonance-constrained parameters, e.g. g=1,omega1=1");
        cmd.add_option("--omega1", omega1, "mode-1 frequency");
        cmd.add_option("--omega2", omega2, "mode-2 frequency");
        cmd.add_option("--K1", K1, "mode-1 Kerr constant");
        cmd.add_option("--K2", K2, "mode-2 Kerr constant");
        cmd.add_option("--g", g, "down-conversion coupling");
    }

    pdc::ModelParams resolve() const {
        std::optional<pdc::ModelParams> params;
        if (!config_path.empty()) params = pdc::params_from_json_file(config_path);
        if (!resonance_spec.empty()) {
            double res_g = NAN, res_omega1 = NAN;
            std::stringstream ss(resonance_spec);
            std::string item;
            while (std::getline(ss, item, ',')) {
                const auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw UsageError("--resonance expects g=G,omega1=W");
                const std::string key = item.substr(0, eq);
                const double value = std::stod(item.substr(eq + 1));
                if (key == "g")
                    res_g = value;
                else if (key == "omega1")
                    res_omega1 = value;
                else
                    throw UsageError("--resonance: unknown key '" + key + "'");
            }
            if (std::isnan(res_g) || std::isnan(res_omega1))
                throw UsageError("--resonance needs both g and omega1");
            params = pdc::resonance_params(res_g, res_omega1);
        }
        if (!params) params = pdc::ModelParams{};
        if (omega1) params->omega1 = *omega1;
        if (omega2) params->omega2 = *omega2;
        if (K1) params->K1 = *K1;
        if (K2) params->K2 = *K2;
        if (g) params->g = *g;
        const bool explicit_all = omega1 && omega2 && K1 && K2 && g;
        if (config_path.empty() && resonance_spec.empty() && !explicit_all)
            throw UsageError(
                "model parameters required: --config, --resonance, or all of "
                "--omega1 --omega2 --K1 --K2 --g");
        return *params;
    }
};

void write_file(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << content;
    if (!out) throw UsageError("failed writing output file: " + path);
}

std::vector<double> parse_time_grid(const std::string& spec) {
    // "start:stop:step" or a single time
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
    if (parts.size() == 1) return {parts[0]};
    if (parts.size() != 3) throw UsageError("--t expects start:stop:step");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (!(step > 0.0) || stop < start) throw UsageError("--t: need step > 0 and stop >= start");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double t = start + i * step;
        if (t > stop + step * 1e-9) break;
        grid.push_back(t);
    }
    return grid;
}

pdc::StateVector parse_state(const std::string& spec, double tail_epsilon) {
    if (spec.rfind("fock:", 0) == 0) {
        int n1, n2;
        if (std::sscanf(spec.c_str() + 5, "%d,%d", &n1, &n2) != 2 || n1 < 0 || n2 < 0)
            throw UsageError("--state fock:n1,n2 expects non-negative integers");
        return pdc::StateVector::fock(n1, n2);
    }
    if (spec.rfind("coherent:", 0) == 0) {
        double re1, im1, re2, im2;
        if (std::sscanf(spec.c_str() + 9, "%lf,%lf,%lf,%lf", &re1, &im1, &re2, &im2) != 4)
            throw UsageError("--state coherent:z1re,z1im,z2re,z2im expects four numbers");
        return pdc::coherent_state({re1, im1}, {re2, im2}, tail_epsilon);
    }
    throw UsageError("--state must be fock:n1,n2 or coherent:z1re,z1im,z2re,z2im");
}

int cmd_spectrum(const ParamSources& sources, int p_flag, int max_M,
                 const std::string& method, const std::string& output,
                 const std::string& format) {
    const pdc::ModelParams params = sources.resolve();
    if (method != "analytic" && method != "numeric" && method != "both")
        throw UsageError("--method must be analytic, numeric, or both");
    if (max_M < 0) throw UsageError("--max-M must be non-negative");
    if (p_flag != 0 && p_flag != 1 && p_flag != -1) throw UsageError("--p must be 0 or 1");

    if (method != "numeric") {
        const auto res = pdc::resonance_check(params);
        if (!res.ok) {
            char buf[200];
            std::snprintf(buf, sizeof(buf),
                          "analytic method requires the resonance conditions; residuals "
                          "(2w1-w2-g, 2K1+g, K2+2g) = (%.3e, %.3e, %.3e), g = %.3e",
                          res.residuals[0], res.residuals[1], res.residuals[2], params.g);
            throw UsageError(buf);
        }
    }
    if (method != "analytic" && params.g == 0.0 && method == "both")
        throw UsageError("method both needs g != 0 for the analytic path");

    std::vector<int> parities = p_flag == -1 ? std::vector<int>{0, 1} : std::vector<int>{p_flag};
    std::vector<pdc::SpectrumRow> rows;
    for (int p : parities) {
        for (int M = 0; M <= max_M; ++M) {
            std::vector<double> energies;
            double deviation = -1.0;
            if (method == "numeric") {
                energies =
                    pdc::solve_numeric(pdc::build_block_direct(params, p, M), p, M).energies;
            } else {
                energies = pdc::solve_analytic(params, p, M).energies;
                if (method == "both") {
                    const auto numeric =
                        pdc::solve_numeric(pdc::build_block_direct(params, p, M), p, M);
                    deviation = 0.0;
                    for (int l = 0; l <= M; ++l)
                        deviation =
                            std::max(deviation, std::abs(energies[l] - numeric.energies[l]));
                }
            }
            for (int l = 0; l <= M; ++l)
                rows.push_back(pdc::SpectrumRow{p, M, l, energies[l], deviation});
        }
    }

    if (format == "csv")
        write_file(output, pdc::spectrum_to_csv(rows));
    else if (format == "json")
        write_file(output, pdc::spectrum_to_json(rows, 2) + "\n");
    else
        throw UsageError("--format must be csv or json");
    return kExitOk;
}

int cmd_evolve(const ParamSources& sources, const std::string& state_spec,
               const std::string& observable_name, const std::string& t_spec,
               double tail_epsilon, const std::string& output, bool gnuplot) {
    const pdc::ModelParams params = sources.resolve();
    const auto grid = parse_time_grid(t_spec);
    const auto state = parse_state(state_spec, tail_epsilon);
    const auto observable = pdc::observables::by_name(observable_name, params);

    const auto series = pdc::time_series(params, state, observable, grid);
    write_file(output, pdc::time_series_to_csv(series));

    if (!output.empty() && output != "-") {
        nlohmann::json meta{{"params", nlohmann::json::parse(pdc::params_to_json(params))},
                            {"state", state_spec},
                            {"observable", observable_name},
                            {"tail_epsilon", tail_epsilon},
                            {"t", t_spec},
                            {"points", grid.size()},
                            {"output", output}};
        write_file(output + ".meta.json", meta.dump(2) + "\n");
        if (gnuplot) {
            std::string gp = "set datafile separator ','\n";
            gp += "set key autotitle columnhead\n";
            gp += "set xlabel 't'\n";
            gp += "plot '" + output + "' using 1:2 with lines title '" + observable_name +
                  "'\n";
            gp += "pause -1\n";
            write_file(output + ".gp", gp);
        }
    }
    return kExitOk;
}

int cmd_validate(int max_M, std::uint64_t seed, int trials, bool corrupt_weights) {
    if (max_M < 0 || trials < 1) throw UsageError("--max-M must be >= 0 and --trials >= 1");
    pdc::ValidationOptions options;
    options.max_M = max_M;
    options.seed = seed;
    options.trials = trials;
    options.corrupt_weights = corrupt_weights;
    const auto report = pdc::run_validation(options);
    std::cout << pdc::format_report(report);
    return report.all_pass() ? kExitOk : kExitValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for the two-mode down-conversion + Kerr Hamiltonian"};
    app.require_subcommand(1);

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "block eigenvalue tables");
    ParamSources spectrum_params;
    spectrum_params.add_options(*spectrum);
    int p_flag = -1;
    int spectrum_max_M = 10;
    std::string method = "analytic";
    std::string spectrum_output = "-";
    std::string spectrum_format = "csv";
    spectrum->add_option("--p", p_flag, "parity sector, 0 or 1 (default: both)");
    spectrum->add_option("--max-M", spectrum_max_M, "largest charge index M");
    spectrum->add_option("--method", method, "analytic | numeric | both");
    spectrum->add_option("--output,-o", spectrum_output, "output path ('-' for stdout)");
    spectrum->add_option("--format", spectrum_format, "csv | json");

    // evolve
    auto* evolve = app.add_subcommand("evolve", "expectation-value time series");
    ParamSources evolve_params;
    evolve_params.add_options(*evolve);
    std::string state_spec;
    std::string observable_name = "n1";
    std::string t_spec = "0:10:0.1";
    double tail_epsilon = 1e-10;
    std::string evolve_output = "-";
    bool gnuplot = false;
    evolve->add_option("--state", state_spec,
                       "fock:n1,n2 or coherent:z1re,z1im,z2re,z2im")->required();
    evolve->add_option("--observable", observable_name, "n1 | n2 | R | parity | H | @table.json");
    evolve->add_option("--t", t_spec, "time grid start:stop:step");
    evolve->add_option("--tail-epsilon", tail_epsilon, "coherent-state truncation mass");
    evolve->add_option("--output,-o", evolve_output, "output path ('-' for stdout)");
    evolve->add_flag("--gnuplot", gnuplot, "also write a gnuplot script next to the CSV");

    // validate
    auto* validate = app.add_subcommand("validate", "run the invariant suites");
    int validate_max_M = 40;
    std::uint64_t seed = 12345;
    int trials = 200;
    bool corrupt_weights = false;
    validate->add_option("--max-M", validate_max_M, "largest block size exercised");
    validate->add_option("--seed", seed, "RNG seed for randomized families");
    validate->add_option("--trials", trials, "random parameter sets for equivalence checks");
    validate->add_flag("--corrupt-weights", corrupt_weights,
                       "negative control: perturb a weight so orthonormality fails");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsageError;
    }

    try {
        if (spectrum->parsed())
            return cmd_spectrum(spectrum_params, p_flag, spectrum_max_M, method,
                                spectrum_output, spectrum_format);
        if (evolve->parsed())
            return cmd_evolve(evolve_params, state_spec, observable_name, t_spec, tail_epsilon,
                              evolve_output, gnuplot);
        if (validate->parsed())
            return cmd_validate(validate_max_M, seed, trials, corrupt_weights);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    }
    return kExitUsageError;
}
