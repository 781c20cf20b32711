// moc: command-line front end for the characteristics integrator and the
// per-mode stability engine. Subcommands: sweep, simulate, classify, soliton.
//
// Exit codes: 0 on success (a blow-up during a simulation is a recorded
// observation, not a failure), 1 for I/O errors, 2 for bad configuration.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mocstab/diagnostics.hpp"
#include "mocstab/models.hpp"
#include "mocstab/report.hpp"
#include "mocstab/simulate.hpp"
#include "mocstab/vonneumann.hpp"

namespace {

using namespace mocstab;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::ios_base::failure("cannot open " + path + " for writing");
    os << content;
    if (!os) throw std::ios_base::failure("write failed: " + path);
}

/// Writes to the path, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

CouplingModel resolve_model(const std::string& id, double alpha) {
    const auto model = CouplingModel::from_id(id, alpha);
    if (model.family == ModelFamily::GrossNeveu)
        throw UsageError("model gross-neveu has no constant background; use `moc soliton`");
    return model;
}

StokesReference resolve_solution(const std::string& id) {
    if (id == "kink") return KinkSolution{};
    return ConstantSolution::from_id(id);
}

void add_config_option(CLI::App* cmd, std::string& path) {
    cmd->add_option("--config", path, "plain key=value file; command-line flags win");
    // keep -h free so sweep can spell its step-size option --h
    cmd->set_help_flag("--help", "print help and exit");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Applies `key=value` lines to the subcommand's options. Options already set
// on the command line keep their values.
void apply_config_file(CLI::App* cmd, const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line is not key=value: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        CLI::Option* opt = cmd->get_option_no_throw("--" + key);
        if (opt == nullptr) throw UsageError("unknown config key: " + key);
        if (opt->count() > 0) continue;
        opt->add_result(value);
        opt->run_callback();
    }
}

std::string series_path(const std::string& base) { return base + ".series.csv"; }
std::string spectrum_path(const std::string& base) { return base + ".spectrum.csv"; }
std::string json_path(const std::string& base) { return base + ".json"; }

void emit_simulation(const std::string& out_base, SimulationReport& report,
                     std::optional<std::pair<double, double>> fit_window) {
    if (fit_window) {
        report.growth = measure_growth_rate(report.t, report.total_error,
                                            fit_window->first, fit_window->second);
    } else if (!report.growth) {
        if (auto g = auto_growth_rate(report.t, report.total_error))
            report.growth = *g;
    }
    {
        std::ostringstream os;
        write_series_csv(os, report);
        emit(out_base.empty() ? "" : series_path(out_base), os.str());
    }
    {
        std::ostringstream os;
        write_spectrum_csv(os, report.final_spectrum);
        emit(out_base.empty() ? "" : spectrum_path(out_base), os.str());
    }
    emit(out_base.empty() ? "" : json_path(out_base), report_to_json(report) + "\n");
    if (!out_base.empty()) {
        std::cout << "wrote " << json_path(out_base) << ", " << series_path(out_base)
                  << ", " << spectrum_path(out_base) << "\n";
    }
}

int cmd_sweep(const std::string& scheme_id_, double h, const std::string& model_id,
              const std::string& solution_id, double alpha, int n_z, bool reduced,
              const std::string& out) {
    const auto scheme = scheme_from_id(scheme_id_);
    const auto model = resolve_model(model_id, alpha);
    if (solution_id == "kink")
        throw UsageError("sweep needs a constant background, not the kink");
    const auto sol = ConstantSolution::from_id(solution_id);
    const auto p = linearize(model, sol, reduced).p;
    const auto result = sweep(scheme, h, p, n_z);
    std::ostringstream os;
    write_sweep_csv(os, result, model_id, solution_id);
    emit(out, os.str());
    return 0;
}

int cmd_simulate(const std::string& scheme_id_, const std::string& model_id,
                 const std::string& solution_id, double alpha, double length,
                 int nodes, const SimulationConfig& cfg, const std::string& out,
                 std::optional<std::pair<double, double>> fit_window) {
    SimulationConfig config = cfg;
    config.scheme = scheme_from_id(scheme_id_);
    const auto model = resolve_model(model_id, alpha);
    const auto reference = resolve_solution(solution_id);
    const PeriodicGrid grid(nodes, length);
    auto report = run_stokes_simulation(model, reference, grid, config);
    emit_simulation(out, report, fit_window);
    return 0;
}

int cmd_classify(const std::string& out, double k_max, double k_step) {
    ClassifyOptions opts;
    opts.k_max = k_max;
    opts.k_step = k_step;

    std::ostringstream csv;
    csv << "model,solution,class\n";
    std::ostringstream table;
    int counts[3] = {0, 0, 0};
    for (const std::string model_id : {"spun", "random", "isotropic"}) {
        const auto model = CouplingModel::from_id(model_id);
        for (int component : {1, 2, 3}) {
            for (int sign : {+1, -1}) {
                const ConstantSolution sol{component, sign};
                const auto cls = classify_system(model, sol, opts);
                ++counts[static_cast<int>(cls)];
                csv << model_id << ',' << sol.id() << ','
                    << stability_class_name(cls) << "\n";
                table << model_id << " " << sol.id() << "  "
                      << stability_class_name(cls) << "\n";
            }
        }
    }
    table << "totals: stable=" << counts[0]
          << " unstable-at-k0=" << counts[1]
          << " unstable-k-nonzero=" << counts[2] << "\n";
    std::cout << table.str();
    if (!out.empty()) write_file(out, csv.str());
    return 0;
}

int cmd_soliton(const std::string& scheme_list, double omega, double length,
                std::vector<int> log2_nodes, double t_end_me, double t_end_lf,
                const SimulationConfig& base_cfg, const std::string& out) {
    for (int p : log2_nodes)
        if (p < 6 || p > 14)
            throw UsageError("soliton: log2 node counts must lie in [6, 14]");

    const GNSoliton soliton(omega);
    nlohmann::json summary;
    summary["version"] = 1;
    summary["omega"] = omega;
    summary["length"] = length;
    summary["runs"] = nlohmann::json::array();

    std::vector<std::pair<double, double>> me_points;  // (1/M, gamma)

    const auto want = [&](const std::string& s) {
        return scheme_list == "both" || scheme_list == s;
    };

    for (int p : log2_nodes) {
        const int nodes = 1 << p;
        const PeriodicGrid grid(nodes, length);
        if (want("me")) {
            SimulationConfig cfg = base_cfg;
            cfg.scheme = SchemeKind::ME;
            cfg.t_end = t_end_me;
            cfg.band_halfwidth = 0.3;  // growth of the unstable band near pi/2
            auto report = run_gn_simulation(soliton, grid, cfg);
            report.growth = measure_growth_rate(report.t, report.band_amplitude,
                                                0.1 * t_end_me, 0.9 * t_end_me);
            const std::string base =
                out.empty() ? "" : out + ".me.m" + std::to_string(nodes);
            emit_simulation(base, report, std::nullopt);
            nlohmann::json run = nlohmann::json::parse(report_to_json(report));
            run["log2_nodes"] = p;
            summary["runs"].push_back(run);
            if (report.growth)
                me_points.emplace_back(1.0 / nodes, report.growth->gamma);
        }
        if (want("lf")) {
            SimulationConfig cfg = base_cfg;
            cfg.scheme = SchemeKind::LF;
            cfg.t_end = t_end_lf;
            auto report = run_gn_simulation(soliton, grid, cfg);
            const std::string base =
                out.empty() ? "" : out + ".lf.m" + std::to_string(nodes);
            emit_simulation(base, report, std::nullopt);
            nlohmann::json run = nlohmann::json::parse(report_to_json(report));
            run["log2_nodes"] = p;
            summary["runs"].push_back(run);
        }
    }

    // Least-squares line gamma = c0 + c1 / M through the ME measurements.
    if (me_points.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : me_points) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(me_points.size());
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double intercept = (sy - slope * sx) / n;
        summary["gamma_vs_inverse_nodes"] = {{"slope", slope},
                                             {"intercept", intercept}};
    }

    emit(out.empty() ? "" : out + ".json", summary.dump(2) + "\n");
    if (!out.empty()) std::cout << "wrote " << out << ".json and per-run files\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"method-of-characteristics integrator and stability engine"};
    app.require_subcommand(1);

    // shared settings
    std::string config_path;
    std::string out;
    std::uint64_t seed = 0;
    std::string scheme = "se";
    std::string model = "spun";
    std::string solution = "2-";
    double alpha = 2.0 / 3.0;
    double h = 0.04;
    int n_z = 2001;
    bool reduced = false;

    double length = 100.0;
    int nodes = 2500;
    SimulationConfig cfg;
    std::vector<double> fit_window_values;

    auto* sw = app.add_subcommand("sweep", "per-mode max |lambda| over z in [0, pi]");
    add_config_option(sw, config_path);
    sw->add_option("--scheme", scheme, "se | me | lf | crk")->capture_default_str();
    sw->add_option("--h", h, "step size")->check(CLI::PositiveNumber)->capture_default_str();
    sw->add_option("--model", model, "spun | random | isotropic | free")->capture_default_str();
    sw->add_option("--solution", solution, "constant background id, e.g. 2-")->capture_default_str();
    sw->add_option("--alpha", alpha, "spun core-ellipticity parameter")->capture_default_str();
    sw->add_option("--nz", n_z, "number of z samples")->check(CLI::Range(3, 2000001))->capture_default_str();
    sw->add_flag("--reduced", reduced, "use the reduced 4x4 linearization (default full 6x6)");
    sw->add_option("--out", out, "output CSV path (default stdout)");
    sw->add_option("--seed", seed, "unused here; accepted for uniformity");

    auto* sim = app.add_subcommand("simulate", "integrate a perturbed background");
    sim->add_option("--scheme", scheme, "se | me | lf | crk")->capture_default_str();
    sim->add_option("--model", model, "spun | random | isotropic | free")->capture_default_str();
    sim->add_option("--solution", solution, "constant id or kink")->capture_default_str();
    sim->add_option("--alpha", alpha, "spun core-ellipticity parameter")->capture_default_str();
    sim->add_option("--length", length, "domain length")->check(CLI::PositiveNumber)->capture_default_str();
    sim->add_option("--nodes", nodes, "grid nodes M+1 (h = length / nodes)")->check(CLI::Range(3, 1 << 20))->capture_default_str();
    sim->add_option("--t-end", cfg.t_end, "integration time")->check(CLI::PositiveNumber)->capture_default_str();
    sim->add_option("--noise", cfg.noise_amplitude, "uniform noise amplitude on every component")->capture_default_str();
    sim->add_option("--sample-every", cfg.sample_every, "steps between samples")->check(CLI::PositiveNumber)->capture_default_str();
    sim->add_option("--blowup-threshold", cfg.blowup_threshold)->capture_default_str();
    sim->add_option("--destruction-fraction", cfg.destruction_fraction,
                    "error / reference-norm ratio that marks the solution destroyed")
        ->capture_default_str();
    sim->add_option("--fit-window", fit_window_values, "t1 t2 for the growth-rate fit (default: automatic)")->expected(2);
    sim->add_option("--out", out, "output base path; writes .json, .series.csv, .spectrum.csv (default stdout)");
    sim->add_option("--seed", seed, "noise RNG seed")->capture_default_str();
    add_config_option(sim, config_path);

    double k_max = 10.0, k_step = 0.005;
    auto* cl = app.add_subcommand("classify", "physical stability of all 18 constant backgrounds");
    cl->add_option("--out", out, "CSV output path (table always goes to stdout)");
    cl->add_option("--k-max", k_max)->check(CLI::PositiveNumber)->capture_default_str();
    cl->add_option("--k-step", k_step)->check(CLI::PositiveNumber)->capture_default_str();
    cl->add_option("--seed", seed, "unused here; accepted for uniformity");
    add_config_option(cl, config_path);

    std::string soliton_schemes = "both";
    double omega = 0.7;
    double gn_length = 64.0;
    std::vector<int> log2_nodes{11, 12};
    double t_end_me = 1000.0;
    double t_end_lf = 30.0;
    auto* so = app.add_subcommand("soliton", "standing-soliton experiments");
    so->add_option("--scheme", soliton_schemes, "me | lf | both")->check(CLI::IsMember({"me", "lf", "both"}))->capture_default_str();
    so->add_option("--omega", omega, "soliton frequency in (0, 1)")->capture_default_str();
    so->add_option("--length", gn_length, "domain length")->check(CLI::PositiveNumber)->capture_default_str();
    so->add_option("--log2-nodes", log2_nodes, "node counts as powers of two, each in [6, 14]")->capture_default_str();
    so->add_option("--t-end-me", t_end_me)->check(CLI::PositiveNumber)->capture_default_str();
    so->add_option("--t-end-lf", t_end_lf)->check(CLI::PositiveNumber)->capture_default_str();
    so->add_option("--noise", cfg.noise_amplitude, "uniform noise amplitude")->capture_default_str();
    so->add_option("--sample-every", cfg.sample_every)->check(CLI::PositiveNumber)->capture_default_str();
    so->add_option("--out", out, "output base path (default stdout for the summary)");
    so->add_option("--seed", seed, "noise RNG seed")->capture_default_str();
    add_config_option(so, config_path);

    CLI11_PARSE(app, argc, argv);

    try {
        for (CLI::App* cmd : {sw, sim, cl, so})
            if (cmd->parsed()) apply_config_file(cmd, config_path);
        cfg.seed = seed;
        std::optional<std::pair<double, double>> fit_window;
        if (fit_window_values.size() == 2)
            fit_window = std::pair{fit_window_values[0], fit_window_values[1]};
        if (sw->parsed())
            return cmd_sweep(scheme, h, model, solution, alpha, n_z, reduced, out);
        if (sim->parsed())
            return cmd_simulate(scheme, model, solution, alpha, length, nodes, cfg,
                                out, fit_window);
        if (cl->parsed()) return cmd_classify(out, k_max, k_step);
        if (so->parsed())
            return cmd_soliton(soliton_schemes, omega, gn_length, log2_nodes,
                               t_end_me, t_end_lf, cfg, out);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "moc: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "moc: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
