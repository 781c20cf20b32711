#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "mocstab/diagnostics.hpp"
#include "mocstab/schemes.hpp"
#include "mocstab/vonneumann.hpp"

namespace mocstab {

/// Exact solution to perturb and compare against.
using StokesReference = std::variant<ConstantSolution, KinkSolution>;

struct SimulationConfig {
    SchemeKind scheme = SchemeKind::SE;
    double t_end = 100.0;
    double noise_amplitude = 1e-12;
    std::uint64_t seed = 0;
    int sample_every = 25;            // steps between diagnostic samples
    double blowup_threshold = 1e6;  // any |component| above this stops the run
    // The solution counts as destroyed once the total error reaches this
    // fraction of the Euclidean norm of the reference state itself.
    double destruction_fraction = 1.0;
    // When band_halfwidth > 0, each sample also records the peak spectral
    // magnitude over |z - band_center| <= band_halfwidth. This follows one
    // unstable band without contamination from the smooth error near z = 0.
    double band_center = 1.5707963267948966;
    double band_halfwidth = 0.0;
};

struct SimulationReport {
    // provenance
    std::string model_id;
    std::string solution_id;
    SchemeKind scheme = SchemeKind::SE;
    double h = 0.0;
    double length = 0.0;
    int node_count = 0;
    std::uint64_t seed = 0;
    double noise_amplitude = 0.0;
    double t_end = 0.0;

    // time series, sampled every config.sample_every steps (plus t = 0 and the end)
    std::vector<double> t;
    std::vector<double> total_error;
    std::vector<double> conservation_plus;
    std::vector<double> conservation_minus;
    std::vector<double> band_amplitude;  // only when config.band_halfwidth > 0

    ErrorSpectrum final_spectrum;  // at the last recorded state
    double final_time = 0.0;

    std::optional<double> blowup_time;       // set when the run stopped early
    std::optional<double> destruction_time;  // first sample with error >= threshold
    std::optional<GrowthRateEstimate> growth;  // filled by the caller on request
};

SimulationReport run_stokes_simulation(const CouplingModel& model,
                                       const StokesReference& reference,
                                       const PeriodicGrid& grid,
                                       const SimulationConfig& config);

SimulationReport run_gn_simulation(const GNSoliton& soliton, const PeriodicGrid& grid,
                                   const SimulationConfig& config);

}  // namespace mocstab
