#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mocstab/schemes.hpp"

namespace mocstab {

/// One-sided spectrum of the nodal error over the discrete wavenumbers
/// k = 2 pi q / L, q = 0 .. floor((M+1)/2), reported against z = k h.
/// The magnitude at interior q combines the +q and -q bins, so the squared
/// magnitudes sum to (M+1) times the squared nodal error (Parseval).
struct ErrorSpectrum {
    std::vector<double> z;
    std::vector<double> log10_magnitude;
};

struct GrowthRateEstimate {
    double gamma;         // 1/time
    double t1, t2;        // window endpoints
    double fit_residual;  // max deviation of ln e(t) from the chord
};

/// Nodal errors against the reference, one small real vector per node.
/// Stokes constant backgrounds exclude the background component (its
/// perturbation transports freely and stays at noise level).
std::vector<std::vector<double>> error_components(
    const StokesState& state,
    const std::function<std::pair<Vec3, Vec3>(double)>& reference,
    std::optional<int> excluded_component);

std::vector<std::vector<double>> error_components(
    const GNState& state,
    const std::function<std::pair<Complex, Complex>(double)>& reference);

/// Euclidean norm over all nodes and included error components.
double total_error_from_components(const std::vector<std::vector<double>>& err);

double total_error(const StokesState& state,
                   const std::function<std::pair<Vec3, Vec3>(double)>& reference,
                   std::optional<int> excluded_component);
double total_error(const GNState& state,
                   const std::function<std::pair<Complex, Complex>(double)>& reference);

ErrorSpectrum error_spectrum_from_components(const std::vector<std::vector<double>>& err,
                                             double h);

ErrorSpectrum error_spectrum(const StokesState& state,
                             const std::function<std::pair<Vec3, Vec3>(double)>& reference,
                             std::optional<int> excluded_component);
ErrorSpectrum error_spectrum(const GNState& state,
                             const std::function<std::pair<Complex, Complex>(double)>& reference);

/// Largest spectral magnitude (same normalization as error_spectrum, linear
/// scale) over the bins with |z - center_z| <= halfwidth. Used to follow one
/// unstable band of the spectrum without contamination from the smooth
/// discretization error near z = 0.
double band_peak_magnitude(const std::vector<std::vector<double>>& err, double h,
                           double center_z, double halfwidth);

/// Chord slope of ln e(t) over [t1, t2] (nearest samples are used).
GrowthRateEstimate measure_growth_rate(const std::vector<double>& t,
                                       const std::vector<double>& e, double t1,
                                       double t2);

/// Longest window whose chord fit has residual below 0.1 |ln e(t2) - ln e(t1)|.
std::optional<GrowthRateEstimate> auto_growth_rate(const std::vector<double>& t,
                                                   const std::vector<double>& e);

/// h * sum_m |S_m|^2 per family (rectangle rule on the periodic grid).
std::pair<double, double> conservation_sums(const StokesState& state);
std::pair<double, double> conservation_sums(const GNState& state);

}  // namespace mocstab
