#include "mocstab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mocstab {

std::vector<std::vector<double>> error_components(
    const StokesState& state,
    const std::function<std::pair<Vec3, Vec3>(double)>& reference,
    std::optional<int> excluded_component) {
    const int n = state.grid.node_count;
    std::vector<std::vector<double>> err(n);
    for (int m = 0; m < n; ++m) {
        const auto [rp, rm] = reference(state.grid.x(m));
        auto& e = err[m];
        for (int c = 0; c < 3; ++c) {
            if (excluded_component && c == *excluded_component - 1) continue;
            e.push_back(state.plus[m][c] - rp[c]);
        }
        for (int c = 0; c < 3; ++c) {
            if (excluded_component && c == *excluded_component - 1) continue;
            e.push_back(state.minus[m][c] - rm[c]);
        }
    }
    return err;
}

std::vector<std::vector<double>> error_components(
    const GNState& state,
    const std::function<std::pair<Complex, Complex>(double)>& reference) {
    const int n = state.grid.node_count;
    std::vector<std::vector<double>> err(n);
    for (int m = 0; m < n; ++m) {
        const auto [ru, rv] = reference(state.grid.x(m));
        const Complex du = state.plus[m] - ru;
        const Complex dv = state.minus[m] - rv;
        err[m] = {du.real(), du.imag(), dv.real(), dv.imag()};
    }
    return err;
}

double total_error_from_components(const std::vector<std::vector<double>>& err) {
    double s = 0.0;
    for (const auto& node : err)
        for (double v : node) s += v * v;
    return std::sqrt(s);
}

double total_error(const StokesState& state,
                   const std::function<std::pair<Vec3, Vec3>(double)>& reference,
                   std::optional<int> excluded_component) {
    return total_error_from_components(
        error_components(state, reference, excluded_component));
}

double total_error(const GNState& state,
                   const std::function<std::pair<Complex, Complex>(double)>& reference) {
    return total_error_from_components(error_components(state, reference));
}

ErrorSpectrum error_spectrum_from_components(const std::vector<std::vector<double>>& err,
                                             double h) {
    const int n = static_cast<int>(err.size());
    if (n == 0) throw std::invalid_argument("error_spectrum: empty state");
    const int ncomp = static_cast<int>(err[0].size());
    const int q_max = n / 2;

    ErrorSpectrum spec;
    spec.z.resize(q_max + 1);
    spec.log10_magnitude.resize(q_max + 1);

    for (int q = 0; q <= q_max; ++q) {
        const double theta = -2.0 * std::numbers::pi * q / n;
        double mag2 = 0.0;
        for (int c = 0; c < ncomp; ++c) {
            double re = 0.0, im = 0.0;
            for (int m = 0; m < n; ++m) {
                const double a = theta * m;
                re += err[m][c] * std::cos(a);
                im += err[m][c] * std::sin(a);
            }
            mag2 += re * re + im * im;
        }
        // Interior bins also own their conjugate partner at n - q.
        const bool two_sided = (q != 0) && !(n % 2 == 0 && q == q_max);
        if (two_sided) mag2 *= 2.0;  // real data: |c_{n-q}| = |c_q|
        spec.z[q] = 2.0 * std::numbers::pi * q / n;  // = (2 pi q / L) h
        spec.log10_magnitude[q] = 0.5 * std::log10(std::max(mag2, 1e-300));
    }
    (void)h;
    return spec;
}

ErrorSpectrum error_spectrum(const StokesState& state,
                             const std::function<std::pair<Vec3, Vec3>(double)>& reference,
                             std::optional<int> excluded_component) {
    return error_spectrum_from_components(
        error_components(state, reference, excluded_component), state.grid.h());
}

ErrorSpectrum error_spectrum(const GNState& state,
                             const std::function<std::pair<Complex, Complex>(double)>& reference) {
    return error_spectrum_from_components(error_components(state, reference),
                                          state.grid.h());
}

double band_peak_magnitude(const std::vector<std::vector<double>>& err, double h,
                           double center_z, double halfwidth) {
    const int n = static_cast<int>(err.size());
    if (n == 0) throw std::invalid_argument("band_peak_magnitude: empty state");
    const int ncomp = static_cast<int>(err[0].size());
    const int q_max = n / 2;

    double best = 0.0;
    bool any = false;
    for (int q = 0; q <= q_max; ++q) {
        const double z = 2.0 * std::numbers::pi * q / n;
        if (std::abs(z - center_z) > halfwidth) continue;
        any = true;
        const Complex w = std::polar(1.0, -z);
        std::vector<Complex> acc(ncomp, Complex(0.0));
        Complex ph(1.0);
        for (int m = 0; m < n; ++m) {
            for (int c = 0; c < ncomp; ++c) acc[c] += err[m][c] * ph;
            ph *= w;
        }
        double mag2 = 0.0;
        for (const auto& a : acc) mag2 += std::norm(a);
        const bool two_sided = (q != 0) && !(n % 2 == 0 && q == q_max);
        if (two_sided) mag2 *= 2.0;
        best = std::max(best, mag2);
    }
    if (!any) throw std::invalid_argument("band_peak_magnitude: no bins in the band");
    (void)h;
    return std::sqrt(best);
}

GrowthRateEstimate measure_growth_rate(const std::vector<double>& t,
                                       const std::vector<double>& e, double t1,
                                       double t2) {
    if (t.size() != e.size() || t.size() < 2)
        throw std::invalid_argument("measure_growth_rate: bad series");
    if (!(t2 > t1)) throw std::invalid_argument("measure_growth_rate: need t2 > t1");

    const auto nearest = [&](double tv) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < t.size(); ++i)
            if (std::abs(t[i] - tv) < std::abs(t[best] - tv)) best = i;
        return best;
    };
    const std::size_t i1 = nearest(t1), i2 = nearest(t2);
    if (i2 <= i1) throw std::invalid_argument("measure_growth_rate: empty window");
    for (std::size_t i = i1; i <= i2; ++i)
        if (!(e[i] > 0.0))
            throw std::invalid_argument("measure_growth_rate: non-positive error in window");

    const double l1 = std::log(e[i1]), l2 = std::log(e[i2]);
    const double gamma = (l2 - l1) / (t[i2] - t[i1]);
    double resid = 0.0;
    for (std::size_t i = i1; i <= i2; ++i) {
        const double chord = l1 + gamma * (t[i] - t[i1]);
        resid = std::max(resid, std::abs(std::log(e[i]) - chord));
    }
    return {gamma, t[i1], t[i2], resid};
}

std::optional<GrowthRateEstimate> auto_growth_rate(const std::vector<double>& t,
                                                   const std::vector<double>& e) {
    std::optional<GrowthRateEstimate> best;
    const std::size_t n = t.size();
    for (std::size_t i1 = 0; i1 + 1 < n; ++i1) {
        if (!(e[i1] > 0.0)) continue;
        for (std::size_t i2 = n; i2-- > i1 + 1;) {
            if (!(e[i2] > 0.0)) continue;
            if (best && t[i2] - t[i1] <= best->t2 - best->t1) break;
            GrowthRateEstimate g;
            try {
                g = measure_growth_rate(t, e, t[i1], t[i2]);
            } catch (const std::invalid_argument&) {
                continue;
            }
            const double span = std::abs(std::log(e[i2]) - std::log(e[i1]));
            if (g.fit_residual < 0.1 * span &&
                (!best || g.t2 - g.t1 > best->t2 - best->t1))
                best = g;
        }
    }
    return best;
}

std::pair<double, double> conservation_sums(const StokesState& state) {
    const double h = state.grid.h();
    double sp = 0.0, sm = 0.0;
    for (int m = 0; m < state.grid.node_count; ++m) {
        for (int c = 0; c < 3; ++c) {
            sp += state.plus[m][c] * state.plus[m][c];
            sm += state.minus[m][c] * state.minus[m][c];
        }
    }
    return {h * sp, h * sm};
}

std::pair<double, double> conservation_sums(const GNState& state) {
    const double h = state.grid.h();
    double sp = 0.0, sm = 0.0;
    for (int m = 0; m < state.grid.node_count; ++m) {
        sp += std::norm(state.plus[m]);
        sm += std::norm(state.minus[m]);
    }
    return {h * sp, h * sm};
}

}  // namespace mocstab
