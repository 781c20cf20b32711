#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mocstab/diagnostics.hpp"
#include "mocstab/simulate.hpp"
#include "mocstab/vonneumann.hpp"

using namespace mocstab;

namespace {

constexpr double kPi = std::numbers::pi;

std::function<std::pair<Vec3, Vec3>(double)> constant_ref(const ConstantSolution& sol) {
    const auto prof = constant_profile(sol);
    return [prof](double) { return prof; };
}

}  // namespace

TEST_CASE("error components exclude the background slot") {
    const PeriodicGrid grid(8, 8.0);
    const ConstantSolution sol{2, -1};
    StokesState s(grid);
    const auto [bp, bm] = constant_profile(sol);
    for (int m = 0; m < 8; ++m) {
        s.plus[m] = bp;
        s.minus[m] = bm;
    }
    s.plus[3][0] += 0.5;   // included
    s.plus[3][1] += 9.0;   // background component: ignored
    s.minus[5][2] -= 1.2;  // included

    const auto err = error_components(s, constant_ref(sol), 2);
    REQUIRE(err.size() == 8);
    REQUIRE(err[0].size() == 4);  // [s+_1, s+_3, s-_1, s-_3]
    CHECK(err[3][0] == doctest::Approx(0.5));
    CHECK(err[5][3] == doctest::Approx(-1.2));
    CHECK(total_error(s, constant_ref(sol), 2) ==
          doctest::Approx(std::sqrt(0.25 + 1.44)));

    // without exclusion the planted background error shows up
    const auto full = error_components(s, constant_ref(sol), std::nullopt);
    REQUIRE(full[0].size() == 6);
    CHECK(total_error(s, constant_ref(sol), std::nullopt) ==
          doctest::Approx(std::sqrt(0.25 + 81.0 + 1.44)));
}

TEST_CASE("gn error components are the four real parts") {
    const PeriodicGrid grid(4, 4.0);
    GNState s(grid);
    const auto ref = [](double) { return std::pair{Complex(1.0, 0.0), Complex(0.0, 0.0)}; };
    for (auto& u : s.plus) u = Complex(1.0, 0.0);
    s.plus[1] = Complex(1.25, -0.5);
    s.minus[2] = Complex(0.0, 2.0);
    const auto err = error_components(s, ref);
    REQUIRE(err[0].size() == 4);
    CHECK(err[1][0] == doctest::Approx(0.25));
    CHECK(err[1][1] == doctest::Approx(-0.5));
    CHECK(err[2][3] == doctest::Approx(2.0));
    CHECK(total_error(s, ref) == doctest::Approx(std::sqrt(0.0625 + 0.25 + 4.0)));
}

TEST_CASE("uniform noise gives the expected total error") {
    // e^2 has expectation (M+1) * 4 * a^2 / 3 over the four included components
    const int nodes = 40000;
    const double a = 1e-3;
    const PeriodicGrid grid(nodes, 100.0);
    const ConstantSolution sol{2, -1};
    StokesState s(grid);
    const auto [bp, bm] = constant_profile(sol);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-a, a);
    for (int m = 0; m < nodes; ++m) {
        s.plus[m] = bp;
        s.minus[m] = bm;
        for (int c = 0; c < 3; ++c) {
            s.plus[m][c] += u(rng);
            s.minus[m][c] += u(rng);
        }
    }
    const double want = a * std::sqrt(nodes * 4.0 / 3.0);
    CHECK(total_error(s, constant_ref(sol), 2) == doctest::Approx(want).epsilon(0.02));
}

TEST_CASE("spectrum satisfies Parseval and has the right z grid") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = 101;  // odd: no Nyquist bin
    const double h = 0.25;
    std::vector<std::vector<double>> err(n, std::vector<double>(4));
    double sumsq = 0.0;
    for (auto& node : err)
        for (auto& v : node) {
            v = u(rng);
            sumsq += v * v;
        }
    const auto spec = error_spectrum_from_components(err, h);
    REQUIRE(spec.z.size() == static_cast<std::size_t>(n / 2 + 1));
    CHECK(spec.z.front() == 0.0);
    for (std::size_t q = 0; q < spec.z.size(); ++q)
        CHECK(spec.z[q] == doctest::Approx(2.0 * kPi * q / n).epsilon(1e-12));

    double power = 0.0;
    for (double lg : spec.log10_magnitude) power += std::pow(10.0, 2.0 * lg);
    CHECK(power == doctest::Approx(n * sumsq).epsilon(1e-10));
}

TEST_CASE("a seeded single mode peaks at its own wavenumber") {
    const int n = 128;
    const int q0 = 37;
    std::vector<std::vector<double>> err(n, std::vector<double>(4, 0.0));
    for (int m = 0; m < n; ++m)
        err[m][1] = std::cos(2.0 * kPi * q0 * m / n + 0.3);
    const auto spec = error_spectrum_from_components(err, 1.0);
    std::size_t argmax = 0;
    for (std::size_t q = 1; q < spec.z.size(); ++q)
        if (spec.log10_magnitude[q] > spec.log10_magnitude[argmax]) argmax = q;
    CHECK(argmax == static_cast<std::size_t>(q0));
}

TEST_CASE("growth rate of a clean exponential") {
    std::vector<double> t, e;
    for (int i = 0; i <= 200; ++i) {
        t.push_back(0.5 * i);
        e.push_back(1e-10 * std::exp(0.12 * t.back()));
    }
    const auto g = measure_growth_rate(t, e, 10.0, 80.0);
    CHECK(g.gamma == doctest::Approx(0.12).epsilon(1e-10));
    CHECK(g.t1 == doctest::Approx(10.0));
    CHECK(g.t2 == doctest::Approx(80.0));
    CHECK(g.fit_residual < 1e-9);

    // window endpoints snap to the nearest samples
    const auto g2 = measure_growth_rate(t, e, 10.2, 79.8);
    CHECK(g2.t1 == doctest::Approx(10.0));
    CHECK(g2.t2 == doctest::Approx(80.0));

    CHECK_THROWS(measure_growth_rate(t, e, 80.0, 10.0));
    e[40] = 0.0;
    CHECK_THROWS(measure_growth_rate(t, e, 10.0, 80.0));
}

TEST_CASE("automatic window finds the exponential stretch") {
    // noise floor, then exp growth at 0.2, then saturation at O(1)
    std::vector<double> t, e;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> jitter(0.97, 1.03);
    for (int i = 0; i <= 400; ++i) {
        const double tt = 0.25 * i;
        t.push_back(tt);
        const double grown = 1e-9 * std::exp(0.2 * tt);
        e.push_back(std::min(1.0, std::max(2e-9, grown)) * jitter(rng));
    }
    const auto g = auto_growth_rate(t, e);
    REQUIRE(g.has_value());
    CHECK(g->gamma == doctest::Approx(0.2).epsilon(0.05));
}

TEST_CASE("conservation sums are the rectangle-rule norms") {
    const PeriodicGrid grid(4, 2.0);  // h = 0.5
    StokesState s(grid);
    for (int m = 0; m < 4; ++m) {
        s.plus[m] = {1.0, 0.0, 0.0};
        s.minus[m] = {0.0, 2.0, 0.0};
    }
    const auto [cp, cm] = conservation_sums(s);
    CHECK(cp == doctest::Approx(0.5 * 4 * 1.0));
    CHECK(cm == doctest::Approx(0.5 * 4 * 4.0));

    GNState g(grid);
    for (int m = 0; m < 4; ++m) {
        g.plus[m] = Complex(0.0, 1.0);
        g.minus[m] = Complex(3.0, 4.0);
    }
    const auto [gu, gv] = conservation_sums(g);
    CHECK(gu == doctest::Approx(2.0));
    CHECK(gv == doctest::Approx(50.0));
}

TEST_CASE("late-time spectrum peak matches the sweep prediction") {
    // leap-frog instability peaks near z = pi/2, and so must the error spectrum
    const PeriodicGrid grid(2500, 100.0);  // h = 0.04
    SimulationConfig cfg;
    cfg.scheme = SchemeKind::LF;
    cfg.t_end = 20.0;
    cfg.seed = 1;
    const auto report = run_stokes_simulation(
        CouplingModel::spun(), ConstantSolution{2, -1}, grid, cfg);

    const auto& spec = report.final_spectrum;
    std::size_t argmax = 0;
    for (std::size_t q = 1; q < spec.z.size(); ++q)
        if (spec.log10_magnitude[q] > spec.log10_magnitude[argmax]) argmax = q;

    const auto p = linearize(CouplingModel::spun(), ConstantSolution{2, -1}, true).p;
    const auto sw = sweep(SchemeKind::LF, grid.h(), p, 2001);
    CHECK(std::abs(spec.z[argmax] - sw.peak_z()) < 0.2);
}
