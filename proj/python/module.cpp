// Python bindings for the main operations: model construction, linearization,
// amplification sweeps, classification, and the two simulation drivers.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mocstab/diagnostics.hpp"
#include "mocstab/models.hpp"
#include "mocstab/report.hpp"
#include "mocstab/simulate.hpp"
#include "mocstab/vonneumann.hpp"

namespace py = pybind11;
using namespace mocstab;

namespace {

std::vector<std::vector<Complex>> matrix_rows(const ComplexMatrix& m) {
    std::vector<std::vector<Complex>> rows(m.dim(), std::vector<Complex>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
    return rows;
}

ComplexMatrix matrix_from_rows(const std::vector<std::vector<Complex>>& rows) {
    ComplexMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("matrix rows must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

py::dict report_dict(const SimulationReport& r) {
    py::dict d;
    d["model"] = r.model_id;
    d["solution"] = r.solution_id;
    d["scheme"] = scheme_id(r.scheme);
    d["h"] = r.h;
    d["length"] = r.length;
    d["node_count"] = r.node_count;
    d["seed"] = r.seed;
    d["noise_amplitude"] = r.noise_amplitude;
    d["t_end"] = r.t_end;
    d["t"] = r.t;
    d["total_error"] = r.total_error;
    d["conservation_plus"] = r.conservation_plus;
    d["conservation_minus"] = r.conservation_minus;
    d["spectrum_z"] = r.final_spectrum.z;
    d["spectrum_log10"] = r.final_spectrum.log10_magnitude;
    d["final_time"] = r.final_time;
    d["blowup_time"] = r.blowup_time ? py::cast(*r.blowup_time) : py::none();
    d["destruction_time"] =
        r.destruction_time ? py::cast(*r.destruction_time) : py::none();
    if (r.growth) {
        py::dict g;
        g["gamma"] = r.growth->gamma;
        g["t1"] = r.growth->t1;
        g["t2"] = r.growth->t2;
        g["fit_residual"] = r.growth->fit_residual;
        d["growth"] = g;
    } else {
        d["growth"] = py::none();
    }
    return d;
}

SimulationConfig make_config(const std::string& scheme, double t_end, double noise,
                             std::uint64_t seed, int sample_every) {
    SimulationConfig cfg;
    cfg.scheme = scheme_from_id(scheme);
    cfg.t_end = t_end;
    cfg.noise_amplitude = noise;
    cfg.seed = seed;
    cfg.sample_every = sample_every;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_mocstab, m) {
    m.doc() = "characteristics integrator and per-mode stability engine";

    m.def("linearization",
          [](const std::string& model_id, const std::string& solution_id,
             bool reduced, double alpha) {
              const auto p = linearize(CouplingModel::from_id(model_id, alpha),
                                       ConstantSolution::from_id(solution_id),
                                       reduced);
              return matrix_rows(p.p);
          },
          py::arg("model"), py::arg("solution"), py::arg("reduced") = false,
          py::arg("alpha") = 2.0 / 3.0,
          "Jacobian of the coupling about a constant background, as nested lists");

    m.def("eigenvalues",
          [](const std::vector<std::vector<Complex>>& rows) {
              return eigenvalues(matrix_from_rows(rows));
          },
          py::arg("matrix"), "eigenvalues of a small dense complex matrix");

    m.def("sweep",
          [](const std::string& scheme, double h, const std::string& model_id,
             const std::string& solution_id, int n_z, bool reduced, double alpha) {
              const auto p = linearize(CouplingModel::from_id(model_id, alpha),
                                       ConstantSolution::from_id(solution_id),
                                       reduced);
              const auto s = sweep(scheme_from_id(scheme), h, p.p, n_z);
              py::dict d;
              d["scheme"] = scheme_id(s.scheme);
              d["h"] = s.h;
              d["z"] = s.z;
              d["max_abs_lambda"] = s.max_abs;
              d["gamma"] = s.gamma;
              d["peak_z"] = s.peak_z();
              d["peak_max_abs"] = s.peak_max_abs();
              return d;
          },
          py::arg("scheme"), py::arg("h"), py::arg("model") = "spun",
          py::arg("solution") = "2-", py::arg("n_z") = 2001,
          py::arg("reduced") = false, py::arg("alpha") = 2.0 / 3.0,
          "max |lambda| of the amplification operator over z in [0, pi]");

    m.def("classify",
          [](const std::string& model_id, const std::string& solution_id) {
              return stability_class_name(
                  classify_system(CouplingModel::from_id(model_id),
                                  ConstantSolution::from_id(solution_id)));
          },
          py::arg("model"), py::arg("solution"),
          "physical stability class of a constant background");

    m.def("simulate",
          [](const std::string& scheme, const std::string& model_id,
             const std::string& solution_id, double length, int nodes, double t_end,
             double noise, std::uint64_t seed, int sample_every, double alpha) {
              const auto cfg = make_config(scheme, t_end, noise, seed, sample_every);
              const auto model = CouplingModel::from_id(model_id, alpha);
              const StokesReference ref =
                  solution_id == "kink"
                      ? StokesReference{KinkSolution{}}
                      : StokesReference{ConstantSolution::from_id(solution_id)};
              auto report = run_stokes_simulation(model, ref, PeriodicGrid(nodes, length), cfg);
              if (auto g = auto_growth_rate(report.t, report.total_error))
                  report.growth = *g;
              return report_dict(report);
          },
          py::arg("scheme"), py::arg("model") = "spun", py::arg("solution") = "2-",
          py::arg("length") = 100.0, py::arg("nodes") = 2500,
          py::arg("t_end") = 100.0, py::arg("noise") = 1e-12, py::arg("seed") = 0,
          py::arg("sample_every") = 25, py::arg("alpha") = 2.0 / 3.0,
          "integrate a perturbed constant or kink background");

    m.def("simulate_soliton",
          [](const std::string& scheme, double omega, double length, int nodes,
             double t_end, double noise, std::uint64_t seed, int sample_every) {
              const auto cfg = make_config(scheme, t_end, noise, seed, sample_every);
              auto report = run_gn_simulation(GNSoliton(omega),
                                              PeriodicGrid(nodes, length), cfg);
              if (auto g = auto_growth_rate(report.t, report.total_error))
                  report.growth = *g;
              return report_dict(report);
          },
          py::arg("scheme"), py::arg("omega") = 0.7, py::arg("length") = 64.0,
          py::arg("nodes") = 2048, py::arg("t_end") = 100.0, py::arg("noise") = 1e-12,
          py::arg("seed") = 0, py::arg("sample_every") = 25,
          "integrate a perturbed standing soliton");
}
