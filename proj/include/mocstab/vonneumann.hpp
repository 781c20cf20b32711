#pragma once

#include <string>
#include <vector>

#include "mocstab/complex_matrix.hpp"
#include "mocstab/eigen.hpp"
#include "mocstab/models.hpp"

namespace mocstab {

enum class SchemeKind { SE, ME, LF, CRK };

SchemeKind scheme_from_id(const std::string& id);  // "se", "me", "lf", "crk"
std::string scheme_id(SchemeKind k);

/// Per-mode shift operator: diag(e^{-iz} I_{n/2}, e^{+iz} I_{n/2}).
ComplexMatrix q_matrix(double z, std::size_t n);

/// Simple-Euler amplification matrix  N = Q (I + h P).
ComplexMatrix amplification_se(double z, double h, const ComplexMatrix& p);

/// Modified-Euler amplification matrix  N = (1/2)[Q + (I + hP) Q (I + hP)].
ComplexMatrix amplification_me(double z, double h, const ComplexMatrix& p);

/// Leap-frog quadratic pencil  lambda^2 I - 2 lambda h Q P - Q^2.
QuadraticPencil amplification_lf(double z, double h, const ComplexMatrix& p);

/// Classical RK4 amplification matrix
/// N = Q + hQP + (h^2/2) PQP + (h^3/6) P^2 QP + (h^4/24) P^3 QP.
ComplexMatrix amplification_crk(double z, double h, const ComplexMatrix& p);

/// Eigenvalues of the per-mode amplification operator for any scheme
/// (2n of them for LF, n otherwise).
std::vector<Complex> amplification_eigenvalues(SchemeKind scheme, double z, double h,
                                               const ComplexMatrix& p);

struct SweepResult {
    SchemeKind scheme;
    double h;
    std::vector<double> z;        // strictly increasing in [0, pi]
    std::vector<double> max_abs;  // max |lambda| per z
    std::vector<double> gamma;    // (max|lambda| - 1) / h

    std::size_t argmax() const;
    /// Peak location refined by a parabola through the grid argmax and neighbors.
    double peak_z() const;
    double peak_max_abs() const;
};

SweepResult sweep(SchemeKind scheme, double h, const ComplexMatrix& p, int n_z = 2001);

/// Dispersion frequencies omega_j = i lambda_j(P - i k Sigma) of the
/// linearized system, with Sigma = diag(I_{n/2}, -I_{n/2}).
std::vector<Complex> physical_dispersion(const ComplexMatrix& p, double k);

enum class StabilityClass { Stable, UnstableAtKZero, UnstableKNonzeroOnly };

std::string stability_class_name(StabilityClass c);

struct ClassifyOptions {
    double k_max = 10.0;
    double k_step = 0.005;
    double im_tol = 1e-8;
};

StabilityClass classify_system(const CouplingModel& model, const ConstantSolution& sol,
                               const ClassifyOptions& opts = {});

/// Theoretical growth-rate helpers for the endpoint (z = 0, pi) harmonics.
double gamma_se_endpoint(double h, double max_abs_lambda_p);   // (h/2) |lambda|^2
double gamma_me_endpoint(double h, double max_abs_lambda_p);   // (h^3/8) |lambda|^4

}  // namespace mocstab
