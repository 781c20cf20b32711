#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "mocstab/complex_matrix.hpp"

namespace mocstab {

using Vec3 = std::array<double, 3>;

enum class ModelFamily { Stokes, GrossNeveu };

/// Diagonal cross/self interaction matrices for the counterpropagating
/// Stokes-vector family, plus the model tag. Gross-Neveu carries no matrices.
struct CouplingModel {
    ModelFamily family = ModelFamily::Stokes;
    Vec3 jc{};  // diagonal of the cross-interaction matrix
    Vec3 js{};  // diagonal of the self-interaction matrix
    std::string id = "custom";

    /// Highly spun birefringent fiber, with core-ellipticity parameter alpha.
    /// Normalized so that alpha = 2/3 (the default) gives
    /// jc = diag(1, -1, -2), js = 0, i.e. the componentwise system used for
    /// all quantitative results here.
    static CouplingModel spun(double alpha = 2.0 / 3.0) {
        const double s = 1.5;
        return {ModelFamily::Stokes,
                {s * alpha, -s * alpha, -2.0 * s * alpha},
                {0.0, 0.0, s * (2.0 - 3.0 * alpha)},
                "spun"};
    }

    /// Randomly birefringent fiber.
    static CouplingModel random_birefringent() {
        return {ModelFamily::Stokes, {-1.0, 1.0, -1.0}, {0.0, 0.0, 0.0}, "random"};
    }

    /// Isotropic (non-birefringent) fiber.
    static CouplingModel isotropic() {
        return {ModelFamily::Stokes, {-2.0, -2.0, 0.0}, {-1.0, -1.0, 0.0}, "isotropic"};
    }

    /// Zero right-hand side; free advection test model.
    static CouplingModel free_model() {
        return {ModelFamily::Stokes, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, "free"};
    }

    static CouplingModel gross_neveu() {
        return {ModelFamily::GrossNeveu, {}, {}, "gross-neveu"};
    }

    /// Lookup by CLI identifier: "spun", "random", "isotropic", "free", "gross-neveu".
    static CouplingModel from_id(const std::string& id, double alpha = 2.0 / 3.0);
};

/// Constant background S_j^+ = 1, S_j^- = sign, other components zero.
struct ConstantSolution {
    int component = 2;  // 1-based index in {1,2,3}
    int sign = -1;      // +1 or -1

    static ConstantSolution from_id(const std::string& id);  // "1+", "2-", ...
    std::string id() const;
};

/// Stationary kink connecting the (2-) asymptotics. The two sign flags select
/// the other families; only the default branch is compared against known values.
struct KinkSolution {
    int sign_perp = +1;  // flips components 1 and 3
    int sign_axis = +1;  // flips component 2
};

/// Standing Gross-Neveu soliton parameterized by its frequency.
struct GNSoliton {
    double omega;  // in (0, 1)

    explicit GNSoliton(double omega_) : omega(omega_) {
        if (!(omega > 0.0 && omega < 1.0))
            throw std::invalid_argument("GNSoliton: omega must lie in (0, 1)");
    }

    double beta() const { return std::sqrt(1.0 - omega * omega); }
    double mu() const { return std::sqrt((1.0 - omega) / (1.0 + omega)); }
};

/// f+- = S+- x (Jc S-+) + S+- x (Js S+-).
std::pair<Vec3, Vec3> stokes_rhs(const Vec3& splus, const Vec3& sminus,
                                 const CouplingModel& model);

/// Right-hand sides of the Gross-Neveu system in (u, v) variables:
/// fu = i(|v|^2 u + v^2 u*) - i v,  fv = i(|u|^2 v + u^2 v*) - i u.
std::pair<Complex, Complex> gn_rhs(Complex u, Complex v);

/// u = (psi + chi)/sqrt(2), v = (psi - chi)/sqrt(2), and the inverse map.
std::pair<Complex, Complex> gn_from_psi_chi(Complex psi, Complex chi);
std::pair<Complex, Complex> gn_to_psi_chi(Complex u, Complex v);

std::pair<Vec3, Vec3> constant_profile(const ConstantSolution& sol);
std::pair<Vec3, Vec3> kink_profile(double x, const KinkSolution& sol = {});
std::pair<Complex, Complex> gn_soliton_profile(double x, const GNSoliton& s);

/// Linearization of the Stokes right-hand side about a constant background.
struct LinearizationP {
    ComplexMatrix p;  // real-valued entries; 4x4 (reduced) or 6x6 (full)
    bool reduced;
};

/// reduced = true: 4x4 Jacobian on the perturbation subspace excluding the
/// background component, ordered [s+_a, s+_b, s-_a, s-_b] with a < b the two
/// remaining component indices. reduced = false: full 6x6 Jacobian ordered
/// [s+_1, s+_2, s+_3, s-_1, s-_2, s-_3]. In both cases the transport matrix
/// is diag(I_{n/2}, -I_{n/2}).
LinearizationP linearize(const CouplingModel& model, const ConstantSolution& sol,
                         bool reduced);

}  // namespace mocstab
