#include "mocstab/models.hpp"

#include <cmath>
#include <stdexcept>

namespace mocstab {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

Vec3 diag_apply(const Vec3& d, const Vec3& x) {
    return {d[0] * x[0], d[1] * x[1], d[2] * x[2]};
}

// 3x3 cross-product matrix [a]_x, as rows.
std::array<Vec3, 3> cross_matrix(const Vec3& a) {
    return {Vec3{0.0, -a[2], a[1]},
            Vec3{a[2], 0.0, -a[0]},
            Vec3{-a[1], a[0], 0.0}};
}

}  // namespace

CouplingModel CouplingModel::from_id(const std::string& id, double alpha) {
    if (id == "spun") return spun(alpha);
    if (id == "random") return random_birefringent();
    if (id == "isotropic") return isotropic();
    if (id == "free") return free_model();
    if (id == "gross-neveu") return gross_neveu();
    throw std::invalid_argument("unknown model id: " + id);
}

ConstantSolution ConstantSolution::from_id(const std::string& id) {
    if (id.size() != 2 || id[0] < '1' || id[0] > '3' || (id[1] != '+' && id[1] != '-'))
        throw std::invalid_argument("unknown solution id: " + id +
                                    " (expected e.g. \"2-\")");
    return {id[0] - '0', id[1] == '+' ? +1 : -1};
}

std::string ConstantSolution::id() const {
    return std::string(1, static_cast<char>('0' + component)) + (sign > 0 ? "+" : "-");
}

std::pair<Vec3, Vec3> stokes_rhs(const Vec3& splus, const Vec3& sminus,
                                 const CouplingModel& model) {
    if (model.family != ModelFamily::Stokes)
        throw std::invalid_argument("stokes_rhs: model is not of the Stokes family");
    Vec3 fplus = cross(splus, diag_apply(model.jc, sminus));
    Vec3 fminus = cross(sminus, diag_apply(model.jc, splus));
    const Vec3 sp_self = cross(splus, diag_apply(model.js, splus));
    const Vec3 sm_self = cross(sminus, diag_apply(model.js, sminus));
    for (int i = 0; i < 3; ++i) {
        fplus[i] += sp_self[i];
        fminus[i] += sm_self[i];
    }
    return {fplus, fminus};
}

std::pair<Complex, Complex> gn_rhs(Complex u, Complex v) {
    const Complex i(0.0, 1.0);
    const Complex fu = i * (std::norm(v) * u + v * v * std::conj(u)) - i * v;
    const Complex fv = i * (std::norm(u) * v + u * u * std::conj(v)) - i * u;
    return {fu, fv};
}

std::pair<Complex, Complex> gn_from_psi_chi(Complex psi, Complex chi) {
    const double r = std::sqrt(0.5);
    return {r * (psi + chi), r * (psi - chi)};
}

std::pair<Complex, Complex> gn_to_psi_chi(Complex u, Complex v) {
    const double r = std::sqrt(0.5);
    return {r * (u + v), r * (u - v)};
}

std::pair<Vec3, Vec3> constant_profile(const ConstantSolution& sol) {
    if (sol.component < 1 || sol.component > 3 || (sol.sign != 1 && sol.sign != -1))
        throw std::invalid_argument("constant_profile: bad solution descriptor");
    Vec3 plus{}, minus{};
    plus[sol.component - 1] = 1.0;
    minus[sol.component - 1] = static_cast<double>(sol.sign);
    return {plus, minus};
}

std::pair<Vec3, Vec3> kink_profile(double x, const KinkSolution& sol) {
    const double r2 = std::sqrt(2.0);
    const double sech = 1.0 / std::cosh(r2 * x);
    const double s1 = sech / std::sqrt(3.0);
    const double th = std::tanh(r2 * x);
    const double p = static_cast<double>(sol.sign_perp);
    const double a = static_cast<double>(sol.sign_axis);
    Vec3 plus{p * s1, -a * th, p * r2 * s1};
    Vec3 minus{-p * s1, a * th, -p * r2 * s1};
    return {plus, minus};
}

std::pair<Complex, Complex> gn_soliton_profile(double x, const GNSoliton& s) {
    const double beta = s.beta();
    const double mu = s.mu();
    const double amp = std::sqrt(1.0 - s.omega);
    const double ch = std::cosh(beta * x);
    const double sh = std::sinh(beta * x);
    const double denom = ch * ch - mu * mu * sh * sh;
    const Complex u = amp * Complex(ch, mu * sh) / denom;
    const Complex v = amp * Complex(ch, -mu * sh) / denom;
    return {u, v};
}

LinearizationP linearize(const CouplingModel& model, const ConstantSolution& sol,
                         bool reduced) {
    if (model.family != ModelFamily::Stokes)
        throw std::invalid_argument("linearize: model is not of the Stokes family");
    const auto [sp0, sm0] = constant_profile(sol);

    // d f+/d s+ = -[Jc S-]_x - [Js S+]_x + [S+]_x Js
    // d f+/d s- =  [S+]_x Jc        (and the +/- mirrored blocks below)
    const auto build_blocks = [&](const Vec3& self0, const Vec3& other0) {
        const auto self_cross = cross_matrix(self0);
        const auto jc_other = cross_matrix(diag_apply(model.jc, other0));
        const auto js_self = cross_matrix(diag_apply(model.js, self0));
        std::array<Vec3, 3> d_self{}, d_other{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                d_self[i][j] = -jc_other[i][j] - js_self[i][j] +
                               self_cross[i][j] * model.js[j];
                d_other[i][j] = self_cross[i][j] * model.jc[j];
            }
        return std::pair{d_self, d_other};
    };
    const auto [dpp, dpm] = build_blocks(sp0, sm0);
    const auto [dmm, dmp] = build_blocks(sm0, sp0);

    ComplexMatrix full(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            full(i, j) = dpp[i][j];
            full(i, j + 3) = dpm[i][j];
            full(i + 3, j) = dmp[i][j];
            full(i + 3, j + 3) = dmm[i][j];
        }
    if (!reduced) return {full, false};

    // Keep the two components orthogonal to the background, ascending order.
    std::array<int, 2> keep{};
    int k = 0;
    for (int c = 0; c < 3; ++c)
        if (c != sol.component - 1) keep[k++] = c;
    ComplexMatrix red(4);
    const std::array<int, 4> idx{keep[0], keep[1], keep[0] + 3, keep[1] + 3};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) red(i, j) = full(idx[i], idx[j]);
    return {red, true};
}

}  // namespace mocstab
