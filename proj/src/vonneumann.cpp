#include "mocstab/vonneumann.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mocstab {

SchemeKind scheme_from_id(const std::string& id) {
    if (id == "se") return SchemeKind::SE;
    if (id == "me") return SchemeKind::ME;
    if (id == "lf") return SchemeKind::LF;
    if (id == "crk") return SchemeKind::CRK;
    throw std::invalid_argument("unknown scheme id: " + id);
}

std::string scheme_id(SchemeKind k) {
    switch (k) {
        case SchemeKind::SE: return "se";
        case SchemeKind::ME: return "me";
        case SchemeKind::LF: return "lf";
        case SchemeKind::CRK: return "crk";
    }
    throw std::logic_error("scheme_id: bad enum");
}

ComplexMatrix q_matrix(double z, std::size_t n) {
    if (n % 2 != 0) throw std::invalid_argument("q_matrix: dimension must be even");
    ComplexMatrix q(n);
    const Complex down = std::polar(1.0, -z);
    const Complex up = std::polar(1.0, +z);
    for (std::size_t i = 0; i < n / 2; ++i) q(i, i) = down;
    for (std::size_t i = n / 2; i < n; ++i) q(i, i) = up;
    return q;
}

namespace {

ComplexMatrix euler_factor(double h, const ComplexMatrix& p) {
    ComplexMatrix f = p;
    f *= h;
    return f += ComplexMatrix::identity(p.dim());
}

}  // namespace

ComplexMatrix amplification_se(double z, double h, const ComplexMatrix& p) {
    return q_matrix(z, p.dim()) * euler_factor(h, p);
}

ComplexMatrix amplification_me(double z, double h, const ComplexMatrix& p) {
    const ComplexMatrix q = q_matrix(z, p.dim());
    const ComplexMatrix e = euler_factor(h, p);
    ComplexMatrix n = q + e * q * e;
    n *= 0.5;
    return n;
}

QuadraticPencil amplification_lf(double z, double h, const ComplexMatrix& p) {
    const ComplexMatrix q = q_matrix(z, p.dim());
    ComplexMatrix a1 = q * p;
    a1 *= -2.0 * h;
    ComplexMatrix a0 = q * q;
    a0 *= -1.0;
    return {ComplexMatrix::identity(p.dim()), std::move(a1), std::move(a0)};
}

ComplexMatrix amplification_crk(double z, double h, const ComplexMatrix& p) {
    const ComplexMatrix q = q_matrix(z, p.dim());
    const ComplexMatrix qp = q * p;
    ComplexMatrix term = qp;  // runs through P^k Q P
    ComplexMatrix n = q;
    double coeff = h;
    n += coeff * term;
    for (int k = 2; k <= 4; ++k) {
        term = p * term;
        coeff *= h / static_cast<double>(k);
        n += coeff * term;
    }
    return n;
}

std::vector<Complex> amplification_eigenvalues(SchemeKind scheme, double z, double h,
                                               const ComplexMatrix& p) {
    switch (scheme) {
        case SchemeKind::SE: return eigenvalues(amplification_se(z, h, p));
        case SchemeKind::ME: return eigenvalues(amplification_me(z, h, p));
        case SchemeKind::LF: return quad_eigenvalues(amplification_lf(z, h, p));
        case SchemeKind::CRK: return eigenvalues(amplification_crk(z, h, p));
    }
    throw std::logic_error("amplification_eigenvalues: bad enum");
}

std::size_t SweepResult::argmax() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < max_abs.size(); ++i)
        if (max_abs[i] > max_abs[best]) best = i;
    return best;
}

double SweepResult::peak_z() const {
    const std::size_t i = argmax();
    if (i == 0 || i + 1 == z.size()) return z[i];
    const double y0 = max_abs[i - 1], y1 = max_abs[i], y2 = max_abs[i + 1];
    const double denom = y0 - 2.0 * y1 + y2;
    if (denom == 0.0) return z[i];
    const double shift = 0.5 * (y0 - y2) / denom;
    return z[i] + shift * (z[i + 1] - z[i]);
}

double SweepResult::peak_max_abs() const {
    const std::size_t i = argmax();
    if (i == 0 || i + 1 == z.size()) return max_abs[i];
    const double y0 = max_abs[i - 1], y1 = max_abs[i], y2 = max_abs[i + 1];
    const double denom = y0 - 2.0 * y1 + y2;
    if (denom >= 0.0) return y1;
    return y1 - (y2 - y0) * (y2 - y0) / (8.0 * denom);
}

SweepResult sweep(SchemeKind scheme, double h, const ComplexMatrix& p, int n_z) {
    if (n_z < 2) throw std::invalid_argument("sweep: n_z must be at least 2");
    SweepResult r;
    r.scheme = scheme;
    r.h = h;
    r.z.resize(n_z);
    r.max_abs.resize(n_z);
    r.gamma.resize(n_z);
    for (int i = 0; i < n_z; ++i) {
        const double z = std::numbers::pi * static_cast<double>(i) / (n_z - 1);
        r.z[i] = z;
        try {
            const auto eigs = amplification_eigenvalues(scheme, z, h, p);
            r.max_abs[i] = max_abs_eigenvalue(eigs);
        } catch (const EigenFailure& e) {
            throw EigenFailure("sweep failed at z = " + std::to_string(z) + ": " + e.what());
        }
        r.gamma[i] = (r.max_abs[i] - 1.0) / h;
    }
    return r;
}

std::vector<Complex> physical_dispersion(const ComplexMatrix& p, double k) {
    const std::size_t n = p.dim();
    if (n % 2 != 0) throw std::invalid_argument("physical_dispersion: odd dimension");
    ComplexMatrix m = p;
    const Complex ik(0.0, k);
    for (std::size_t i = 0; i < n / 2; ++i) m(i, i) -= ik;
    for (std::size_t i = n / 2; i < n; ++i) m(i, i) += ik;
    auto eigs = eigenvalues(m);
    const Complex iu(0.0, 1.0);
    for (auto& e : eigs) e *= iu;
    return eigs;
}

std::string stability_class_name(StabilityClass c) {
    switch (c) {
        case StabilityClass::Stable: return "stable";
        case StabilityClass::UnstableAtKZero: return "unstable-at-k0";
        case StabilityClass::UnstableKNonzeroOnly: return "unstable-k-nonzero";
    }
    throw std::logic_error("stability_class_name: bad enum");
}

StabilityClass classify_system(const CouplingModel& model, const ConstantSolution& sol,
                               const ClassifyOptions& opts) {
    const ComplexMatrix p = linearize(model, sol, /*reduced=*/false).p;

    const auto max_im = [&](double k) {
        double worst = 0.0;
        for (const auto& w : physical_dispersion(p, k))
            worst = std::max(worst, std::abs(w.imag()));
        return worst;
    };

    if (max_im(0.0) > opts.im_tol) return StabilityClass::UnstableAtKZero;
    for (double k = opts.k_step; k <= opts.k_max + 0.5 * opts.k_step; k += opts.k_step)
        if (max_im(k) > opts.im_tol) return StabilityClass::UnstableKNonzeroOnly;
    return StabilityClass::Stable;
}

double gamma_se_endpoint(double h, double max_abs_lambda_p) {
    return 0.5 * h * max_abs_lambda_p * max_abs_lambda_p;
}

double gamma_me_endpoint(double h, double max_abs_lambda_p) {
    const double l2 = max_abs_lambda_p * max_abs_lambda_p;
    return h * h * h / 8.0 * l2 * l2;
}

}  // namespace mocstab
