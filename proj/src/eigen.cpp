#include "mocstab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace mocstab {

namespace {

// In-place Hessenberg reduction by Householder reflections.
void reduce_to_hessenberg(ComplexMatrix& h) {
    const std::size_t n = h.dim();
    if (n < 3) return;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double scale = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) scale += std::abs(h(i, k));
        if (scale == 0.0) continue;

        // Householder vector v annihilating h(k+2..n-1, k).
        std::vector<Complex> v(n - k - 1);
        double xnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i - k - 1] = h(i, k) / scale;
            xnorm2 += std::norm(v[i - k - 1]);
        }
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;
        Complex phase = (v[0] != Complex(0.0)) ? v[0] / std::abs(v[0]) : Complex(1.0);
        const Complex alpha = -phase * xnorm;
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (const auto& c : v) vnorm2 += std::norm(c);
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;

        // Left: h(k+1.., :) -= beta v (v^H h)
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i - k - 1]) * h(i, j);
            s *= beta;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i - k - 1] * s;
        }
        // Right: h(:, k+1..) -= beta (h v) v^H
        for (std::size_t i = 0; i < n; ++i) {
            Complex s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j - k - 1];
            s *= beta;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j - k - 1]);
        }
        h(k + 1, k) = alpha * scale;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

struct Givens {
    double c;
    Complex s;
};

Givens make_givens(Complex a, Complex b) {
    if (b == Complex(0.0)) return {1.0, Complex(0.0)};
    if (a == Complex(0.0)) return {0.0, Complex(1.0)};
    const double denom = std::hypot(std::abs(a), std::abs(b));
    return {std::abs(a) / denom, a * std::conj(b) / (std::abs(a) * denom)};
}

// Eigenvalues of the 2x2 block [[a, b], [c, d]].
std::pair<Complex, Complex> eig2(Complex a, Complex b, Complex c, Complex d) {
    const Complex half_tr = 0.5 * (a + d);
    const Complex disc = std::sqrt(half_tr * half_tr - (a * d - b * c));
    return {half_tr + disc, half_tr - disc};
}

// Wilkinson shift: eigenvalue of the trailing 2x2 closer to h(hi, hi).
Complex wilkinson_shift(const ComplexMatrix& h, std::size_t hi) {
    const auto [l1, l2] =
        eig2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    return (std::abs(l1 - h(hi, hi)) < std::abs(l2 - h(hi, hi))) ? l1 : l2;
}

// One explicit shifted QR sweep on the active Hessenberg block [lo, hi].
void qr_sweep(ComplexMatrix& h, std::size_t lo, std::size_t hi, Complex shift) {
    for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= shift;

    std::vector<Givens> rots;
    rots.reserve(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) {
        const Givens g = make_givens(h(k, k), h(k + 1, k));
        rots.push_back(g);
        for (std::size_t j = k; j <= hi; ++j) {
            const Complex t1 = h(k, j), t2 = h(k + 1, j);
            h(k, j) = g.c * t1 + g.s * t2;
            h(k + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
        }
    }
    for (std::size_t k = lo; k < hi; ++k) {
        const Givens g = rots[k - lo];
        const std::size_t imax = std::min(k + 2, hi);
        for (std::size_t i = lo; i <= imax; ++i) {
            const Complex t1 = h(i, k), t2 = h(i, k + 1);
            h(i, k) = g.c * t1 + std::conj(g.s) * t2;
            h(i, k + 1) = -g.s * t1 + g.c * t2;
        }
    }

    for (std::size_t i = lo; i <= hi; ++i) h(i, i) += shift;
}

}  // namespace

std::vector<Complex> eigenvalues(const ComplexMatrix& m, const EigenOptions& opts) {
    if (!m.is_finite())
        throw std::invalid_argument("eigenvalues: matrix has non-finite entries");
    const std::size_t n = m.dim();
    std::vector<Complex> eigs;
    eigs.reserve(n);

    if (n == 1) return {m(0, 0)};

    ComplexMatrix h = m;
    reduce_to_hessenberg(h);

    const long max_iter = static_cast<long>(opts.max_iterations_per_dim) * static_cast<long>(n);
    long iter = 0;
    int stagnant = 0;

    std::size_t hi = n - 1;
    while (true) {
        // Deflate negligible subdiagonals.
        for (std::size_t i = 1; i <= hi; ++i) {
            const double mag = std::abs(h(i, i - 1));
            if (mag <= opts.deflation_tol * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i))))
                h(i, i - 1) = 0.0;
        }
        // Peel off converged trailing eigenvalues.
        while (true) {
            if (hi == 0) {
                eigs.push_back(h(0, 0));
                std::reverse(eigs.begin(), eigs.end());
                return eigs;
            }
            if (h(hi, hi - 1) == Complex(0.0)) {
                eigs.push_back(h(hi, hi));
                --hi;
                stagnant = 0;
                continue;
            }
            if (hi >= 1 && (hi == 1 || h(hi - 1, hi - 2) == Complex(0.0))) {
                const auto [l1, l2] =
                    eig2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
                eigs.push_back(l1);
                eigs.push_back(l2);
                if (hi == 1) {
                    std::reverse(eigs.begin(), eigs.end());
                    return eigs;
                }
                hi -= 2;
                stagnant = 0;
                continue;
            }
            break;
        }

        if (++iter > max_iter)
            throw EigenFailure("eigenvalues: QR iteration did not converge within " +
                               std::to_string(max_iter) + " sweeps");

        // Find the start of the active unreduced block.
        std::size_t lo = hi;
        while (lo > 0 && h(lo, lo - 1) != Complex(0.0)) --lo;

        Complex shift = wilkinson_shift(h, hi);
        if (++stagnant % 12 == 0) {
            // Exceptional shift to break symmetric stalls.
            shift = h(hi, hi) + Complex(0.75 * std::abs(h(hi, hi - 1)),
                                        0.3 * std::abs(h(hi, hi - 1)));
        }
        qr_sweep(h, lo, hi, shift);
    }
}

ComplexMatrix companion_form(const QuadraticPencil& p) {
    const std::size_t n = p.dim();
    ComplexMatrix b1 = p.a1, b0 = p.a0;
    if (!p.a2.is_identity()) {
        b1 = solve(p.a2, p.a1);
        b0 = solve(p.a2, p.a0);
    }
    ComplexMatrix c(2 * n);
    for (std::size_t i = 0; i < n; ++i) c(i, n + i) = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            c(n + i, j) = -b0(i, j);
            c(n + i, n + j) = -b1(i, j);
        }
    return c;
}

std::vector<Complex> quad_eigenvalues(const QuadraticPencil& p, const EigenOptions& opts) {
    return eigenvalues(companion_form(p), opts);
}

double max_abs_eigenvalue(std::span<const Complex> eigs) {
    if (eigs.empty())
        throw std::invalid_argument("max_abs_eigenvalue: empty eigenvalue list");
    double best = 0.0;
    for (const auto& e : eigs) best = std::max(best, std::abs(e));
    return best;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = a.dim();
    ComplexMatrix lu = a, x = b;
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
        if (lu(p, k) == Complex(0.0)) throw std::runtime_error("solve: singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(lu(p, j), lu(k, j));
                std::swap(x(p, j), x(k, j));
            }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = lu(i, k) / lu(k, k);
            lu(i, k) = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
            for (std::size_t j = 0; j < n; ++j) x(i, j) -= f * x(k, j);
        }
    }
    for (std::size_t kk = n; kk-- > 0;) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = x(kk, j);
            for (std::size_t i = kk + 1; i < n; ++i) s -= lu(kk, i) * x(i, j);
            x(kk, j) = s / lu(kk, kk);
        }
    }
    return x;
}

std::vector<Complex> solve(const ComplexMatrix& a, std::vector<Complex> rhs) {
    const std::size_t n = a.dim();
    if (rhs.size() != n) throw std::invalid_argument("solve: rhs size mismatch");
    ComplexMatrix b(n);
    for (std::size_t i = 0; i < n; ++i) b(i, 0) = rhs[i];
    // Pad remaining columns with zeros; only column 0 is meaningful.
    ComplexMatrix x = solve(a, b);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = x(i, 0);
    return rhs;
}

Complex determinant(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix lu = m;
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
        if (lu(p, k) == Complex(0.0)) return 0.0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(p, j), lu(k, j));
            det = -det;
        }
        det *= lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = lu(i, k) / lu(k, k);
            for (std::size_t j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

}  // namespace mocstab
