#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace mocstab {

using Complex = std::complex<double>;

/// Dense square complex matrix, dimension fixed at construction (n <= 16).
class ComplexMatrix {
public:
    static constexpr std::size_t kMaxDim = 16;

    explicit ComplexMatrix(std::size_t n) : n_(check_dim(n)), a_(n * n) {}

    ComplexMatrix(std::size_t n, std::initializer_list<Complex> entries)
        : n_(check_dim(n)), a_(entries) {
        if (a_.size() != n * n)
            throw std::invalid_argument("ComplexMatrix: entry count does not match dimension");
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<Complex>& d) {
        ComplexMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t dim() const { return n_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_finite() const {
        for (const auto& v : a_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    bool is_identity(double tol = 0.0) const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                Complex want = (i == j) ? Complex(1.0) : Complex(0.0);
                if (std::abs((*this)(i, j) - want) > tol) return false;
            }
        return true;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }

    ComplexMatrix& operator*=(Complex c) {
        for (auto& v : a_) v *= c;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex c, ComplexMatrix a) { return a *= c; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.require_same_dim(b);
        const std::size_t n = a.n_;
        ComplexMatrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0)) continue;
                for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    std::vector<Complex> apply(const std::vector<Complex>& x) const {
        if (x.size() != n_) throw std::invalid_argument("ComplexMatrix::apply: size mismatch");
        std::vector<Complex> y(n_, Complex(0.0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    static std::size_t check_dim(std::size_t n) {
        if (n < 1 || n > kMaxDim * 2)  // companion forms go up to 2*kMaxDim
            throw std::invalid_argument("ComplexMatrix: dimension out of range");
        return n;
    }

    void require_same_dim(const ComplexMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    }

    std::size_t n_;
    std::vector<Complex> a_;
};

/// Quadratic pencil  lambda^2 a2 + lambda a1 + a0,  all blocks n x n.
struct QuadraticPencil {
    ComplexMatrix a2, a1, a0;

    QuadraticPencil(ComplexMatrix a2_, ComplexMatrix a1_, ComplexMatrix a0_)
        : a2(std::move(a2_)), a1(std::move(a1_)), a0(std::move(a0_)) {
        if (a2.dim() != a1.dim() || a1.dim() != a0.dim())
            throw std::invalid_argument("QuadraticPencil: dimension mismatch among a2/a1/a0");
    }

    std::size_t dim() const { return a2.dim(); }
};

}  // namespace mocstab
