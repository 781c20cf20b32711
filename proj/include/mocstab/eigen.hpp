#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mocstab/complex_matrix.hpp"

namespace mocstab {

/// Raised when the QR iteration fails to deflate within the iteration cap.
class EigenFailure : public std::runtime_error {
public:
    explicit EigenFailure(const std::string& what) : std::runtime_error(what) {}
};

struct EigenOptions {
    double deflation_tol = 1e-12;   // relative subdiagonal threshold per deflation
    int max_iterations_per_dim = 100;  // total QR sweeps allowed = this * n
};

/// All n eigenvalues of a dense complex matrix, by Hessenberg reduction
/// followed by shifted QR iteration. Order unspecified.
std::vector<Complex> eigenvalues(const ComplexMatrix& m, const EigenOptions& opts = {});

/// First-companion linearization [[0, I], [-a2^{-1}a0, -a2^{-1}a1]] of the pencil.
ComplexMatrix companion_form(const QuadraticPencil& p);

/// All 2n roots lambda of det(lambda^2 a2 + lambda a1 + a0) = 0,
/// via the companion linearization above.
std::vector<Complex> quad_eigenvalues(const QuadraticPencil& p, const EigenOptions& opts = {});

double max_abs_eigenvalue(std::span<const Complex> eigs);

/// Solve A X = B by Gaussian elimination with partial pivoting.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> solve(const ComplexMatrix& a, std::vector<Complex> rhs);

Complex determinant(const ComplexMatrix& m);

}  // namespace mocstab
