#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "mocstab/eigen.hpp"

using namespace mocstab;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(u(rng), u(rng));
    return m;
}

// Sorted by (re, im) so spectra can be compared elementwise.
std::vector<Complex> sorted(std::vector<Complex> v) {
    std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return v;
}

// Roots of a monic cubic/quadratic/linear polynomial by Durand-Kerner,
// used as an eigenvalue oracle independent of the QR code path.
std::vector<Complex> poly_roots(const std::vector<Complex>& monic_coeffs) {
    const std::size_t n = monic_coeffs.size();  // c0 + c1 x + ... + x^n
    std::vector<Complex> r(n);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = std::pow(Complex(0.4, 0.9), static_cast<double>(i + 1));
    const auto eval = [&](Complex x) {
        Complex p = 1.0;
        for (std::size_t k = n; k-- > 0;) p = p * x + monic_coeffs[k];
        return p;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= r[i] - r[j];
            const Complex delta = eval(r[i]) / denom;
            r[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return r;
}

// Characteristic polynomial of a small matrix via determinant interpolation:
// det(xI - A) evaluated at n+1 points, solved for monic coefficients.
std::vector<Complex> char_poly(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Complex> xs(n + 1), ys(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        xs[k] = Complex(2.0 * std::cos(2.0 * k), 2.0 * std::sin(2.0 * k));
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = (i == j ? xs[k] : Complex(0.0)) - a(i, j);
        ys[k] = determinant(m);
    }
    // Vandermonde solve for coefficients of x^0 .. x^n, then normalize monic.
    ComplexMatrix v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Complex p = 1.0;
        for (std::size_t j = 0; j <= n; ++j) {
            v(i, j) = p;
            p *= xs[i];
        }
    }
    auto c = solve(v, ys);
    std::vector<Complex> monic(n);
    for (std::size_t i = 0; i < n; ++i) monic[i] = c[i] / c[n];
    return monic;
}

}  // namespace

TEST_CASE("dimension checks") {
    CHECK_THROWS_AS(ComplexMatrix(0), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(33), std::invalid_argument);
    CHECK_THROWS_AS((ComplexMatrix(2, {1.0, 2.0, 3.0})), std::invalid_argument);
    ComplexMatrix a(2), b(3);
    CHECK_THROWS_AS(a += b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(QuadraticPencil(ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(3)),
                    std::invalid_argument);
}

TEST_CASE("identity and diagonal factories") {
    CHECK(ComplexMatrix::identity(4).is_identity());
    const auto d = ComplexMatrix::diagonal({Complex(1, 2), Complex(3, -1)});
    CHECK(d(0, 0) == Complex(1, 2));
    CHECK(d(1, 1) == Complex(3, -1));
    CHECK(d(0, 1) == Complex(0));
    CHECK(d.trace() == Complex(4, 1));
}

TEST_CASE("matrix product against a hand computation") {
    const ComplexMatrix a(2, {Complex(1), Complex(2), Complex(3), Complex(4)});
    const ComplexMatrix b(2, {Complex(0, 1), Complex(1), Complex(-1), Complex(2)});
    const auto c = a * b;
    CHECK(c(0, 0) == Complex(-2, 1));
    CHECK(c(0, 1) == Complex(5));
    CHECK(c(1, 0) == Complex(-4, 3));
    CHECK(c(1, 1) == Complex(11));
}

TEST_CASE("eigenvalues of diagonal and triangular matrices") {
    const auto d = ComplexMatrix::diagonal({Complex(2, 1), Complex(-3), Complex(0, 5)});
    auto e = sorted(eigenvalues(d));
    const auto want = sorted({Complex(2, 1), Complex(-3), Complex(0, 5)});
    for (int i = 0; i < 3; ++i) CHECK(std::abs(e[i] - want[i]) < 1e-12);

    ComplexMatrix t(3);
    t(0, 0) = 1.0; t(0, 1) = 7.0; t(0, 2) = -2.0;
    t(1, 1) = Complex(0, 1); t(1, 2) = 4.0;
    t(2, 2) = -5.0;
    e = sorted(eigenvalues(t));
    const auto want2 = sorted({Complex(1), Complex(0, 1), Complex(-5)});
    for (int i = 0; i < 3; ++i) CHECK(std::abs(e[i] - want2[i]) < 1e-10);
}

TEST_CASE("eigenvalues of a defective Jordan block") {
    ComplexMatrix j(3);
    for (int i = 0; i < 3; ++i) j(i, i) = 2.0;
    j(0, 1) = 1.0;
    j(1, 2) = 1.0;
    for (const auto& l : eigenvalues(j)) CHECK(std::abs(l - Complex(2.0)) < 1e-4);
}

TEST_CASE("rotation matrix eigenvalues are e^{+-i theta}") {
    const double th = 0.7;
    const ComplexMatrix r(2, {Complex(std::cos(th)), Complex(-std::sin(th)),
                              Complex(std::sin(th)), Complex(std::cos(th))});
    const auto e = sorted(eigenvalues(r));
    CHECK(std::abs(e[0] - std::polar(1.0, -th)) < 1e-12);
    CHECK(std::abs(e[1] - std::polar(1.0, th)) < 1e-12);
}

TEST_CASE("trace and determinant match eigenvalue sums and products") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto a = random_matrix(rng, n);
            const auto e = eigenvalues(a);
            REQUIRE(e.size() == n);
            Complex sum = 0.0, prod = 1.0;
            for (const auto& l : e) {
                sum += l;
                prod *= l;
            }
            CHECK(std::abs(sum - a.trace()) < 1e-9);
            CHECK(std::abs(prod - determinant(a)) < 1e-8 * std::max(1.0, std::abs(prod)));
        }
    }
}

TEST_CASE("eigenvalues satisfy det(A - lambda I) = 0") {
    std::mt19937_64 rng(5);
    const auto a = random_matrix(rng, 5);
    for (const auto& l : eigenvalues(a)) {
        ComplexMatrix shifted = a;
        for (std::size_t i = 0; i < 5; ++i) shifted(i, i) -= l;
        // det is a degree-5 polynomial of the entries; compare against its scale
        CHECK(std::abs(determinant(shifted)) < 1e-8 * std::pow(a.frobenius_norm(), 5.0));
    }
}

TEST_CASE("spectra agree with the characteristic-polynomial oracle, n <= 3") {
    std::mt19937_64 rng(17);
    for (std::size_t n = 2; n <= 3; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            const auto a = random_matrix(rng, n);
            const auto got = sorted(eigenvalues(a));
            const auto want = sorted(poly_roots(char_poly(a)));
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::abs(got[i] - want[i]) < 1e-7);
        }
    }
}

TEST_CASE("similarity transforms preserve the spectrum") {
    std::mt19937_64 rng(23);
    const auto a = random_matrix(rng, 4);
    ComplexMatrix s = random_matrix(rng, 4);
    for (std::size_t i = 0; i < 4; ++i) s(i, i) += 3.0;  // keep it well conditioned
    const auto b = solve(s, a * s);  // S^{-1} A S
    const auto ea = sorted(eigenvalues(a));
    const auto eb = sorted(eigenvalues(b));
    for (int i = 0; i < 4; ++i) CHECK(std::abs(ea[i] - eb[i]) < 1e-8);
}

TEST_CASE("iteration cap raises EigenFailure") {
    std::mt19937_64 rng(3);
    const auto a = random_matrix(rng, 6);
    EigenOptions opts;
    opts.max_iterations_per_dim = 0;
    CHECK_THROWS_AS(eigenvalues(a, opts), EigenFailure);
}

TEST_CASE("linear solve round-trips") {
    std::mt19937_64 rng(29);
    const auto a = random_matrix(rng, 5);
    const auto b = random_matrix(rng, 5);
    const auto x = solve(a, b);
    const auto res = a * x - b;
    CHECK(res.frobenius_norm() < 1e-10 * b.frobenius_norm());

    std::vector<Complex> rhs(5);
    for (auto& v : rhs) v = Complex(1.0, -2.0);
    const auto y = solve(a, rhs);
    const auto ay = a.apply(y);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(ay[i] - rhs[i]) < 1e-10);

    CHECK_THROWS(solve(ComplexMatrix(3), rhs));  // singular
}

TEST_CASE("companion form has the right block structure") {
    std::mt19937_64 rng(31);
    const auto a1 = random_matrix(rng, 3);
    const auto a0 = random_matrix(rng, 3);
    const QuadraticPencil p{ComplexMatrix::identity(3), a1, a0};
    const auto c = companion_form(p);
    REQUIRE(c.dim() == 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(c(i, j) == Complex(0.0));
            CHECK(c(i, 3 + j) == (i == j ? Complex(1.0) : Complex(0.0)));
            CHECK(std::abs(c(3 + i, j) + a0(i, j)) < 1e-14);
            CHECK(std::abs(c(3 + i, 3 + j) + a1(i, j)) < 1e-14);
        }
}

TEST_CASE("scalar quadratic pencil roots") {
    // lambda^2 - 3 lambda + 2 = 0 -> {1, 2}
    const QuadraticPencil p{ComplexMatrix(1, {Complex(1.0)}),
                            ComplexMatrix(1, {Complex(-3.0)}),
                            ComplexMatrix(1, {Complex(2.0)})};
    const auto e = sorted(quad_eigenvalues(p));
    REQUIRE(e.size() == 2);
    CHECK(std::abs(e[0] - 1.0) < 1e-12);
    CHECK(std::abs(e[1] - 2.0) < 1e-12);
}

TEST_CASE("pencil roots satisfy det(l^2 a2 + l a1 + a0) = 0") {
    std::mt19937_64 rng(37);
    const auto a2 = ComplexMatrix::identity(3);
    const auto a1 = random_matrix(rng, 3);
    const auto a0 = random_matrix(rng, 3);
    const QuadraticPencil p{a2, a1, a0};
    const auto e = quad_eigenvalues(p);
    REQUIRE(e.size() == 6);
    for (const auto& l : e) {
        ComplexMatrix m = a0;
        m += l * a1;
        m += (l * l) * a2;
        CHECK(std::abs(determinant(m)) < 1e-7);
    }
}

TEST_CASE("max_abs_eigenvalue") {
    const std::vector<Complex> e{Complex(0.5, 0.5), Complex(-1.25), Complex(0, 1)};
    CHECK(max_abs_eigenvalue(e) == doctest::Approx(1.25));
    CHECK_THROWS(max_abs_eigenvalue(std::vector<Complex>{}));
}
