#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "pdmt/complex_matrix.hpp"
#include "pdmt/linalg.hpp"
#include "pdmt/pauli.hpp"
#include "pdmt/random.hpp"

using namespace pdmt;

namespace {
constexpr Complex kI{0.0, 1.0};

ComplexMatrix bell_phi_plus() {
    ComplexMatrix rho(4, 4);
    const std::size_t idx[2] = {0, 3};
    for (std::size_t a : idx)
        for (std::size_t b : idx) rho(a, b) = 0.5;
    return rho;
}
}  // namespace

TEST_CASE("matrix arithmetic basics") {
    ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
    const ComplexMatrix sum = a + b;
    CHECK(sum(0, 1) == Complex{3.0, 0.0});
    const ComplexMatrix prod = a * b;
    CHECK(prod(0, 0) == Complex{2.0, 0.0});
    CHECK(prod(1, 0) == Complex{4.0, 0.0});
    CHECK(a.trace() == Complex{5.0, 0.0});
    CHECK(a.max_abs() == doctest::Approx(4.0));
    CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(30.0)));

    ComplexMatrix c{{Complex{1.0, 2.0}}};
    const ComplexMatrix cd = c.dagger();
    CHECK(cd(0, 0) == Complex{1.0, -2.0});
}

TEST_CASE("identity and hermiticity checks") {
    const ComplexMatrix id = ComplexMatrix::identity(3);
    CHECK(id.trace() == Complex{3.0, 0.0});
    CHECK(id.is_hermitian(0.0));

    ComplexMatrix h{{1.0, kI}, {-kI, 2.0}};
    CHECK(h.is_hermitian(1e-12));
    ComplexMatrix nh{{1.0, kI}, {kI, 2.0}};
    CHECK_FALSE(nh.is_hermitian(1e-12));
}

TEST_CASE("tensor product puts the first factor in the most significant slot") {
    const ComplexMatrix zz = tensor(sigma(3), sigma(3));
    for (std::size_t i = 0; i < 4; ++i) {
        const double expect = (i == 0 || i == 3) ? 1.0 : -1.0;
        CHECK(zz(i, i).real() == doctest::Approx(expect));
    }

    const ComplexMatrix xx = tensor(sigma(1), sigma(1));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double expect = (i + j == 3) ? 1.0 : 0.0;
            CHECK(xx(i, j).real() == doctest::Approx(expect));
            CHECK(xx(i, j).imag() == doctest::Approx(0.0));
        }

    // Z tensor I acts on the most significant (first) qubit.
    const ComplexMatrix zi = tensor(sigma(3), sigma(0));
    CHECK(zi(0, 0).real() == doctest::Approx(1.0));
    CHECK(zi(1, 1).real() == doctest::Approx(1.0));
    CHECK(zi(2, 2).real() == doctest::Approx(-1.0));
    CHECK(zi(3, 3).real() == doctest::Approx(-1.0));
}

TEST_CASE("anticommutator of X and Z vanishes") {
    const ComplexMatrix ac = anticommutator(sigma(1), sigma(3));
    CHECK(ac.max_abs() == doctest::Approx(0.0));
    const ComplexMatrix ac2 = anticommutator(sigma(1), sigma(1));
    CHECK(approx_equal(ac2, ComplexMatrix::identity(2) * Complex{2.0, 0.0}, 1e-12));
}

TEST_CASE("pauli_string composes labels left to right") {
    const ComplexMatrix zx = pauli_string({3, 1});
    CHECK(approx_equal(zx, tensor(sigma(3), sigma(1)), 0.0));
    CHECK(pauli_strings(2).size() == 16);
    CHECK(approx_equal(pauli_strings(1)[2], sigma(2), 0.0));
    CHECK_THROWS_AS((void)sigma(4), std::invalid_argument);
}

TEST_CASE("eigendecomposition of Pauli Z and X") {
    const Spectrum sz = hermitian_eig(sigma(3));
    CHECK(sz.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(sz.eigenvalues[1] == doctest::Approx(-1.0));

    const Spectrum sx = hermitian_eig(sigma(1));
    CHECK(sx.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(sx.eigenvalues[1] == doctest::Approx(-1.0));
    // Top eigenvector of X is the equal superposition up to phase.
    const double a0 = std::abs(sx.eigenvectors(0, 0));
    const double a1 = std::abs(sx.eigenvectors(1, 0));
    CHECK(a0 == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(a1 == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 2 + trial % 5;
        ComplexMatrix g = rng.ginibre(d, d);
        ComplexMatrix h = g;
        h += g.dagger();
        h *= 0.5;
        const Spectrum s = hermitian_eig(h);

        CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end(),
                             std::greater<double>()));
        // V diag(w) V^dagger == H and V^dagger V == I.
        ComplexMatrix recon(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Complex acc = 0.0;
                for (std::size_t k = 0; k < d; ++k)
                    acc += s.eigenvectors(i, k) * s.eigenvalues[k] *
                           std::conj(s.eigenvectors(j, k));
                recon(i, j) = acc;
            }
        CHECK(approx_equal(recon, h, 1e-9));
        const ComplexMatrix vtv = s.eigenvectors.dagger() * s.eigenvectors;
        CHECK(approx_equal(vtv, ComplexMatrix::identity(d), 1e-9));

        double tr = 0.0;
        for (double w : s.eigenvalues) tr += w;
        CHECK(tr == doctest::Approx(h.trace().real()).epsilon(1e-9));
    }
}

TEST_CASE("density matrix constructor validates") {
    CHECK_NOTHROW(DensityMatrix(ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}}));
    // Trace off.
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{0.5, 0.0}, {0.0, 0.4}}),
                    std::invalid_argument);
    // Negative eigenvalue.
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{1.1, 0.0}, {0.0, -0.1}}),
                    std::invalid_argument);
    // Non-Hermitian.
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{0.5, 0.3}, {0.0, 0.5}}),
                    std::invalid_argument);
}

TEST_CASE("hermitian operator rejects non-square and non-hermitian input") {
    CHECK_THROWS_AS(HermitianOperator(ComplexMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(HermitianOperator(ComplexMatrix{{0.0, 1.0}, {2.0, 0.0}}),
                    std::invalid_argument);
}

TEST_CASE("partial trace of a Bell state gives maximally mixed marginals") {
    const ComplexMatrix rho = bell_phi_plus();
    for (std::size_t keep : {0u, 1u}) {
        const ComplexMatrix red = partial_trace(rho, {2, 2}, {keep});
        CHECK(red.rows() == 2);
        CHECK(approx_equal(red, ComplexMatrix::identity(2) * Complex{0.5, 0.0}, 1e-12));
    }
}

TEST_CASE("partial trace respects slot order on product operators") {
    ComplexMatrix a{{1.0, 0.0}, {0.0, 2.0}};
    ComplexMatrix b{{3.0, 1.0}, {1.0, 4.0}};
    const ComplexMatrix ab = tensor(a, b);

    const ComplexMatrix left = partial_trace(ab, {2, 2}, {0});
    CHECK(approx_equal(left, a * b.trace(), 1e-12));
    const ComplexMatrix right = partial_trace(ab, {2, 2}, {1});
    CHECK(approx_equal(right, b * a.trace(), 1e-12));

    // Three slots, keep outer two.
    ComplexMatrix c{{5.0, 0.0}, {0.0, 6.0}};
    const ComplexMatrix abc = tensor(a, tensor(b, c));
    const ComplexMatrix outer = partial_trace(abc, {2, 2, 2}, {0, 2});
    CHECK(approx_equal(outer, tensor(a, c) * b.trace(), 1e-12));
}

TEST_CASE("partial trace validates arguments") {
    const ComplexMatrix rho = bell_phi_plus();
    CHECK_THROWS_AS(partial_trace(rho, {2, 3}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {2}), std::invalid_argument);
}

TEST_CASE("swap_bipartite exchanges tensor factors") {
    Rng rng(7);
    const ComplexMatrix a = rng.ginibre(2, 2);
    const ComplexMatrix b = rng.ginibre(3, 3);
    const ComplexMatrix ab = tensor(a, b);
    const ComplexMatrix ba = tensor(b, a);
    CHECK(approx_equal(swap_bipartite(ab, 2, 3), ba, 1e-12));
    CHECK(approx_equal(swap_bipartite(ba, 3, 2), ab, 1e-12));
}
