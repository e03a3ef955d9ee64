#pragma once

#include <cstddef>
#include <vector>

#include "pdmt/complex_matrix.hpp"

namespace pdmt {

// Eigendecomposition of a Hermitian matrix. Eigenvalues are sorted in
// descending order; column j of `eigenvectors` is the unit eigenvector for
// eigenvalues[j].
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Square matrix validated to be Hermitian within 1e-10 on construction.
class HermitianOperator {
  public:
    explicit HermitianOperator(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return mat_; }
    std::size_t dim() const { return mat_.rows(); }

  private:
    ComplexMatrix mat_;
};

// Hermitian operator additionally validated to have unit trace (within 1e-10)
// and eigenvalues >= -1e-9.
class DensityMatrix : public HermitianOperator {
  public:
    explicit DensityMatrix(ComplexMatrix m);
};

// Cyclic-Jacobi diagonalization. The ComplexMatrix overload validates
// Hermiticity (and throws std::invalid_argument otherwise).
Spectrum hermitian_eig(const HermitianOperator& h);
Spectrum hermitian_eig(const ComplexMatrix& h);

// Partial trace of an operator on a tensor product of subsystems with the
// given dimensions. `keep` lists the (0-based, strictly increasing) slots to
// retain; all other slots are traced out. Slot order is row-major
// big-endian: slot 0 owns the most significant index block.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

// Conjugation by the swap of a bipartite tensor factorization:
// out[(b,a),(b',a')] = m[(a,b),(a',b')].
ComplexMatrix swap_bipartite(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

namespace detail {

// Jacobi iteration without the Hermiticity check; the input is symmetrized
// so callers must already hold a matrix that is Hermitian up to roundoff.
Spectrum jacobi_eig(ComplexMatrix a);

// Smallest eigenvalue of a Hermitian matrix (convenience for PSD checks).
double min_eigenvalue(const ComplexMatrix& hermitian);

}  // namespace detail

}  // namespace pdmt
