#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pdmt {

using Complex = std::complex<double>;

// Dense complex matrix with row-major storage. Sized for operators on a
// handful of qubits (dim <= 64); no sparsity, no expression templates.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::initializer_list<Complex> entries);
    // Row-by-row literal; every row must have the same length.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    ComplexMatrix dagger() const;     // conjugate transpose
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;           // largest |entry|
    bool is_hermitian(double tol) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);

// Kronecker product; the left factor owns the most significant index block,
// i.e. (a ⊗ b)[(i1,i2),(j1,j2)] = a(i1,j1) * b(i2,j2).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// {a, b} = a*b + b*a for square matrices of equal dimension.
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

// True when every entry of a - b has magnitude <= tol (shapes must match).
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace pdmt
