#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qiso/errors.hpp"

namespace qiso {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Plain value type: copyable, freely
// shareable across threads, no hidden state.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Row-major entries; size must equal rows*cols.
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::initializer_list<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Complex* row(std::size_t i) { return data_.data() + i * cols_; }
  const Complex* row(std::size_t i) const { return data_.data() + i * cols_; }
  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  // max_ij |a_ij|
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// C = a*b. Skips exact-zero entries of `a`, so products with embedded gate
// matrices (mostly zeros) cost O(nnz(a) * cols(b)) instead of O(n^3).
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// m*v for a column vector.
std::vector<Complex> mat_vec(const ComplexMatrix& m,
                             std::span<const Complex> v);

// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// max_ij |m_ij - conj(m_ji)|
double hermiticity_error(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol);

// Eigendecomposition of a Hermitian matrix: m = V diag(lambda) V^dagger,
// eigenvalues ascending, eigenvector k in column k of `eigenvectors`.
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

// Cyclic Jacobi diagonalization for Hermitian matrices. Dimensions in this
// project stay <= 512, where Jacobi's accuracy beats its O(n^3)-per-sweep
// cost. Stops when the off-diagonal Frobenius norm falls below
// 1e-12 * ||m||_F; throws NoConvergence after 100 sweeps.
// Ascending eigenvalues, stable tie-break, so lambda_min is deterministic.
EigenSystem eigh(const ComplexMatrix& m);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-kPsdTol, 0) are clamped to zero; below that throws NotPSD.
ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m);

// Kronecker product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Partial trace of an n-qubit operator, keeping the qubits listed in `keep`
// (any order; result qubits are ordered by ascending original index).
// Qubit 0 is the most significant bit of the basis index.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::initializer_list<std::size_t> keep);

}  // namespace qiso
