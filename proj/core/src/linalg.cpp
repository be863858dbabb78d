#include "qiso/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qiso {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kOffDiagonalStop = 1e-12;

std::size_t qubit_count_for_dim(std::size_t dim, const char* what) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim)
    throw DimensionMismatch(std::string(what) +
                            ": dimension is not a power of two");
  return n;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> entries)
    : rows_(rows), cols_(cols), data_(entries) {
  if (data_.size() != rows * cols)
    throw DimensionMismatch("matrix initializer size does not match shape");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix addition shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix subtraction shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex* crow = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      const Complex* brow = b.row(k);
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

std::vector<Complex> mat_vec(const ComplexMatrix& m,
                             std::span<const Complex> v) {
  if (m.cols() != v.size())
    throw DimensionMismatch("matrix-vector product shape mismatch");
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc = 0.0;
    const Complex* row = m.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix comparison shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double hermiticity_error(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows())) <=
         tol;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation annihilating a(p,q). The complex entry is reduced to
// the real symmetric case by the phase of a(p,q); the rotation angle is the
// classic smaller-root choice, which keeps the iteration stable.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p,
                   std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(tau) > 1e150) {
    t = 1.0 / (2.0 * tau);
  } else {
    t = (tau >= 0.0 ? 1.0 : -1.0) /
        (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex s_conj_phase = s * std::conj(phase);
  const Complex s_phase = s * phase;

  const std::size_t n = a.rows();
  // columns: A <- A U
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s_conj_phase * akq;
    a(k, q) = s * akp + c * std::conj(phase) * akq;
  }
  // rows: A <- U^dagger A
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s_phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s_conj_phase * vkq;
    v(k, q) = s * vkp + c * std::conj(phase) * vkq;
  }
}

}  // namespace

EigenSystem eigh(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("eigh: matrix must be square");
  const double herm = hermiticity_error(m);
  if (herm > kHermitianTol)
    throw NotHermitian("eigh: max |m - m^dagger| = " + std::to_string(herm));

  const std::size_t n = m.rows();
  // Work on the Hermitian average so sub-tolerance asymmetry cannot bias the
  // rotations.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = kOffDiagonalStop * a.frobenius_norm();
  bool converged = off_diagonal_norm(a) <= stop;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= stop;
  }
  if (!converged)
    throw NoConvergence("eigh: Jacobi sweeps exhausted without convergence");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return a(x, x).real() < a(y, y).real();
                   });

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i)
      out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m) {
  EigenSystem es = eigh(m);
  const std::size_t n = m.rows();
  for (double lambda : es.eigenvalues)
    if (lambda < -kPsdTol)
      throw NotPSD("mat_sqrt_psd: eigenvalue " + std::to_string(lambda) +
                   " below -" + std::to_string(kPsdTol));
  // W = V diag(sqrt(lambda)), result = W V^dagger.
  ComplexMatrix w = es.eigenvectors;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = std::sqrt(std::max(0.0, es.eigenvalues[k]));
    for (std::size_t i = 0; i < n; ++i) w(i, k) *= r;
  }
  ComplexMatrix out = w * es.eigenvectors.adjoint();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Complex h = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = h;
      out(j, i) = std::conj(h);
    }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex aij = a(i1, j1);
      if (aij == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> keep) {
  if (!m.is_square())
    throw DimensionMismatch("partial_trace: matrix must be square");
  const std::size_t n = qubit_count_for_dim(m.rows(), "partial_trace");

  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw BadQubitIndex("partial_trace: duplicate qubit index");
  for (std::size_t q : kept)
    if (q >= n)
      throw BadQubitIndex("partial_trace: qubit " + std::to_string(q) +
                          " out of range for " + std::to_string(n) +
                          " qubits");

  const std::size_t k = kept.size();
  const std::size_t dim = m.rows();
  // Qubit q lives at bit (n-1-q); kept qubit r (ascending) maps to output
  // bit (k-1-r).
  std::vector<std::size_t> kept_index(dim, 0), traced_index(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t kv = 0, tv = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = (i >> (n - 1 - q)) & 1;
      if (std::binary_search(kept.begin(), kept.end(), q))
        kv = (kv << 1) | bit;
      else
        tv = (tv << 1) | bit;
    }
    kept_index[i] = kv;
    traced_index[i] = tv;
  }

  ComplexMatrix out(std::size_t{1} << k, std::size_t{1} << k);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (traced_index[i] == traced_index[j])
        out(kept_index[i], kept_index[j]) += m(i, j);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::initializer_list<std::size_t> keep) {
  std::vector<std::size_t> v(keep);
  return partial_trace(m, std::span<const std::size_t>(v));
}

}  // namespace qiso
