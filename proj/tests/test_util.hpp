#pragma once

// Shared generators for randomized tests. Every generator takes an engine
// so individual test cases stay reproducible under fixed seeds.

#include <complex>
#include <random>
#include <vector>

#include "qiso/states.hpp"

namespace qiso::testing {

using Engine = std::mt19937_64;

inline Complex random_gaussian(Engine& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return {dist(rng), dist(rng)};
}

inline ComplexMatrix random_matrix(Engine& rng, std::size_t rows,
                                   std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_gaussian(rng);
  return m;
}

inline ComplexMatrix random_hermitian(Engine& rng, std::size_t n) {
  const ComplexMatrix a = random_matrix(rng, n, n);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

// Wishart construction: A A^dagger normalized to unit trace.
inline ComplexMatrix random_psd_unit_trace(Engine& rng, std::size_t n) {
  const ComplexMatrix a = random_matrix(rng, n, n);
  ComplexMatrix m = a * a.adjoint();
  const double tr = m.trace().real();
  m *= Complex(1.0 / tr, 0.0);
  return m;
}

inline DensityMatrix random_density(Engine& rng, std::size_t n_qubits) {
  return DensityMatrix(n_qubits,
                       random_psd_unit_trace(rng, std::size_t{1} << n_qubits));
}

inline PureState random_pure(Engine& rng, std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<Complex> amps(dim);
  double norm2 = 0.0;
  for (Complex& a : amps) {
    a = random_gaussian(rng);
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& a : amps) a *= inv;
  return PureState(n_qubits, std::move(amps));
}

// Modified Gram-Schmidt on a random Gaussian matrix.
inline ComplexMatrix random_unitary(Engine& rng, std::size_t n) {
  ComplexMatrix a = random_matrix(rng, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t prev = 0; prev < k; ++prev) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        proj += std::conj(a(i, prev)) * a(i, k);
      for (std::size_t i = 0; i < n; ++i) a(i, k) -= proj * a(i, prev);
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm2 += std::norm(a(i, k));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) a(i, k) *= inv;
  }
  return a;
}

}  // namespace qiso::testing
