#include "qiso/states.hpp"

#include <cmath>
#include <string>

namespace qiso {

namespace {

std::size_t check_qubit_dim(std::size_t n_qubits, std::size_t dim,
                            const char* what) {
  if (dim != (std::size_t{1} << n_qubits))
    throw DimensionMismatch(std::string(what) + ": dimension " +
                            std::to_string(dim) + " does not match " +
                            std::to_string(n_qubits) + " qubits");
  return dim;
}

}  // namespace

PureState::PureState(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  check_qubit_dim(n_qubits_, amps_.size(), "PureState");
  double norm2 = 0.0;
  for (const Complex& a : amps_) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > kNormTol)
    throw NotNormalized("PureState: amplitude norm " +
                        std::to_string(std::sqrt(norm2)) + " is not 1");
}

PureState PureState::basis(std::size_t n_qubits, std::size_t index) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim)
    throw BadQubitIndex("PureState::basis: index " + std::to_string(index) +
                        " out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return PureState(n_qubits, std::move(amps));
}

PureState PureState::uniform_superposition(std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<Complex> amps(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
  return PureState(n_qubits, std::move(amps));
}

PureState PureState::bloch(double theta, double phi) {
  std::vector<Complex> amps(2);
  amps[0] = std::cos(theta / 2.0);
  amps[1] = std::polar(std::sin(theta / 2.0), phi);
  return PureState(1, std::move(amps));
}

Complex PureState::inner(const PureState& other) const {
  if (dim() != other.dim())
    throw DimensionMismatch("PureState::inner: dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

DensityMatrix::DensityMatrix(std::size_t n_qubits, ComplexMatrix matrix)
    : n_qubits_(n_qubits), mat_(std::move(matrix)) {
  if (!mat_.is_square())
    throw DimensionMismatch("DensityMatrix: matrix must be square");
  check_qubit_dim(n_qubits_, mat_.rows(), "DensityMatrix");
  const double herm = hermiticity_error(mat_);
  if (herm > kHermitianTol)
    throw NotHermitian("DensityMatrix: max |rho - rho^dagger| = " +
                       std::to_string(herm));
  const Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > kHermitianTol)
    throw ValidationError("DensityMatrix: trace deviates from 1 by " +
                          std::to_string(std::abs(tr - 1.0)));
  for (std::size_t i = 0; i < mat_.rows(); ++i)
    if (mat_(i, i).real() < -kPsdTol)
      throw NotPSD("DensityMatrix: diagonal entry " +
                   std::to_string(mat_(i, i).real()) + " below -1e-10");
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / double(dim);
  return DensityMatrix(n_qubits, std::move(m));
}

double DensityMatrix::expectation(const PureState& phi) const {
  if (phi.dim() != dim())
    throw DimensionMismatch("DensityMatrix::expectation: dimension mismatch");
  const std::vector<Complex> w = mat_vec(mat_, phi.amplitudes());
  Complex acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i)
    acc += std::conj(phi.amplitude(i)) * w[i];
  return acc.real();
}

void validate_density_spectrum(const DensityMatrix& rho) {
  const EigenSystem es = eigh(rho.matrix());
  if (es.eigenvalues.front() < -kPsdTol)
    throw NotPSD("DensityMatrix: eigenvalue " +
                 std::to_string(es.eigenvalues.front()) + " below -1e-10");
}

DensityMatrix pure_to_density(const PureState& s) {
  const std::size_t dim = s.dim();
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = s.amplitude(i) * std::conj(s.amplitude(j));
  return DensityMatrix(s.n_qubits(), std::move(m));
}

DensityMatrix orthogonal_isotropic(const PureState& ref) {
  const std::size_t dim = ref.dim();
  if (dim < 2)
    throw ValidationError("orthogonal_isotropic: needs dimension >= 2");
  const double scale = 1.0 / double(dim - 1);
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = -scale * ref.amplitude(i) * std::conj(ref.amplitude(j));
    m(i, i) += scale;
  }
  return DensityMatrix(ref.n_qubits(), std::move(m));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim())
    throw DimensionMismatch("apply_unitary: operator dimension mismatch");
  if (!is_unitary(u, kUnitaryTol))
    throw NotUnitary("apply_unitary: operator is not unitary within 1e-10");
  // u rho u^dagger computed as (u (u rho)^dagger)^dagger so both products
  // have u on the left, where the sparse-aware multiply can skip zeros.
  ComplexMatrix out = (u * ((u * rho.matrix()).adjoint())).adjoint();
  return DensityMatrix(rho.n_qubits(), std::move(out));
}

PureState apply_unitary(const PureState& s, const ComplexMatrix& u) {
  if (u.rows() != s.dim() || u.cols() != s.dim())
    throw DimensionMismatch("apply_unitary: operator dimension mismatch");
  if (!is_unitary(u, kUnitaryTol))
    throw NotUnitary("apply_unitary: operator is not unitary within 1e-10");
  return PureState(s.n_qubits(), mat_vec(u, s.amplitudes()));
}

DensityMatrix reduce_to_qubits(const DensityMatrix& rho,
                               std::span<const std::size_t> keep) {
  ComplexMatrix m = partial_trace(rho.matrix(), keep);
  std::size_t k = 0;
  while ((std::size_t{1} << k) < m.rows()) ++k;
  return DensityMatrix(k, std::move(m));
}

}  // namespace qiso
