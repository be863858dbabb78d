#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qiso/linalg.hpp"

namespace qiso {

// Unit-norm state vector over n qubits. Qubit 0 is the most significant bit
// of the basis index throughout, matching |q0 q1 ... q_{n-1}> notation.
class PureState {
 public:
  PureState(std::size_t n_qubits, std::vector<Complex> amplitudes);

  // Computational basis state |index>.
  static PureState basis(std::size_t n_qubits, std::size_t index);
  // (1/sqrt(2^n)) sum_i |i>
  static PureState uniform_superposition(std::size_t n_qubits);
  // cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
  static PureState bloch(double theta, double phi);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::size_t i) const { return amps_[i]; }

  // <this|other>
  Complex inner(const PureState& other) const;

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

// Hermitian, unit-trace density operator over n qubits. Construction checks
// Hermiticity, trace and diagonal non-negativity entrywise; the spectral
// bound (eigenvalues >= -1e-10) is enforced where a decomposition computes
// the spectrum anyway, and by validate_density_spectrum for callers that
// take states from outside (files, tests).
class DensityMatrix {
 public:
  DensityMatrix(std::size_t n_qubits, ComplexMatrix matrix);

  static DensityMatrix maximally_mixed(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }

  // <phi|rho|phi>
  double expectation(const PureState& phi) const;

 private:
  std::size_t n_qubits_;
  ComplexMatrix mat_;
};

// Full PSD check via eigendecomposition; throws NotPSD if any eigenvalue is
// below -1e-10. O(n^3) sweeps, intended for input validation and tests, not
// for inner loops.
void validate_density_spectrum(const DensityMatrix& rho);

// |s><s|
DensityMatrix pure_to_density(const PureState& s);

// (I - |ref><ref|) / (2^n - 1): the uniform mixture over the reference's
// orthogonal complement.
DensityMatrix orthogonal_isotropic(const PureState& ref);

// u rho u^dagger. `u` must be unitary within 1e-10.
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u);
// u|s>
PureState apply_unitary(const PureState& s, const ComplexMatrix& u);

// Reduce to the listed qubits (ascending output order).
DensityMatrix reduce_to_qubits(const DensityMatrix& rho,
                               std::span<const std::size_t> keep);

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-10;

}  // namespace qiso
