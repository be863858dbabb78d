#pragma once

#include <optional>

#include "qiso/states.hpp"

namespace qiso {

// rho = weight_p * I/2^n + (1 - weight_p) * residual, with the residual
// carrying at least one null eigenvalue. residual is absent when
// weight_p = 1 (rho is the maximally mixed state).
struct Decomposition {
  double weight_p;
  std::optional<DensityMatrix> residual;
};

// The Isotropic Index (Alignment, Weight). Alignment defaults to 1 at
// weight_p = 1, where the residual carries no direction.
struct IsoIndex {
  double alignment_a;
  double weight_p;
};

// Image of an IsoIndex on the Isotropic Triangle {(x,y): |x| <= 1-y}.
struct TriangleCoord {
  double x;
  double y;
};

// Uhlmann fidelity Tr sqrt(sqrt(a) b sqrt(a)), clamped to [0,1].
// Fast paths (detected from a's or b's spectrum): a pure rank-1 projector
// reduces to sqrt(<v|b|v>); a scaled projector Q/r reduces to
// Tr sqrt(QbQ)/sqrt(r), skipping one matrix square root.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);
// sqrt(<phi|rho|phi>): the pure-state path, exact for callers that know
// one side is pure.
double fidelity(const DensityMatrix& rho, const PureState& phi);

// Split off the maximally mixed component: weight_p = 2^n * lambda_min,
// residual = (rho - lambda_min I) / (1 - p). Residual is declared absent
// when 1 - p <= 1e-12, below which the division is meaningless.
Decomposition decompose(const DensityMatrix& rho);

// The Isotropic Index of rho against a pure reference:
//   A = Fid(residual, |ref><ref|) - Fid(residual, orthogonal_isotropic(ref))
//   p = 2^n * lambda_min(rho)
IsoIndex isotropic_index(const DensityMatrix& rho, const PureState& ref);

// x = (1-p) A, y = p.
TriangleCoord triangle_coords(const IsoIndex& idx);

// Closed-form alignment of a pure state with reference overlap a0:
// a0 - sqrt((1 - a0^2)/(2^n - 1)). Oracle for isotropic_index on pure
// states.
double pure_state_alignment(double a0, std::size_t n_qubits);

// True iff, in a basis adapted to |ref>, rho has the isotropic error form
// diag(lambda0, lambda1, ..., lambda1): |ref> is an eigenvector and the
// restriction to its orthogonal complement is a multiple of the identity,
// both within tol.
bool is_isotropic_error_state(const DensityMatrix& rho, const PureState& ref,
                              double tol);

}  // namespace qiso
