#pragma once

#include <vector>

#include "qiso/states.hpp"

namespace qiso {

// Trace-preserving channel in Kraus form: rho -> sum_i M_i rho M_i^dagger
// with sum_i M_i^dagger M_i = I (checked at construction within 1e-9).
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> operators);

  const std::vector<ComplexMatrix>& operators() const { return ops_; }
  std::size_t dim() const { return ops_.front().rows(); }

 private:
  std::vector<ComplexMatrix> ops_;
};

inline constexpr double kTracePreservingTol = 1e-9;
inline constexpr double kUnitalTol = 1e-9;

// Total depolarizing channel: gamma * I/2^n + (1 - gamma) * rho.
DensityMatrix depolarize_total(const DensityMatrix& rho, double gamma);

// Depolarize one qubit: (1 - alpha) rho + alpha * (Tr_qubit rho) (x) I/2,
// the identity factor re-inserted at the qubit's position.
DensityMatrix depolarize_local(const DensityMatrix& rho, double alpha,
                               std::size_t qubit);

// Local depolarizing channel: the per-qubit channel composed over every
// qubit (ascending index; disjoint-qubit channels commute, so the order is
// unobservable).
DensityMatrix depolarize_all_local(const DensityMatrix& rho, double alpha);

// sum_i M_i rho M_i^dagger.
DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausChannel& ch);

// True iff sum_i M_i M_i^dagger = I within 1e-9. Unital channels fix the
// maximally mixed state and never decrease the Isotropic Weight.
bool is_unital(const KrausChannel& ch);

}  // namespace qiso
