#pragma once

#include "qiso/trajectory.hpp"

namespace qiso {

struct ShorConfig {
  PureState initial_state;  // single qubit
  double channel_alpha;     // per-qubit depolarizing probability
};

// Nine-qubit encoder: maps |psi> (x) |0>^8 to alpha|0_L> + beta|1_L> with
// |0_L> = (|000>+|111>)^(x3)/sqrt(8) and |1_L> the minus version. Built
// once and cached.
const ComplexMatrix& shor_encode();

// Measurement-free decoder-and-corrector: for every single-qubit Pauli
// error E on any of the nine qubits, decode(E encode(|psi>|0^8>)) leaves
// qubit 0 exactly in |psi> (ancilla content arbitrary). Per block
// {l,l+1,l+2}, l in {0,3,6}: CNOT(l->l+1), CNOT(l->l+2),
// Toffoli(l+1,l+2->l); then H on 0,3,6; then CNOT(0->3), CNOT(0->6),
// Toffoli(3,6->0). The encoder is the exact reverse.
const ComplexMatrix& shor_decode_correct();

// Full pipeline: encode -> local depolarizing on all nine qubits ->
// decode&correct -> reduce to the data qubit. success_prob is
// P_ex = <psi|rho|psi>; the index is taken against |psi>.
TrajectoryRecord shor_run(const ShorConfig& cfg);

// The reduced data-qubit state the pipeline produces (exposed so tests can
// inspect the exact state behind the record).
DensityMatrix shor_output_state(const ShorConfig& cfg);

}  // namespace qiso
