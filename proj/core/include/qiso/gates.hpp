#pragma once

#include <cstddef>
#include <span>

#include "qiso/linalg.hpp"

namespace qiso {
namespace gates {

// Standard gate constants. Multi-qubit gates follow the qubit-0-most-
// significant convention: CNOT control is gate qubit 0, target gate qubit 1;
// Toffoli controls are gate qubits 0 and 1, target gate qubit 2.
const ComplexMatrix& hadamard();
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& cnot();
const ComplexMatrix& toffoli();

}  // namespace gates

// Embed a k-qubit gate into an n-qubit operator, acting on the (distinct)
// circuit qubits listed in `targets`: gate qubit j goes to circuit qubit
// targets[j]. Identity elsewhere. The result is materialized as a full
// 2^n x 2^n matrix.
ComplexMatrix embed_gate(const ComplexMatrix& gate,
                         std::span<const std::size_t> targets, std::size_t n);
ComplexMatrix embed_gate(const ComplexMatrix& gate,
                         std::initializer_list<std::size_t> targets,
                         std::size_t n);

}  // namespace qiso
