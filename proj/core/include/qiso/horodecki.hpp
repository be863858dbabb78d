#pragma once

#include "qiso/isoindex.hpp"

namespace qiso {

// Interval of the Horodecki parameter: [-1/(d^2-1), 1] with d = 2^n_side.
double horodecki_alpha_min(std::size_t n_side);

// The maximally entangled reference |phi> = (1/sqrt(d)) sum_j |j>|j> on
// 2*n_side qubits.
PureState horodecki_reference(std::size_t n_side);

// (1 - alpha) I/d^2 + alpha |phi><phi|.
DensityMatrix horodecki_state(std::size_t n_side, double alpha);

// Closed-form index against |phi>: (1, 1-alpha) for alpha in [0,1];
// (-1, 1 + (d^2-1) alpha) for alpha in [-1/(d^2-1), 0).
IsoIndex horodecki_index_closed_form(std::size_t n_side, double alpha);

}  // namespace qiso
