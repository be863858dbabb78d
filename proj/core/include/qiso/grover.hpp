#pragma once

#include <functional>
#include <vector>

#include "qiso/trajectory.hpp"

namespace qiso {

enum class GroverError { kNone, kTotalDepolarizing, kLocalDepolarizing };

// Which reference state the per-step index is computed against.
enum class GroverReference {
  kPerStepNoiseless,  // the error-less |s_k> of the closed form
  kTarget             // the fixed target state |t>
};

struct GroverConfig {
  std::size_t n_qubits;
  std::size_t target;
  std::size_t steps;  // use optimal_steps(n) for the canonical run length
  GroverError error_model = GroverError::kNone;
  double error_param = 0.0;  // gamma for TDCh, alpha for LDCh

  // floor(pi/4 * sqrt(2^n)), the optimal noiseless iteration count.
  static std::size_t optimal_steps(std::size_t n_qubits);
};

// G = D O with oracle O = 2|t><t| - I and diffusion D = 2|s><s| - I.
ComplexMatrix grover_operator(std::size_t n_qubits, std::size_t target);

// theta = arcsin(2^{-n/2})
double grover_angle(std::size_t n_qubits);

// sin^2((2k+1) theta): the noiseless success probability after k steps.
double grover_success_closed_form(std::size_t k, std::size_t n_qubits);

// |s_k> = sin((2k+1)theta)|t> + cos((2k+1)theta)|t_bar>, the noiseless
// state after k steps (up to the global sign the density matrix discards).
PureState grover_noiseless_state(std::size_t k, std::size_t n_qubits,
                                 std::size_t target);

// Run the (possibly noisy) search: start from |s><s|; each step applies G
// and then the configured channel. Records step k = 0..steps with
// success = <t|rho|t> and the index against the configured reference.
// `on_state` (optional) observes the exact density matrix at every step.
std::vector<TrajectoryRecord> grover_run(
    const GroverConfig& cfg,
    GroverReference ref_mode = GroverReference::kPerStepNoiseless,
    const std::function<void(std::size_t, const DensityMatrix&)>& on_state =
        nullptr);

}  // namespace qiso
