#include "qiso/grover.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qiso/channels.hpp"

namespace qiso {

std::size_t GroverConfig::optimal_steps(std::size_t n_qubits) {
  const double root_n = std::sqrt(double(std::size_t{1} << n_qubits));
  return std::size_t(std::floor(std::numbers::pi / 4.0 * root_n));
}

ComplexMatrix grover_operator(std::size_t n_qubits, std::size_t target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (target >= dim)
    throw BadQubitIndex("grover_operator: target " + std::to_string(target) +
                        " out of range");
  // O = 2|t><t| - I (diagonal), D = 2|s><s| - I (constant 2/N off the
  // shifted diagonal).
  ComplexMatrix oracle = ComplexMatrix::identity(dim);
  oracle *= Complex(-1.0, 0.0);
  oracle(target, target) = 1.0;
  ComplexMatrix diffusion(dim, dim);
  const double two_over_n = 2.0 / double(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) diffusion(i, j) = two_over_n;
    diffusion(i, i) -= 1.0;
  }
  return diffusion * oracle;
}

double grover_angle(std::size_t n_qubits) {
  return std::asin(1.0 / std::sqrt(double(std::size_t{1} << n_qubits)));
}

double grover_success_closed_form(std::size_t k, std::size_t n_qubits) {
  const double s = std::sin(double(2 * k + 1) * grover_angle(n_qubits));
  return s * s;
}

PureState grover_noiseless_state(std::size_t k, std::size_t n_qubits,
                                 std::size_t target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (target >= dim)
    throw BadQubitIndex("grover_noiseless_state: target out of range");
  const double angle = double(2 * k + 1) * grover_angle(n_qubits);
  const double off = std::cos(angle) / std::sqrt(double(dim - 1));
  std::vector<Complex> amps(dim, Complex(off, 0.0));
  amps[target] = std::sin(angle);
  return PureState(n_qubits, std::move(amps));
}

std::vector<TrajectoryRecord> grover_run(
    const GroverConfig& cfg, GroverReference ref_mode,
    const std::function<void(std::size_t, const DensityMatrix&)>& on_state) {
  const std::size_t dim = std::size_t{1} << cfg.n_qubits;
  if (cfg.target >= dim)
    throw BadQubitIndex("grover_run: target out of range");
  if (cfg.error_model != GroverError::kNone &&
      !(cfg.error_param >= 0.0 && cfg.error_param <= 1.0))
    throw BadProbability("grover_run: error parameter outside [0, 1]");

  const ComplexMatrix g = grover_operator(cfg.n_qubits, cfg.target);
  if (!is_unitary(g, kUnitaryTol))
    throw NotUnitary("grover_run: search operator failed the unitarity check");
  // g is validated once here; the per-step conjugation skips the recheck.
  const auto iterate = [&](const DensityMatrix& state) {
    return DensityMatrix(cfg.n_qubits,
                         (g * ((g * state.matrix()).adjoint())).adjoint());
  };
  const PureState target_state = PureState::basis(cfg.n_qubits, cfg.target);
  DensityMatrix rho =
      pure_to_density(PureState::uniform_superposition(cfg.n_qubits));

  std::vector<TrajectoryRecord> records;
  records.reserve(cfg.steps + 1);
  for (std::size_t k = 0; k <= cfg.steps; ++k) {
    if (k > 0) {
      rho = iterate(rho);
      switch (cfg.error_model) {
        case GroverError::kNone:
          break;
        case GroverError::kTotalDepolarizing:
          rho = depolarize_total(rho, cfg.error_param);
          break;
        case GroverError::kLocalDepolarizing:
          rho = depolarize_all_local(rho, cfg.error_param);
          break;
      }
    }
    if (on_state) on_state(k, rho);
    const PureState ref =
        ref_mode == GroverReference::kPerStepNoiseless
            ? grover_noiseless_state(k, cfg.n_qubits, cfg.target)
            : target_state;
    const IsoIndex idx = isotropic_index(rho, ref);
    records.push_back({k, cfg.error_param, idx, triangle_coords(idx),
                       rho.expectation(target_state)});
  }
  return records;
}

}  // namespace qiso
