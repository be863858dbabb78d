#include "qiso/shor.hpp"

#include <array>
#include <string>
#include <vector>

#include "qiso/channels.hpp"
#include "qiso/gates.hpp"

namespace qiso {

namespace {

constexpr std::size_t kCodeQubits = 9;
constexpr std::size_t kCodeDim = 512;

ComplexMatrix cnot_on(std::size_t control, std::size_t target) {
  return embed_gate(gates::cnot(), {control, target}, kCodeQubits);
}

ComplexMatrix toffoli_on(std::size_t c1, std::size_t c2, std::size_t target) {
  return embed_gate(gates::toffoli(), {c1, c2, target}, kCodeQubits);
}

std::vector<ComplexMatrix> decode_gate_sequence() {
  std::vector<ComplexMatrix> seq;
  for (std::size_t lead : {std::size_t{0}, std::size_t{3}, std::size_t{6}}) {
    seq.push_back(cnot_on(lead, lead + 1));
    seq.push_back(cnot_on(lead, lead + 2));
    seq.push_back(toffoli_on(lead + 1, lead + 2, lead));
  }
  for (std::size_t lead : {std::size_t{0}, std::size_t{3}, std::size_t{6}})
    seq.push_back(embed_gate(gates::hadamard(), {lead}, kCodeQubits));
  seq.push_back(cnot_on(0, 3));
  seq.push_back(cnot_on(0, 6));
  seq.push_back(toffoli_on(3, 6, 0));
  return seq;
}

ComplexMatrix build_decoder() {
  ComplexMatrix u = ComplexMatrix::identity(kCodeDim);
  for (const ComplexMatrix& g : decode_gate_sequence()) u = g * u;
  return u;
}

}  // namespace

const ComplexMatrix& shor_decode_correct() {
  static const ComplexMatrix decoder = build_decoder();
  return decoder;
}

const ComplexMatrix& shor_encode() {
  // Every decoder gate is self-inverse, so the reversed sequence is the
  // adjoint of the composed decoder.
  static const ComplexMatrix encoder = shor_decode_correct().adjoint();
  return encoder;
}

DensityMatrix shor_output_state(const ShorConfig& cfg) {
  if (cfg.initial_state.n_qubits() != 1)
    throw DimensionMismatch("shor_run: initial state must be one qubit");
  if (!(cfg.channel_alpha >= 0.0 && cfg.channel_alpha <= 1.0))
    throw BadProbability("shor_run: channel alpha outside [0, 1]");

  // |psi> (x) |0>^8: only indices 0 (q0=0) and 256 (q0=1) are populated.
  std::vector<Complex> in(kCodeDim);
  in[0] = cfg.initial_state.amplitude(0);
  in[256] = cfg.initial_state.amplitude(1);
  const PureState encoded =
      apply_unitary(PureState(kCodeQubits, std::move(in)), shor_encode());

  DensityMatrix rho = pure_to_density(encoded);
  rho = depolarize_all_local(rho, cfg.channel_alpha);
  rho = apply_unitary(rho, shor_decode_correct());
  const std::array<std::size_t, 1> keep{0};
  return reduce_to_qubits(rho, keep);
}

TrajectoryRecord shor_run(const ShorConfig& cfg) {
  const DensityMatrix out = shor_output_state(cfg);
  const double p_ex = out.expectation(cfg.initial_state);
  const IsoIndex idx = isotropic_index(out, cfg.initial_state);
  return {0, cfg.channel_alpha, idx, triangle_coords(idx), p_ex};
}

}  // namespace qiso
