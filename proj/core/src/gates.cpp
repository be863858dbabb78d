#include "qiso/gates.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qiso {
namespace gates {

const ComplexMatrix& hadamard() {
  static const ComplexMatrix h = [] {
    const double r = 1.0 / std::sqrt(2.0);
    return ComplexMatrix(2, 2, {r, r, r, -r});
  }();
  return h;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix x(2, 2, {0, 1, 1, 0});
  return x;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix y(2, 2,
                               {0, Complex(0, -1), Complex(0, 1), 0});
  return y;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix z(2, 2, {1, 0, 0, -1});
  return z;
}

const ComplexMatrix& cnot() {
  static const ComplexMatrix g(4, 4,
                               {1, 0, 0, 0,  //
                                0, 1, 0, 0,  //
                                0, 0, 0, 1,  //
                                0, 0, 1, 0});
  return g;
}

const ComplexMatrix& toffoli() {
  static const ComplexMatrix g = [] {
    ComplexMatrix m = ComplexMatrix::identity(8);
    m(6, 6) = 0;
    m(7, 7) = 0;
    m(6, 7) = 1;
    m(7, 6) = 1;
    return m;
  }();
  return g;
}

}  // namespace gates

ComplexMatrix embed_gate(const ComplexMatrix& gate,
                         std::span<const std::size_t> targets, std::size_t n) {
  if (!gate.is_square())
    throw DimensionMismatch("embed_gate: gate must be square");
  const std::size_t k = targets.size();
  if (gate.rows() != (std::size_t{1} << k))
    throw DimensionMismatch("embed_gate: gate dimension does not match " +
                            std::to_string(k) + " targets");
  std::vector<std::size_t> seen(targets.begin(), targets.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw BadQubitIndex("embed_gate: duplicate target qubit");
  for (std::size_t t : targets)
    if (t >= n)
      throw BadQubitIndex("embed_gate: target qubit " + std::to_string(t) +
                          " out of range for " + std::to_string(n) +
                          " qubits");

  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix out(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    // Gate-input block index read off the target qubits of this column.
    std::size_t gin = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t bit = (col >> (n - 1 - targets[j])) & 1;
      gin |= bit << (k - 1 - j);
    }
    for (std::size_t gout = 0; gout < gate.rows(); ++gout) {
      const Complex amp = gate(gout, gin);
      if (amp == Complex{}) continue;
      std::size_t row = col;
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t pos = n - 1 - targets[j];
        const std::size_t bit = (gout >> (k - 1 - j)) & 1;
        row = (row & ~(std::size_t{1} << pos)) | (bit << pos);
      }
      out(row, col) += amp;
    }
  }
  return out;
}

ComplexMatrix embed_gate(const ComplexMatrix& gate,
                         std::initializer_list<std::size_t> targets,
                         std::size_t n) {
  std::vector<std::size_t> v(targets);
  return embed_gate(gate, std::span<const std::size_t>(v), n);
}

}  // namespace qiso
