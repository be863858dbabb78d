#include "qiso/channels.hpp"

#include <string>

namespace qiso {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw BadProbability(std::string(what) + ": probability " +
                         std::to_string(p) + " outside [0, 1]");
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators)
    : ops_(std::move(operators)) {
  if (ops_.empty())
    throw ValidationError("KrausChannel: needs at least one operator");
  const std::size_t d = ops_.front().rows();
  for (const ComplexMatrix& m : ops_)
    if (!m.is_square() || m.rows() != d)
      throw DimensionMismatch("KrausChannel: operators must share one square "
                              "dimension");
  ComplexMatrix acc(d, d);
  for (const ComplexMatrix& m : ops_) acc += m.adjoint() * m;
  const double dev = max_abs_diff(acc, ComplexMatrix::identity(d));
  if (dev > kTracePreservingTol)
    throw NotTracePreserving(
        "KrausChannel: sum M_i^dagger M_i deviates from I by " +
        std::to_string(dev));
}

DensityMatrix depolarize_total(const DensityMatrix& rho, double gamma) {
  check_probability(gamma, "depolarize_total");
  const std::size_t dim = rho.dim();
  ComplexMatrix out = rho.matrix();
  out *= Complex(1.0 - gamma, 0.0);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) += gamma / double(dim);
  return DensityMatrix(rho.n_qubits(), std::move(out));
}

DensityMatrix depolarize_local(const DensityMatrix& rho, double alpha,
                               std::size_t qubit) {
  check_probability(alpha, "depolarize_local");
  const std::size_t n = rho.n_qubits();
  if (qubit >= n)
    throw BadQubitIndex("depolarize_local: qubit " + std::to_string(qubit) +
                        " out of range for " + std::to_string(n) + " qubits");
  const std::size_t dim = rho.dim();
  const std::size_t bit = std::size_t{1} << (n - 1 - qubit);
  const ComplexMatrix& in = rho.matrix();
  ComplexMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Complex v = (1.0 - alpha) * in(i, j);
      if ((i & bit) == (j & bit))
        v += alpha * 0.5 * (in(i & ~bit, j & ~bit) + in(i | bit, j | bit));
      out(i, j) = v;
    }
  return DensityMatrix(n, std::move(out));
}

DensityMatrix depolarize_all_local(const DensityMatrix& rho, double alpha) {
  check_probability(alpha, "depolarize_all_local");
  DensityMatrix out = rho;
  for (std::size_t q = 0; q < rho.n_qubits(); ++q)
    out = depolarize_local(out, alpha, q);
  return out;
}

DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausChannel& ch) {
  if (ch.dim() != rho.dim())
    throw DimensionMismatch("apply_kraus: channel dimension mismatch");
  ComplexMatrix acc(rho.dim(), rho.dim());
  for (const ComplexMatrix& m : ch.operators())
    acc += (m * ((m * rho.matrix()).adjoint())).adjoint();
  return DensityMatrix(rho.n_qubits(), std::move(acc));
}

bool is_unital(const KrausChannel& ch) {
  const std::size_t d = ch.dim();
  ComplexMatrix acc(d, d);
  for (const ComplexMatrix& m : ch.operators()) acc += m * m.adjoint();
  return max_abs_diff(acc, ComplexMatrix::identity(d)) <= kUnitalTol;
}

}  // namespace qiso
