#include "qiso/horodecki.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qiso {

namespace {

void check_alpha(std::size_t n_side, double alpha) {
  const double lo = horodecki_alpha_min(n_side);
  if (!(alpha >= lo - 1e-12 && alpha <= 1.0 + 1e-12))
    throw AlphaOutOfRange("horodecki: alpha " + std::to_string(alpha) +
                          " outside [" + std::to_string(lo) + ", 1]");
}

}  // namespace

double horodecki_alpha_min(std::size_t n_side) {
  const double d = double(std::size_t{1} << n_side);
  return -1.0 / (d * d - 1.0);
}

PureState horodecki_reference(std::size_t n_side) {
  const std::size_t d = std::size_t{1} << n_side;
  std::vector<Complex> amps(d * d);
  const double a = 1.0 / std::sqrt(double(d));
  for (std::size_t j = 0; j < d; ++j) amps[j * d + j] = a;
  return PureState(2 * n_side, std::move(amps));
}

DensityMatrix horodecki_state(std::size_t n_side, double alpha) {
  check_alpha(n_side, alpha);
  const PureState phi = horodecki_reference(n_side);
  const std::size_t dim = phi.dim();
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = alpha * phi.amplitude(i) * std::conj(phi.amplitude(j));
    m(i, i) += (1.0 - alpha) / double(dim);
  }
  return DensityMatrix(2 * n_side, std::move(m));
}

IsoIndex horodecki_index_closed_form(std::size_t n_side, double alpha) {
  check_alpha(n_side, alpha);
  const double d2 = double(std::size_t{1} << (2 * n_side));
  if (alpha >= 0.0) return {1.0, 1.0 - alpha};
  return {-1.0, 1.0 + (d2 - 1.0) * alpha};
}

}  // namespace qiso
