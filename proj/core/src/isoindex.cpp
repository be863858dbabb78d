#include "qiso/isoindex.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qiso {

namespace {

// 1 - p below which the residual direction is numerically meaningless.
constexpr double kApexCutoff = 1e-12;
// Spectrum classification windows for the fidelity fast paths.
constexpr double kPureTol = 1e-11;
constexpr double kProjectorTol = 1e-10;
// Relative floor for product-spectrum eigenvalues before sum of square
// roots: the square root would otherwise amplify entrywise round-off on
// exact-zero modes to ~1e-8.
constexpr double kSpectrumFloor = 1e-13;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Sum of sqrt over a clamped PSD spectrum.
double sum_sqrt_spectrum(const std::vector<double>& mu) {
  double mu_max = 0.0;
  for (double m : mu) mu_max = std::max(mu_max, m);
  const double floor = kSpectrumFloor * mu_max;
  double acc = 0.0;
  for (double m : mu)
    if (m > floor) acc += std::sqrt(m);
  return acc;
}

struct SpectrumClass {
  enum Kind { kPure, kScaledProjector, kGeneral } kind;
  std::size_t rank = 0;  // scaled-projector case only
};

SpectrumClass classify(const EigenSystem& es) {
  const std::size_t n = es.eigenvalues.size();
  const double top = es.eigenvalues.back();
  if (std::abs(top - 1.0) <= kPureTol) {
    bool rest_zero = true;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (std::abs(es.eigenvalues[i]) > kPureTol) rest_zero = false;
    if (rest_zero) return {SpectrumClass::kPure};
  }
  std::size_t rank = 0;
  for (double l : es.eigenvalues)
    if (l > kProjectorTol) ++rank;
  if (rank > 0) {
    const double level = 1.0 / double(rank);
    bool projector = true;
    for (double l : es.eigenvalues)
      if (std::abs(l) > kProjectorTol && std::abs(l - level) > kProjectorTol)
        projector = false;
    if (projector) return {SpectrumClass::kScaledProjector, rank};
  }
  return {SpectrumClass::kGeneral};
}

double quadratic_form(const ComplexMatrix& m, std::span<const Complex> v) {
  const std::vector<Complex> w = mat_vec(m, v);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += std::conj(v[i]) * w[i];
  return acc.real();
}

void hermitize(ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = h;
      m(j, i) = std::conj(h);
    }
}

// Tr sqrt(m) for a PSD product matrix, floored spectrum.
double trace_sqrt(ComplexMatrix m) {
  hermitize(m);
  const EigenSystem es = eigh(m);
  std::vector<double> mu(es.eigenvalues.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    mu[i] = std::max(0.0, es.eigenvalues[i]);
  return sum_sqrt_spectrum(mu);
}

// Fidelity with `a` already classified from its eigensystem.
double fidelity_classified(const ComplexMatrix& a, const EigenSystem& es_a,
                           const SpectrumClass& cls, const ComplexMatrix& b) {
  const std::size_t dim = a.rows();
  switch (cls.kind) {
    case SpectrumClass::kPure: {
      std::vector<Complex> v(dim);
      for (std::size_t i = 0; i < dim; ++i)
        v[i] = es_a.eigenvectors(i, dim - 1);
      return clamp01(std::sqrt(std::max(0.0, quadratic_form(b, v))));
    }
    case SpectrumClass::kScaledProjector:
      // a = Q/r  =>  Fid = Tr sqrt(QbQ)/sqrt(r) = sqrt(r) Tr sqrt(a b a).
      return clamp01(std::sqrt(double(cls.rank)) * trace_sqrt(a * b * a));
    case SpectrumClass::kGeneral:
    default: {
      const ComplexMatrix s = mat_sqrt_psd(a);
      return clamp01(trace_sqrt(s * b * s));
    }
  }
}

}  // namespace

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("fidelity: dimension mismatch");
  const EigenSystem es_a = eigh(a.matrix());
  const SpectrumClass cls_a = classify(es_a);
  if (cls_a.kind != SpectrumClass::kGeneral)
    return fidelity_classified(a.matrix(), es_a, cls_a, b.matrix());
  // Fidelity is symmetric; give b's spectrum a chance at a fast path.
  const EigenSystem es_b = eigh(b.matrix());
  const SpectrumClass cls_b = classify(es_b);
  if (cls_b.kind != SpectrumClass::kGeneral)
    return fidelity_classified(b.matrix(), es_b, cls_b, a.matrix());
  return fidelity_classified(a.matrix(), es_a, cls_a, b.matrix());
}

double fidelity(const DensityMatrix& rho, const PureState& phi) {
  if (rho.dim() != phi.dim())
    throw DimensionMismatch("fidelity: dimension mismatch");
  return std::clamp(std::sqrt(std::max(0.0, rho.expectation(phi))), 0.0, 1.0);
}

Decomposition decompose(const DensityMatrix& rho) {
  const EigenSystem es = eigh(rho.matrix());
  const std::size_t dim = rho.dim();
  const double lambda_min = es.eigenvalues.front();
  if (lambda_min < -kPsdTol)
    throw NotPSD("decompose: eigenvalue " + std::to_string(lambda_min) +
                 " below -1e-10");
  const double lambda = std::clamp(lambda_min, 0.0, 1.0 / double(dim));
  const double p = std::min(1.0, double(dim) * lambda);
  if (1.0 - p <= kApexCutoff) return {1.0, std::nullopt};

  ComplexMatrix shifted = rho.matrix();
  for (std::size_t i = 0; i < dim; ++i) shifted(i, i) -= lambda;
  // Normalize by the computed trace (mathematically 1-p); this keeps the
  // residual's trace exactly 1 even when 1-p is small.
  const double tr = shifted.trace().real();
  shifted *= Complex(1.0 / tr, 0.0);
  return {p, DensityMatrix(rho.n_qubits(), std::move(shifted))};
}

namespace {

// Alignment of the residual against the reference, computed from the
// residual's spectrum. Both fidelities avoid forming small differences of
// near-unit quantities: the square root would amplify eps-level
// cancellation to ~1e-8, an order above the index tolerances.
double residual_alignment(const DensityMatrix& residual, const PureState& ref) {
  const std::size_t dim = residual.dim();
  const double r = double(dim - 1);

  const EigenSystem es = eigh(residual.matrix());

  // Fid(residual, |ref><ref|)^2 = sum_i mu_i |<ref|v_i>|^2. Summing over
  // the spectrum lets the floor drop the null mode, whose computed
  // eigenvalue is pure round-off.
  const double mu_floor = kSpectrumFloor * std::max(0.0, es.eigenvalues.back());
  double fid_ref2 = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    const double mu = es.eigenvalues[k];
    if (mu <= mu_floor) continue;
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      overlap += std::conj(ref.amplitude(i)) * es.eigenvectors(i, k);
    fid_ref2 += mu * std::norm(overlap);
  }
  const double fid_ref = clamp01(std::sqrt(std::max(0.0, fid_ref2)));

  double fid_orth;
  if (classify(es).kind == SpectrumClass::kPure) {
    // <v|Q|v> as the squared norm of the projection residual v - <ref|v> ref
    // (a positive sum, immune to cancellation).
    std::vector<Complex> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = es.eigenvectors(i, dim - 1);
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      overlap += std::conj(ref.amplitude(i)) * v[i];
    double rest = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      rest += std::norm(v[i] - overlap * ref.amplitude(i));
    fid_orth = std::sqrt(rest / r);
  } else {
    // Tr sqrt(Q rho_hat Q)/sqrt(r) with Q = I - |ref><ref|.
    ComplexMatrix q(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j)
        q(i, j) = -ref.amplitude(i) * std::conj(ref.amplitude(j));
      q(i, i) += 1.0;
    }
    fid_orth = trace_sqrt(q * residual.matrix() * q) / std::sqrt(r);
  }
  return std::clamp(fid_ref - fid_orth, -1.0, 1.0);
}

}  // namespace

IsoIndex isotropic_index(const DensityMatrix& rho, const PureState& ref) {
  if (rho.dim() != ref.dim())
    throw DimensionMismatch("isotropic_index: dimension mismatch");
  const Decomposition dec = decompose(rho);
  if (!dec.residual) return {1.0, 1.0};
  return {residual_alignment(*dec.residual, ref), dec.weight_p};
}

TriangleCoord triangle_coords(const IsoIndex& idx) {
  return {(1.0 - idx.weight_p) * idx.alignment_a, idx.weight_p};
}

double pure_state_alignment(double a0, std::size_t n_qubits) {
  if (a0 < -1e-12 || a0 > 1.0 + 1e-12)
    throw ValidationError("pure_state_alignment: a0 must be in [0, 1]");
  a0 = std::clamp(a0, 0.0, 1.0);
  const double dim = double(std::size_t{1} << n_qubits);
  return a0 - std::sqrt((1.0 - a0 * a0) / (dim - 1.0));
}

bool is_isotropic_error_state(const DensityMatrix& rho, const PureState& ref,
                              double tol) {
  if (rho.dim() != ref.dim())
    throw DimensionMismatch("is_isotropic_error_state: dimension mismatch");
  if (tol <= 0.0)
    throw ValidationError("is_isotropic_error_state: tol must be positive");
  const std::size_t dim = rho.dim();

  // |ref> must be an eigenvector: rho|ref> = lambda0|ref>.
  const std::vector<Complex> w = mat_vec(rho.matrix(), ref.amplitudes());
  const double lambda0 = rho.expectation(ref);
  double dev2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    dev2 += std::norm(w[i] - lambda0 * ref.amplitude(i));
  if (std::sqrt(dev2) > tol) return false;

  // The restriction to the orthogonal complement must be lambda1 * I:
  // ||Q rho Q - lambda1 Q||_F <= tol, lambda1 = Tr(Q rho Q)/(2^n - 1).
  ComplexMatrix q(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j)
      q(i, j) = -ref.amplitude(i) * std::conj(ref.amplitude(j));
    q(i, i) += 1.0;
  }
  const ComplexMatrix b = q * rho.matrix() * q;
  const double lambda1 = b.trace().real() / double(dim - 1);
  ComplexMatrix dev = b;
  dev -= Complex(lambda1, 0.0) * q;
  return dev.frobenius_norm() <= tol;
}

}  // namespace qiso
