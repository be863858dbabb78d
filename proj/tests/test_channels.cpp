#include "qiso/channels.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "qiso/gates.hpp"
#include "qiso/isoindex.hpp"
#include "test_util.hpp"

using namespace qiso;
using qiso::testing::Engine;

namespace {

// Total depolarizing channel written as the uniform Pauli-string Kraus set:
// {sqrt(1 - gamma + gamma/4^n) I} + {sqrt(gamma/4^n) P : P != I}. Test
// oracle for the convex-mixture implementation.
KrausChannel total_depolarizing_kraus(std::size_t n, double gamma) {
  const ComplexMatrix* paulis[4] = {nullptr, &gates::pauli_x(),
                                    &gates::pauli_y(), &gates::pauli_z()};
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  const double strings = std::pow(4.0, double(n));
  std::vector<ComplexMatrix> ops;
  for (std::size_t code = 0; code < std::size_t(strings); ++code) {
    ComplexMatrix op = ComplexMatrix::identity(1);
    std::size_t rest = code;
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t digit = rest % 4;
      rest /= 4;
      op = kron(op, digit == 0 ? eye : *paulis[digit]);
    }
    const double w =
        code == 0 ? 1.0 - gamma + gamma / strings : gamma / strings;
    op *= Complex(std::sqrt(w), 0.0);
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops));
}

}  // namespace

TEST_CASE("depolarize_total fixed cases") {
  Engine rng(100);
  const DensityMatrix rho = testing::random_density(rng, 2);
  CHECK(max_abs_diff(depolarize_total(rho, 0.0).matrix(), rho.matrix()) ==
        0.0);
  CHECK(max_abs_diff(depolarize_total(rho, 1.0).matrix(),
                     DensityMatrix::maximally_mixed(2).matrix()) < 1e-15);

  const DensityMatrix zero = pure_to_density(PureState::basis(1, 0));
  CHECK(max_abs_diff(depolarize_total(zero, 0.4).matrix(),
                     ComplexMatrix(2, 2, {0.8, 0, 0, 0.2})) < 1e-15);

  CHECK_THROWS_AS(depolarize_total(rho, -0.1), BadProbability);
  CHECK_THROWS_AS(depolarize_total(rho, 1.1), BadProbability);
}

TEST_CASE("depolarize_local fixed cases") {
  Engine rng(101);
  const DensityMatrix rho = testing::random_density(rng, 2);
  CHECK(max_abs_diff(depolarize_local(rho, 0.0, 1).matrix(), rho.matrix()) ==
        0.0);

  // |00><00| depolarized on qubit 0: (1-a)|00><00| + a (I/2 (x) |0><0|)
  const double a = 0.3;
  const DensityMatrix zz = pure_to_density(PureState::basis(2, 0));
  ComplexMatrix expect(4, 4);
  expect(0, 0) = 1.0 - a / 2.0;
  expect(2, 2) = a / 2.0;
  CHECK(max_abs_diff(depolarize_local(zz, a, 0).matrix(), expect) < 1e-15);

  CHECK_THROWS_AS(depolarize_local(rho, 0.5, 2), BadQubitIndex);
}

TEST_CASE("single-qubit local and total depolarizing coincide") {
  Engine rng(102);
  const DensityMatrix rho = testing::random_density(rng, 1);
  for (double a : {0.1, 0.5, 0.9})
    CHECK(max_abs_diff(depolarize_local(rho, a, 0).matrix(),
                       depolarize_total(rho, a).matrix()) < 1e-15);
}

TEST_CASE("local depolarizing on disjoint qubits commutes") {
  Engine rng(103);
  const DensityMatrix rho = testing::random_density(rng, 2);
  const double a = 0.37;
  const DensityMatrix forward =
      depolarize_local(depolarize_local(rho, a, 0), a, 1);
  const DensityMatrix backward =
      depolarize_local(depolarize_local(rho, a, 1), a, 0);
  CHECK(max_abs_diff(forward.matrix(), backward.matrix()) <= 1e-12);
  CHECK(max_abs_diff(forward.matrix(),
                     depolarize_all_local(rho, a).matrix()) <= 1e-12);
}

TEST_CASE("depolarize_all_local at alpha = 1 fully mixes") {
  Engine rng(104);
  const DensityMatrix rho = testing::random_density(rng, 2);
  CHECK(max_abs_diff(depolarize_all_local(rho, 0.0).matrix(), rho.matrix()) ==
        0.0);
  CHECK(max_abs_diff(depolarize_all_local(rho, 1.0).matrix(),
                     DensityMatrix::maximally_mixed(2).matrix()) < 1e-14);
}

TEST_CASE("apply_kraus fixed cases") {
  Engine rng(105);
  const DensityMatrix rho = testing::random_density(rng, 1);
  const KrausChannel identity({ComplexMatrix::identity(2)});
  CHECK(max_abs_diff(apply_kraus(rho, identity).matrix(), rho.matrix()) <
        1e-15);

  // bit-flip channel on |0><0|: diag(1-q, q)
  const double q = 0.25;
  ComplexMatrix k0 = ComplexMatrix::identity(2);
  k0 *= Complex(std::sqrt(1.0 - q), 0.0);
  ComplexMatrix k1 = gates::pauli_x();
  k1 *= Complex(std::sqrt(q), 0.0);
  const KrausChannel bitflip({k0, k1});
  CHECK(max_abs_diff(
            apply_kraus(pure_to_density(PureState::basis(1, 0)), bitflip)
                .matrix(),
            ComplexMatrix(2, 2, {1.0 - q, 0, 0, q})) < 1e-15);
  CHECK(is_unital(bitflip));
}

TEST_CASE("Pauli Kraus form reproduces depolarize_total") {
  Engine rng(106);
  for (std::size_t n : {1u, 2u}) {
    const DensityMatrix rho = testing::random_density(rng, n);
    for (double gamma : {0.2, 0.7}) {
      const KrausChannel ch = total_depolarizing_kraus(n, gamma);
      CHECK(max_abs_diff(apply_kraus(rho, ch).matrix(),
                         depolarize_total(rho, gamma).matrix()) <= 1e-10);
    }
  }
}

TEST_CASE("KrausChannel validates trace preservation") {
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= Complex(0.5, 0.0);
  CHECK_THROWS_AS(KrausChannel({half}), NotTracePreserving);
  CHECK_THROWS_AS(apply_kraus(DensityMatrix::maximally_mixed(2),
                              KrausChannel({ComplexMatrix::identity(2)})),
                  DimensionMismatch);
}

TEST_CASE("amplitude damping is trace-preserving but not unital") {
  const double q = 0.3;
  const ComplexMatrix k0(2, 2, {1, 0, 0, std::sqrt(1.0 - q)});
  const ComplexMatrix k1(2, 2, {0, std::sqrt(q), 0, 0});
  const KrausChannel damping({k0, k1});
  CHECK_FALSE(is_unital(damping));
}

TEST_CASE("channel outputs satisfy the density-matrix invariants") {
  Engine rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = testing::random_density(rng, 2);
    for (const DensityMatrix& out :
         {depolarize_total(rho, 0.3), depolarize_local(rho, 0.6, 1),
          depolarize_all_local(rho, 0.45)}) {
      CHECK(std::abs(out.matrix().trace() - 1.0) <= 1e-12);
      CHECK(hermiticity_error(out.matrix()) <= 1e-12);
      CHECK_NOTHROW(validate_density_spectrum(out));
    }
  }
}

TEST_CASE("total depolarizing slides the weight toward 1, alignment fixed") {
  Engine rng(108);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = testing::random_density(rng, 2);
    const PureState ref = testing::random_pure(rng, 2);
    const IsoIndex before = isotropic_index(rho, ref);
    for (double gamma : {0.1, 0.4, 0.8}) {
      const IsoIndex after =
          isotropic_index(depolarize_total(rho, gamma), ref);
      CHECK(std::abs(after.weight_p -
                     (gamma + before.weight_p - gamma * before.weight_p)) <=
            1e-8);
      CHECK(std::abs(after.alignment_a - before.alignment_a) <= 1e-8);
    }
  }
}
