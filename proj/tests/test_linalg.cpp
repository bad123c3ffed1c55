#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qrta/error.hpp"
#include "qrta/grover.hpp"
#include "qrta/linalg.hpp"

using namespace qrta;
using testing::kPi;

namespace {

ComplexMatrix real_matrix(std::size_t n, std::initializer_list<double> v) {
  std::vector<Complex> e(v.begin(), v.end());
  return ComplexMatrix(n, n, e);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

}  // namespace

TEST_CASE("pure state validation") {
  CHECK_NOTHROW(PureState(1, {1.0, 0.0}));
  CHECK(code_of([] { PureState(1, {1.0, 1.0}); }) == ErrorCode::domain);
  CHECK(code_of([] { PureState(2, {1.0, 0.0}); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { PureState(1, {NAN, 0.0}); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { PureState::normalized(1, {0.0, 0.0}); }) == ErrorCode::domain);
  const auto s = PureState::normalized(1, {3.0, 4.0});
  CHECK(s[0].real() == doctest::Approx(0.6));
  CHECK(s[1].real() == doctest::Approx(0.8));
}

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix(1, real_matrix(2, {0.5, 0.0, 0.0, 0.5})));
  CHECK(code_of([] { DensityMatrix(1, real_matrix(2, {0.5, 0.1, 0.0, 0.5})); }) == ErrorCode::domain);
  CHECK(code_of([] { DensityMatrix(1, real_matrix(2, {0.6, 0.0, 0.0, 0.5})); }) == ErrorCode::domain);
  CHECK(code_of([] { DensityMatrix(1, real_matrix(2, {1.5, 0.0, 0.0, -0.5})); }) == ErrorCode::domain);
  CHECK(code_of([] { DensityMatrix(2, real_matrix(2, {1.0, 0.0, 0.0, 0.0})); }) == ErrorCode::invalid_argument);
  // Eigenvalues within the clipping window are accepted.
  CHECK_NOTHROW(DensityMatrix(1, real_matrix(2, {1.0 + 5e-11, 0.0, 0.0, -5e-11})));
}

TEST_CASE("kron follows qubit 0 as most significant") {
  const auto one = outer(PureState::basis(1, 1));
  const auto zero = outer(PureState::basis(1, 0));
  const auto rho = kron(one, zero);  // |10> = index 2
  CHECK(rho(2, 2).real() == doctest::Approx(1.0));
  CHECK(rho(1, 1).real() == doctest::Approx(0.0));
}

TEST_CASE("hermitian eigenvalues of the psi2 reduced state") {
  // (1/32) [[4, 8], [8, 28]] has eigenvalues (4 +- sqrt 13) / 8.
  const auto m = real_matrix(2, {4.0 / 32, 8.0 / 32, 8.0 / 32, 28.0 / 32});
  const auto eig = hermitian_eig(m);
  CHECK(eig.eigenvalues[0] == doctest::Approx((4 + std::sqrt(13.0)) / 8).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx((4 - std::sqrt(13.0)) / 8).epsilon(1e-14));
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
  testing::Rng rng(11);
  for (int n = 1; n <= 4; ++n) {
    const auto rho = testing::random_mixed(n, rng);
    const auto eig = hermitian_eig(rho.matrix());
    const auto& v = eig.eigenvectors;
    std::vector<double> lambda = eig.eigenvalues;
    const auto back = v * ComplexMatrix::diagonal(lambda) * v.adjoint();
    CHECK(testing::max_abs_diff(back, rho.matrix()) < 1e-12);
    CHECK(testing::max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(v.rows())) < 1e-12);
    CHECK(std::is_sorted(lambda.rbegin(), lambda.rend()));
  }
}

TEST_CASE("complex Hermitian eigenvalues") {
  // Pauli Y has eigenvalues +-1.
  const ComplexMatrix y(2, 2, {0.0, Complex{0, -1}, Complex{0, 1}, 0.0});
  const auto eig = hermitian_eig(y);
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0));
}

TEST_CASE("partial trace of psi4 onto qubit A") {
  const auto trace = grover::trace_states({});
  const auto rho = outer(trace.states[4].state);
  const std::vector<int> keep{0};
  const auto a = partial_trace(rho, keep);
  CHECK(a(0, 0).real() == doctest::Approx(4.0 / 128).epsilon(1e-14));
  CHECK(a(0, 1).real() == doctest::Approx(-8.0 / 128).epsilon(1e-14));
  CHECK(a(1, 1).real() == doctest::Approx(124.0 / 128).epsilon(1e-14));
}

TEST_CASE("partial trace of a product state returns the factor") {
  testing::Rng rng(5);
  const auto a = testing::random_mixed(1, rng);
  const auto b = testing::random_mixed(2, rng);
  const auto ab = kron(a, b);
  const std::vector<int> k0{0}, k12{1, 2};
  CHECK(testing::max_abs_diff(partial_trace(ab, k0).matrix(), a.matrix()) < 1e-14);
  CHECK(testing::max_abs_diff(partial_trace(ab, k12).matrix(), b.matrix()) < 1e-14);
  const std::vector<int> none;
  CHECK_THROWS_AS(partial_trace(ab, none), Error);
}

TEST_CASE("partial trace keeps trace and positivity") {
  testing::Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = testing::random_mixed(3, rng);
    for (const std::vector<int> keep : {std::vector<int>{0}, {1}, {2}, {0, 2}, {1, 2}}) {
      const auto r = partial_trace(rho, keep);
      CHECK(std::abs(r.matrix().trace().real() - 1.0) < 1e-12);
      CHECK(hermitian_eig(r.matrix()).eigenvalues.back() > -1e-12);
    }
  }
}

TEST_CASE("entropies") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-14));
  const std::vector<double> bad{1.1, -0.1};
  CHECK_THROWS_AS(spectrum_entropy(bad), Error);
  const std::vector<double> clipped{1.0, -1e-11};
  CHECK(spectrum_entropy(clipped) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(outer(PureState::basis(3, 5))) == 0.0);
  const auto mixed = DensityMatrix(2, ComplexMatrix::identity(4) * Complex{0.25});
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(2.0));
}

TEST_CASE("conjugation preserves the spectrum") {
  testing::Rng rng(2);
  const auto rho = testing::random_mixed(3, rng);
  const auto u = testing::random_local_unitary(3, rng);
  const auto before = hermitian_eig(rho.matrix()).eigenvalues;
  const auto after = hermitian_eig(conjugate(rho, u).matrix()).eigenvalues;
  for (std::size_t i = 0; i < before.size(); ++i) CHECK(after[i] == doctest::Approx(before[i]).epsilon(1e-12));
  CHECK_THROWS_AS(conjugate(rho, ComplexMatrix::identity(8) * Complex{2.0}), Error);
}

TEST_CASE("frobenius distance and fidelity") {
  const auto a = ComplexMatrix::identity(2);
  CHECK(frobenius_distance(a, a) == 0.0);
  CHECK(frobenius_distance(a, ComplexMatrix(2, 2)) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(frobenius_distance(a, ComplexMatrix::identity(4)), Error);
  const double h = 1 / std::sqrt(2.0);
  CHECK(fidelity(PureState::basis(1, 0), PureState(1, {h, h})) == doctest::Approx(0.5));
}
