#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "qrta/linalg.hpp"

namespace testing {

inline constexpr double kPi = std::numbers::pi;

// Small deterministic generator for property tests (xorshift64*).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 1) {}
  double uniform() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return static_cast<double>((s_ * 2685821657736338717ULL) >> 11) * 0x1.0p-53;
  }
  double normal() {
    const double u = uniform() + 1e-300, v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
  }

 private:
  std::uint64_t s_;
};

inline qrta::PureState random_pure(int n, Rng& rng) {
  std::vector<qrta::Complex> a(qrta::dimension_of(n));
  for (auto& x : a) x = {rng.normal(), rng.normal()};
  return qrta::PureState::normalized(n, a);
}

// Random full-rank mixed state G G† / tr.
inline qrta::DensityMatrix random_mixed(int n, Rng& rng) {
  const std::size_t d = qrta::dimension_of(n);
  qrta::ComplexMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = {rng.normal(), rng.normal()};
  auto m = g * g.adjoint();
  m *= qrta::Complex{1.0 / m.trace().real()};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) m(j, i) = std::conj(m(i, j));
  for (std::size_t i = 0; i < d; ++i) m(i, i) = m(i, i).real();
  return qrta::DensityMatrix(n, m);
}

inline qrta::ComplexMatrix random_single_qubit_unitary(Rng& rng) {
  const double a = 2 * kPi * rng.uniform(), b = kPi * rng.uniform(), c = 2 * kPi * rng.uniform();
  const qrta::Complex e1 = std::exp(qrta::Complex{0, a}), e2 = std::exp(qrta::Complex{0, c});
  return qrta::ComplexMatrix(2, 2, {std::cos(b / 2), -e2 * std::sin(b / 2), e1 * std::sin(b / 2),
                                    e1 * e2 * std::cos(b / 2)});
}

inline qrta::ComplexMatrix random_local_unitary(int n, Rng& rng) {
  auto u = qrta::ComplexMatrix::identity(1);
  for (int q = 0; q < n; ++q) u = qrta::kron(u, random_single_qubit_unitary(rng));
  return u;
}

inline double max_abs_diff(const qrta::ComplexMatrix& a, const qrta::ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

}  // namespace testing
