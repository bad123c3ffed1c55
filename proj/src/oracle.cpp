#include "qrta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qrta/error.hpp"

namespace qrta::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxSimplexPoints = 5e6;

double closed_axis(std::size_t k, std::size_t r, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(r);
}

// Euclidean projection onto the probability simplex (sort-based).
std::vector<double> project_to_simplex(std::vector<double> v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cumulative += u[i];
    const double t = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) theta = t;
  }
  for (auto& x : v) x = std::max(0.0, x - theta);
  return v;
}

double distance_to_diagonal(const DensityMatrix& rho, const std::vector<double>& diag) {
  return frobenius_distance(rho.matrix(), ComplexMatrix::diagonal(diag));
}

std::vector<Complex> qubit_product(const std::vector<std::pair<double, double>>& angles) {
  std::vector<Complex> v{1.0};
  for (const auto& [alpha, beta] : angles) {
    const Complex zero = std::cos(alpha);
    const Complex one = std::exp(Complex{0.0, beta}) * std::sin(alpha);
    std::vector<Complex> next;
    next.reserve(v.size() * 2);
    for (const auto& x : v) {
      next.push_back(x * zero);
      next.push_back(x * one);
    }
    v = std::move(next);
  }
  return v;
}

double expectation(const ComplexMatrix& m, const std::vector<Complex>& phi) {
  const ComplexMatrix col(phi.size(), 1, phi);
  return (col.adjoint() * m * col)(0, 0).real();
}

}  // namespace

void GridSpec::validate() const {
  if (resolution < 2) fail(ErrorCode::invalid_argument, "grid resolution must be >= 2");
}

double coherence_grid_oracle(const DensityMatrix& rho, const GridSpec& spec) {
  spec.validate();
  const std::size_t d = rho.dimension();
  const std::size_t r = spec.resolution;

  double points = 1.0;  // C(r + d - 1, d - 1)
  for (std::size_t i = 1; i < d; ++i) points = points * static_cast<double>(r + i) / static_cast<double>(i);
  if (points > kMaxSimplexPoints) fail(ErrorCode::invalid_argument, "coherence oracle: simplex grid too large");

  std::vector<double> best_diag(d, 1.0 / static_cast<double>(d));
  double best = distance_to_diagonal(rho, best_diag);

  std::vector<std::size_t> counts(d, 0);
  std::vector<double> diag(d);
  // Enumerate compositions of r into d nonnegative parts.
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == d) {
      counts[pos] = left;
      for (std::size_t i = 0; i < d; ++i) diag[i] = static_cast<double>(counts[i]) / static_cast<double>(r);
      const double v = distance_to_diagonal(rho, diag);
      if (v < best) {
        best = v;
        best_diag = diag;
      }
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      counts[pos] = k;
      visit(pos + 1, left - k);
    }
  };
  visit(0, r);

  // Projected gradient on ||rho - diag(x)||^2; gradient 2 (x - Re rho_ii).
  std::vector<double> x = best_diag;
  for (int it = 0; it < 500; ++it) {
    std::vector<double> step(d);
    for (std::size_t i = 0; i < d; ++i) step[i] = x[i] - 0.25 * 2.0 * (x[i] - rho(i, i).real());
    x = project_to_simplex(std::move(step));
  }
  return std::min(best, distance_to_diagonal(rho, x));
}

double gm_grid_oracle(const DensityMatrix& rho, const GridSpec& spec, bool symmetric) {
  spec.validate();
  const int n = rho.n_qubits();
  const std::size_t r = spec.resolution;
  const ComplexMatrix& m = rho.matrix();
  double best = 0.0;

  if (symmetric) {
    for (std::size_t k = 0; k <= r; ++k) {
      const double alpha = closed_axis(k, r, 0.0, std::numbers::pi);
      for (std::size_t l = 0; l < r; ++l) {
        const double beta = closed_axis(l, r, 0.0, kTwoPi);
        const std::vector<std::pair<double, double>> angles(n, {alpha, beta});
        best = std::max(best, expectation(m, qubit_product(angles)));
      }
    }
    return best;
  }

  // Mixed-radix counter over (alpha, beta) of qubits 0..n-2; the last qubit
  // (least significant bit) is optimized in closed form.
  const std::size_t head = static_cast<std::size_t>(n - 1);
  std::vector<std::size_t> ka(head, 0), kb(head, 0);
  const std::size_t half = rho.dimension() / 2;
  while (true) {
    std::vector<std::pair<double, double>> angles;
    for (std::size_t q = 0; q < head; ++q)
      angles.emplace_back(closed_axis(ka[q], r, 0.0, std::numbers::pi), closed_axis(kb[q], r, 0.0, kTwoPi));
    const auto chi = qubit_product(angles);

    Complex block[2][2] = {};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < half; ++i)
          for (std::size_t j = 0; j < half; ++j) s += std::conj(chi[i]) * m(2 * i + a, 2 * j + b) * chi[j];
        block[a][b] = s;
      }
    const double tr = 0.5 * (block[0][0].real() + block[1][1].real());
    const double gap = 0.5 * (block[0][0].real() - block[1][1].real());
    best = std::max(best, tr + std::sqrt(gap * gap + std::norm(block[0][1])));

    std::size_t q = 0;
    for (; q < head; ++q) {
      if (++kb[q] < r) break;
      kb[q] = 0;
      if (++ka[q] <= r) break;
      ka[q] = 0;
    }
    if (q == head) break;
  }
  return best;
}

double discord_grid_oracle(const DensityMatrix& rho, const Bipartition& split, const GridSpec& spec) {
  spec.validate();
  if (split.measured().size() != 1) fail(ErrorCode::invalid_argument, "discord oracle: oracle scope is one measured qubit");
  const int n = rho.n_qubits();
  if (split.n_qubits() != n) fail(ErrorCode::invalid_argument, "discord oracle: split size mismatch");
  const int measured = split.measured().front();
  const std::size_t r = spec.resolution;

  auto embed = [&](const ComplexMatrix& e) {
    ComplexMatrix full = ComplexMatrix::identity(1);
    for (int q = 0; q < n; ++q) full = kron(full, q == measured ? e : ComplexMatrix::identity(2));
    return full;
  };

  double best = INFINITY;
  for (std::size_t k = 0; k <= r; ++k) {
    const double theta = closed_axis(k, r, 0.0, std::numbers::pi);
    for (std::size_t l = 0; l < r; ++l) {
      const double phi = closed_axis(l, r, 0.0, kTwoPi);
      const Complex c = std::cos(theta / 2), s = std::sin(theta / 2);
      const Complex e = std::exp(Complex{0.0, phi});
      const Complex up[2] = {c, e * s};
      const Complex down[2] = {s, -e * c};
      double total = 0.0;
      for (const Complex* v : {up, down}) {
        const ComplexMatrix proj(2, 2, {v[0] * std::conj(v[0]), v[0] * std::conj(v[1]), v[1] * std::conj(v[0]),
                                        v[1] * std::conj(v[1])});
        const ComplexMatrix ef = embed(proj);
        const auto post = DensityMatrix::trusted(n, ef * rho.matrix() * ef);
        const auto reduced = partial_trace(post, split.rest());
        const double p = reduced.matrix().trace().real();
        if (p <= 1e-14) continue;
        total += p * von_neumann_entropy(DensityMatrix::trusted(reduced.n_qubits(), reduced.matrix() * Complex{1.0 / p}));
      }
      best = std::min(best, total);
    }
  }
  return best + von_neumann_entropy(partial_trace(rho, split.measured())) - von_neumann_entropy(rho);
}

}  // namespace qrta::oracle
