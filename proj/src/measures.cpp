#include "qrta/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "qrta/error.hpp"
#include "qrta/optimize.hpp"

namespace qrta {

namespace {

constexpr double kProjectorTol = 1e-10;
constexpr double kOutcomeFloor = 1e-14;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr std::size_t kNelderMeadEvals = 2000;
constexpr int kGmGridSteps = 64;
constexpr std::size_t kGmSymmetricStarts = 6;
constexpr std::size_t kGmHaltonStarts = 16;
constexpr std::size_t kGmGeneralRefined = 8;
constexpr std::size_t kDiscordRefined = 4;
constexpr std::size_t kDiscordHaltonStarts = 48;

// Full basis index of each compact index over `qubits` (qubit 0 is the MSB).
std::vector<std::size_t> scatter_offsets(int n, const std::vector<int>& qubits) {
  const int k = static_cast<int>(qubits.size());
  std::vector<std::size_t> out(std::size_t{1} << k);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t full = 0;
    for (int j = 0; j < k; ++j)
      if ((i >> (k - 1 - j)) & 1u) full |= std::size_t{1} << (n - 1 - qubits[j]);
    out[i] = full;
  }
  return out;
}

std::string letter(int q) {
  if (q < 26) return std::string(1, static_cast<char>('A' + q));
  return "q" + std::to_string(q);
}

// Tr_measured((E (x) I) rho) for a projector E on the measured side.
ComplexMatrix measured_block(const ComplexMatrix& rho, const std::vector<std::size_t>& m_off,
                             const std::vector<std::size_t>& r_off, const ComplexMatrix& e) {
  const std::size_t dr = r_off.size();
  ComplexMatrix out(dr, dr);
  for (std::size_t a = 0; a < m_off.size(); ++a) {
    for (std::size_t b = 0; b < m_off.size(); ++b) {
      const Complex w = e(b, a);
      if (w == Complex{}) continue;
      for (std::size_t r = 0; r < dr; ++r)
        for (std::size_t s = 0; s < dr; ++s) out(r, s) += w * rho(m_off[a] | r_off[r], m_off[b] | r_off[s]);
    }
  }
  return out;
}

double conditional_entropy(const DensityMatrix& rho, const Bipartition& split,
                           const std::vector<std::size_t>& m_off, const std::vector<std::size_t>& r_off,
                           const std::vector<ComplexMatrix>& projectors) {
  const int rest_qubits = static_cast<int>(split.rest().size());
  double total = 0.0;
  for (const auto& e : projectors) {
    ComplexMatrix sigma = measured_block(rho.matrix(), m_off, r_off, e);
    const double p = sigma.trace().real();
    if (p <= kOutcomeFloor) continue;
    sigma *= Complex{1.0 / p};
    total += p * von_neumann_entropy(DensityMatrix::trusted(rest_qubits, std::move(sigma)));
  }
  return total;
}

std::vector<ComplexMatrix> rank_one_projectors(const ComplexMatrix& u) {
  std::vector<ComplexMatrix> out;
  out.reserve(u.cols());
  for (std::size_t k = 0; k < u.cols(); ++k) {
    ComplexMatrix p(u.rows(), u.rows());
    for (std::size_t r = 0; r < u.rows(); ++r)
      for (std::size_t c = 0; c < u.rows(); ++c) p(r, c) = u(r, k) * std::conj(u(c, k));
    out.push_back(std::move(p));
  }
  return out;
}

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

// ---- geometric measure internals ----

using Qubit = std::array<Complex, 2>;

Qubit qubit_from_angles(double alpha, double beta) {
  return {Complex{std::cos(alpha)}, std::polar(1.0, beta) * std::sin(alpha)};
}

std::vector<Complex> product_vector(const std::vector<Qubit>& qubits) {
  std::vector<Complex> v{1.0};
  for (const auto& q : qubits) {
    std::vector<Complex> next(v.size() * 2);
    for (std::size_t i = 0; i < v.size(); ++i) {
      next[2 * i] = v[i] * q[0];
      next[2 * i + 1] = v[i] * q[1];
    }
    v = std::move(next);
  }
  return v;
}

// u^dagger X v for the state's operator X (rho, or psi psi^dagger).
using Bilinear = std::function<Complex(const std::vector<Complex>&, const std::vector<Complex>&)>;

struct GmProblem {
  int n;
  Bilinear form;
  std::size_t diag_argmax;  // basis index with the largest population

  double overlap(const std::vector<Qubit>& qubits) const {
    const auto phi = product_vector(qubits);
    return form(phi, phi).real();
  }
};

std::vector<Qubit> qubits_of(const std::vector<double>& x, int n, AnsatzMode mode) {
  std::vector<Qubit> out;
  out.reserve(n);
  for (int q = 0; q < n; ++q) {
    const std::size_t k = mode == AnsatzMode::symmetric ? 0 : 2 * static_cast<std::size_t>(q);
    out.push_back(qubit_from_angles(x[k], x[k + 1]));
  }
  return out;
}

// Largest-eigenvalue eigenvector of a 2x2 Hermitian [[a, z], [conj z, c]].
std::pair<double, Qubit> top_eigen(double a, Complex z, double c) {
  const double half = 0.5 * (a - c);
  const double lambda = 0.5 * (a + c) + std::sqrt(half * half + std::norm(z));
  Qubit v = a >= c ? Qubit{Complex{lambda - c}, std::conj(z)} : Qubit{z, Complex{lambda - a}};
  const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  if (norm < 1e-300) return {lambda, Qubit{Complex{1.0}, Complex{}}};
  v[0] /= norm;
  v[1] /= norm;
  return {lambda, v};
}

std::pair<double, double> angles_of(const Qubit& v) {
  const double alpha = std::atan2(std::abs(v[1]), std::abs(v[0]));
  const double beta = std::abs(v[1]) > 0.0 && std::abs(v[0]) > 0.0 ? std::arg(v[1]) - std::arg(v[0])
                      : std::abs(v[1]) > 0.0                    ? std::arg(v[1])
                                                                : 0.0;
  return normalize_angles(alpha, beta);
}

// Alternating single-qubit maximization: each step replaces one factor by
// the top eigenvector of its effective 2x2 operator, so the overlap never
// decreases.
double polish(const GmProblem& prob, std::vector<Qubit>& qubits, opt::EvalBudget& budget) {
  const int n = prob.n;
  double value = prob.overlap(qubits);
  for (int sweep = 0; sweep < 200; ++sweep) {
    const double start = value;
    for (int j = 0; j < n; ++j) {
      if (budget.grant(1) == 0) return prob.overlap(qubits);
      budget.spend(1);
      std::array<std::vector<Complex>, 2> w;
      for (int a = 0; a < 2; ++a) {
        auto basis = qubits;
        basis[j] = a == 0 ? Qubit{Complex{1.0}, Complex{}} : Qubit{Complex{}, Complex{1.0}};
        w[a] = product_vector(basis);
      }
      const double m00 = prob.form(w[0], w[0]).real();
      const double m11 = prob.form(w[1], w[1]).real();
      const Complex m01 = prob.form(w[0], w[1]);
      auto [lambda, v] = top_eigen(m00, m01, m11);
      if (lambda > value) {
        qubits[j] = v;
        value = lambda;
      }
    }
    if (value - start < 1e-15) break;
  }
  return prob.overlap(qubits);
}

struct Candidate {
  std::vector<double> x;
  double value;
};

GmResult run_gm(const GmProblem& prob, AnsatzMode mode, const OptimizerOptions& options) {
  const int n = prob.n;
  opt::EvalBudget budget(options.eval_budget);
  auto eval = [&](const std::vector<double>& x) {
    budget.spend(1);
    return prob.overlap(qubits_of(x, n, mode));
  };

  // Coarse symmetric grid: alpha = k pi / 64 (k = 0..64), beta = 2 pi l / 64.
  std::vector<Candidate> grid;
  for (int k = 0; k <= kGmGridSteps && !budget.exhausted(); ++k) {
    for (int l = 0; l < kGmGridSteps && !budget.exhausted(); ++l) {
      std::vector<double> x{std::numbers::pi * k / kGmGridSteps, kTwoPi * l / kGmGridSteps};
      std::vector<double> full = x;
      if (mode == AnsatzMode::general)
        for (int q = 1; q < n; ++q) full.insert(full.end(), x.begin(), x.end());
      const double v = eval(full);
      grid.push_back({std::move(full), v});
    }
  }
  std::stable_sort(grid.begin(), grid.end(), [](const Candidate& a, const Candidate& b) { return a.value > b.value; });

  // Keep well-separated grid maxima as starts.
  std::vector<Candidate> starts;
  const double sep_a = 2.5 * std::numbers::pi / kGmGridSteps;
  const double sep_b = 2.5 * kTwoPi / kGmGridSteps;
  for (const auto& c : grid) {
    if (starts.size() >= kGmSymmetricStarts) break;
    const bool distinct = std::all_of(starts.begin(), starts.end(), [&](const Candidate& s) {
      const double db = std::abs(wrap(c.x[1] - s.x[1] + std::numbers::pi, kTwoPi) - std::numbers::pi);
      return std::abs(c.x[0] - s.x[0]) > sep_a || db > sep_b;
    });
    if (distinct) starts.push_back(c);
  }

  if (mode == AnsatzMode::general) {
    std::vector<double> x(2 * n, 0.0);
    for (int q = 0; q < n; ++q)
      if ((prob.diag_argmax >> (n - 1 - q)) & 1u) x[2 * q] = std::numbers::pi / 2;
    if (!budget.exhausted()) starts.push_back({x, eval(x)});
    for (std::size_t h = 0; h < kGmHaltonStarts && !budget.exhausted(); ++h) {
      auto u = opt::halton_point(h, 2 * n);
      for (int q = 0; q < n; ++q) {
        u[2 * q] *= std::numbers::pi;
        u[2 * q + 1] *= kTwoPi;
      }
      const double v = eval(u);
      starts.push_back({std::move(u), v});
    }
    std::stable_sort(starts.begin(), starts.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    if (starts.size() > kGmGeneralRefined) starts.resize(kGmGeneralRefined);
  }

  std::vector<double> best_x = starts.empty() ? std::vector<double>(mode == AnsatzMode::symmetric ? 2 : 2 * n, 0.0)
                                              : starts.front().x;
  double best = starts.empty() ? eval(best_x) : starts.front().value;

  for (const auto& s : starts) {
    const std::size_t granted = budget.grant(kNelderMeadEvals);
    if (granted < 2) break;
    opt::NelderMeadOptions nm;
    nm.max_evals = granted;
    nm.ftol = 1e-12;
    nm.xtol = 1e-8;
    const auto res = opt::nelder_mead(
        [&](std::span<const double> x) { return -prob.overlap(qubits_of({x.begin(), x.end()}, n, mode)); }, s.x, nm);
    budget.spend(res.evaluations);
    std::vector<double> x = res.x;
    double value = -res.value;
    if (mode == AnsatzMode::general) {
      auto qubits = qubits_of(x, n, mode);
      value = polish(prob, qubits, budget);
      for (int q = 0; q < n; ++q) {
        const auto [a, b] = angles_of(qubits[q]);
        x[2 * q] = a;
        x[2 * q + 1] = b;
      }
    }
    if (value > best) {
      best = value;
      best_x = std::move(x);
    }
  }

  GmResult out;
  out.argmax.mode = mode;
  const std::size_t pairs = mode == AnsatzMode::symmetric ? 1 : static_cast<std::size_t>(n);
  for (std::size_t k = 0; k < pairs; ++k) out.argmax.angles.push_back(normalize_angles(best_x[2 * k], best_x[2 * k + 1]));
  out.lambda2 = prob.overlap(qubits_of(best_x, n, mode));
  out.gm = std::max(0.0, -std::log2(std::min(1.0, out.lambda2)));
  out.evaluations = budget.used();
  return out;
}

}  // namespace

// ------------------------------------------------------------ bipartition

Bipartition::Bipartition(int n_qubits, std::vector<int> measured) : n_qubits_(n_qubits), measured_(std::move(measured)) {
  std::sort(measured_.begin(), measured_.end());
  measured_.erase(std::unique(measured_.begin(), measured_.end()), measured_.end());
  if (measured_.empty()) fail(ErrorCode::invalid_argument, "bipartition: measured side is empty");
  if (measured_.front() < 0 || measured_.back() >= n_qubits_) {
    fail(ErrorCode::invalid_argument, "bipartition: qubit index out of range");
  }
  for (int q = 0; q < n_qubits_; ++q)
    if (!std::binary_search(measured_.begin(), measured_.end(), q)) rest_.push_back(q);
  if (rest_.empty()) fail(ErrorCode::invalid_argument, "bipartition: unmeasured side is empty");
}

Bipartition Bipartition::parse(int n_qubits, std::string_view label) {
  const auto bar = label.find('|');
  if (bar == std::string_view::npos) fail(ErrorCode::invalid_argument, "bipartition: expected 'measured|rest'");
  auto side = [&](std::string_view s) {
    std::vector<int> qs;
    for (const char ch : s) {
      if (ch < 'A' || ch >= 'A' + n_qubits) {
        fail(ErrorCode::invalid_argument, "bipartition: bad qubit letter in '" + std::string(label) + "'");
      }
      qs.push_back(ch - 'A');
    }
    std::sort(qs.begin(), qs.end());
    return qs;
  };
  Bipartition out(n_qubits, side(label.substr(0, bar)));
  if (side(label.substr(bar + 1)) != out.rest_) {
    fail(ErrorCode::invalid_argument, "bipartition: sides of '" + std::string(label) + "' are not complementary");
  }
  return out;
}

std::vector<Bipartition> Bipartition::all(int n_qubits) {
  std::vector<Bipartition> out;
  const std::size_t full = (std::size_t{1} << n_qubits) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::vector<int> measured;
    for (int q = 0; q < n_qubits; ++q)
      if ((mask >> q) & 1u) measured.push_back(q);
    out.emplace_back(n_qubits, std::move(measured));
  }
  return out;
}

std::string Bipartition::label() const {
  std::string s;
  for (const int q : measured_) s += letter(q);
  s += '|';
  for (const int q : rest_) s += letter(q);
  return s;
}

// ------------------------------------------------------ measurement basis

MeasurementBasis::MeasurementBasis(std::vector<ComplexMatrix> projectors) : projectors_(std::move(projectors)) {
  if (projectors_.empty()) fail(ErrorCode::invalid_argument, "measurement basis: no projectors");
  const std::size_t d = projectors_.front().rows();
  ComplexMatrix sum(d, d);
  for (const auto& p : projectors_) {
    if (!p.square() || p.rows() != d) fail(ErrorCode::invalid_argument, "measurement basis: projector dimension mismatch");
    if (p.hermiticity_defect() > kProjectorTol) fail(ErrorCode::domain, "measurement basis: projector not Hermitian");
    if (frobenius_distance(p * p, p) > kProjectorTol) fail(ErrorCode::domain, "measurement basis: projector not idempotent");
    sum += p;
  }
  if (frobenius_distance(sum, ComplexMatrix::identity(d)) > kProjectorTol) {
    fail(ErrorCode::domain, "measurement basis: projectors do not sum to identity");
  }
}

MeasurementBasis MeasurementBasis::computational(std::size_t dimension) {
  return from_unitary(ComplexMatrix::identity(dimension));
}

MeasurementBasis MeasurementBasis::from_unitary(const ComplexMatrix& unitary) {
  return MeasurementBasis(rank_one_projectors(unitary));
}

bool MeasurementBasis::rank_one() const {
  return std::all_of(projectors_.begin(), projectors_.end(),
                     [](const ComplexMatrix& p) { return std::abs(p.trace() - Complex{1.0}) < 1e-9; });
}

// -------------------------------------------------------------- coherence

double coherence_frobenius(const DensityMatrix& rho) {
  double s = 0.0;
  for (std::size_t r = 0; r < rho.dimension(); ++r)
    for (std::size_t c = 0; c < rho.dimension(); ++c)
      if (r != c) s += std::norm(rho(r, c));
  return std::sqrt(s);
}

// ---------------------------------------------------------------- discord

double mutual_information(const DensityMatrix& rho, const Bipartition& split) {
  if (split.n_qubits() != rho.n_qubits()) fail(ErrorCode::invalid_argument, "mutual_information: split size mismatch");
  return von_neumann_entropy(partial_trace(rho, split.measured())) +
         von_neumann_entropy(partial_trace(rho, split.rest())) - von_neumann_entropy(rho);
}

double conditional_entropy_after_measurement(const DensityMatrix& rho, const Bipartition& split,
                                             const MeasurementBasis& basis) {
  if (split.n_qubits() != rho.n_qubits()) fail(ErrorCode::invalid_argument, "conditional entropy: split size mismatch");
  if (basis.dimension() != split.measured_dimension()) {
    fail(ErrorCode::invalid_argument, "conditional entropy: basis dimension does not match measured side");
  }
  const int n = rho.n_qubits();
  return conditional_entropy(rho, split, scatter_offsets(n, split.measured()), scatter_offsets(n, split.rest()),
                             basis.projectors());
}

ComplexMatrix bloch_unitary(double theta, double phi) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return ComplexMatrix(2, 2, {Complex{c}, -std::polar(s, -phi), std::polar(s, phi), Complex{c}});
}

ComplexMatrix givens_unitary(std::size_t dimension, std::span<const double> angles) {
  if (angles.size() != dimension * (dimension - 1)) {
    fail(ErrorCode::invalid_argument, "givens_unitary: expected d(d-1) angles");
  }
  ComplexMatrix u = ComplexMatrix::identity(dimension);
  std::size_t k = 0;
  for (std::size_t i = 0; i + 1 < dimension; ++i) {
    for (std::size_t j = i + 1; j < dimension; ++j, k += 2) {
      const double c = std::cos(angles[k]), s = std::sin(angles[k]);
      const Complex e = std::polar(1.0, angles[k + 1]);
      // u <- u * G(i, j)
      for (std::size_t r = 0; r < dimension; ++r) {
        const Complex ui = u(r, i), uj = u(r, j);
        u(r, i) = ui * c + uj * e * s;
        u(r, j) = -ui * std::conj(e) * s + uj * c;
      }
    }
  }
  return u;
}

DiscordResult discord_search(const DensityMatrix& rho, const Bipartition& split, const OptimizerOptions& options) {
  if (split.n_qubits() != rho.n_qubits()) fail(ErrorCode::invalid_argument, "discord: split size mismatch");
  const int n = rho.n_qubits();
  const auto m_off = scatter_offsets(n, split.measured());
  const auto r_off = scatter_offsets(n, split.rest());
  const std::size_t d = split.measured_dimension();
  const bool qubit = d == 2;
  const std::size_t dims = qubit ? 2 : d * (d - 1);

  auto unitary = [&](std::span<const double> x) { return qubit ? bloch_unitary(x[0], x[1]) : givens_unitary(d, x); };
  opt::EvalBudget budget(options.eval_budget);
  auto objective = [&](std::span<const double> x) {
    return conditional_entropy(rho, split, m_off, r_off, rank_one_projectors(unitary(x)));
  };

  std::vector<Candidate> starts;
  auto consider = [&](std::vector<double> x) {
    budget.spend(1);
    const double v = objective(x);
    starts.push_back({std::move(x), v});
  };
  if (qubit) {
    for (int k = 0; k <= 8 && !budget.exhausted(); ++k)
      for (int l = 0; l < 16 && !budget.exhausted(); ++l)
        consider({std::numbers::pi * k / 8, kTwoPi * l / 16});
  } else {
    consider(std::vector<double>(dims, 0.0));
    for (std::size_t h = 0; h < kDiscordHaltonStarts && !budget.exhausted(); ++h) {
      auto u = opt::halton_point(h, dims);
      for (std::size_t i = 0; i < dims; i += 2) {
        u[i] *= std::numbers::pi / 2;
        u[i + 1] *= kTwoPi;
      }
      consider(std::move(u));
    }
  }
  std::stable_sort(starts.begin(), starts.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  if (starts.size() > kDiscordRefined) starts.resize(kDiscordRefined);

  std::vector<double> best_x = starts.front().x;
  double best = starts.front().value;
  for (const auto& s : starts) {
    const std::size_t granted = budget.grant(kNelderMeadEvals);
    if (granted < 2) break;
    opt::NelderMeadOptions nm;
    nm.max_evals = granted;
    nm.initial_step = 0.3;
    const auto res = opt::nelder_mead(objective, s.x, nm);
    budget.spend(res.evaluations);
    if (res.value < best) {
      best = res.value;
      best_x = res.x;
    }
  }

  const double s_measured = von_neumann_entropy(partial_trace(rho, split.measured()));
  const double s_total = von_neumann_entropy(rho);
  return DiscordResult{best + s_measured - s_total, best, MeasurementBasis::from_unitary(unitary(best_x)), budget.used()};
}

double discord(const DensityMatrix& rho, const Bipartition& split, const OptimizerOptions& options) {
  return discord_search(rho, split, options).value;
}

// ------------------------------------------------------ geometric measure

std::pair<double, double> normalize_angles(double alpha, double beta) {
  // alpha -> alpha + pi flips the sign of the whole qubit factor.
  return {wrap(alpha, std::numbers::pi), wrap(beta, kTwoPi)};
}

PureState ProductAnsatz::state(int n_qubits) const {
  const std::size_t expected = mode == AnsatzMode::symmetric ? 1 : static_cast<std::size_t>(n_qubits);
  if (angles.size() != expected) fail(ErrorCode::invalid_argument, "product ansatz: wrong number of angle pairs");
  std::vector<Qubit> qubits;
  for (int q = 0; q < n_qubits; ++q) {
    const auto [a, b] = qubit(q);
    if (!std::isfinite(a) || !std::isfinite(b)) fail(ErrorCode::invalid_argument, "product ansatz: non-finite angle");
    qubits.push_back(qubit_from_angles(a, b));
  }
  return PureState::normalized(n_qubits, product_vector(qubits));
}

bool is_permutation_symmetric(const DensityMatrix& rho, double tol) {
  const int n = rho.n_qubits();
  const std::size_t d = rho.dimension();
  for (int q = 0; q + 1 < n; ++q) {
    const std::size_t hi = std::size_t{1} << (n - 1 - q), lo = hi >> 1;
    auto swap_bits = [&](std::size_t i) {
      const bool bh = i & hi, bl = i & lo;
      return bh == bl ? i : i ^ hi ^ lo;
    };
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (std::abs(rho(swap_bits(r), swap_bits(c)) - rho(r, c)) > tol) return false;
  }
  return true;
}

bool is_permutation_symmetric(const PureState& psi, double tol) {
  const int n = psi.n_qubits();
  const auto amps = psi.amplitudes();
  const std::size_t pivot = static_cast<std::size_t>(
      std::max_element(amps.begin(), amps.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); }) -
      amps.begin());
  for (int q = 0; q + 1 < n; ++q) {
    const std::size_t hi = std::size_t{1} << (n - 1 - q), lo = hi >> 1;
    auto swap_bits = [&](std::size_t i) {
      const bool bh = i & hi, bl = i & lo;
      return bh == bl ? i : i ^ hi ^ lo;
    };
    // A symmetric projector allows a global phase under the swap.
    const Complex phase = amps[swap_bits(pivot)] / amps[pivot];
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    for (std::size_t i = 0; i < amps.size(); ++i)
      if (std::abs(amps[swap_bits(i)] - phase * amps[i]) > tol) return false;
  }
  return true;
}

namespace {

GmProblem density_problem(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  std::size_t best = 0;
  for (std::size_t i = 1; i < rho.dimension(); ++i)
    if (m(i, i).real() > m(best, best).real()) best = i;
  return GmProblem{rho.n_qubits(),
                   [&m](const std::vector<Complex>& u, const std::vector<Complex>& v) {
                     Complex s = 0.0;
                     for (std::size_t r = 0; r < u.size(); ++r) {
                       if (u[r] == Complex{}) continue;
                       Complex row = 0.0;
                       for (std::size_t c = 0; c < v.size(); ++c) row += m(r, c) * v[c];
                       s += std::conj(u[r]) * row;
                     }
                     return s;
                   },
                   best};
}

GmProblem pure_problem(const PureState& psi) {
  const auto amps = psi.amplitudes();
  std::size_t best = 0;
  for (std::size_t i = 1; i < amps.size(); ++i)
    if (std::norm(amps[i]) > std::norm(amps[best])) best = i;
  return GmProblem{psi.n_qubits(),
                   [amps](const std::vector<Complex>& u, const std::vector<Complex>& v) {
                     Complex uu = 0.0, vv = 0.0;
                     for (std::size_t i = 0; i < amps.size(); ++i) {
                       uu += std::conj(u[i]) * amps[i];
                       vv += std::conj(amps[i]) * v[i];
                     }
                     return uu * vv;
                   },
                   best};
}

}  // namespace

double product_overlap(const DensityMatrix& rho, const ProductAnsatz& ansatz) {
  const auto phi = ansatz.state(rho.n_qubits());
  const std::vector<Complex> v(phi.amplitudes().begin(), phi.amplitudes().end());
  return density_problem(rho).form(v, v).real();
}

double product_overlap(const PureState& psi, const ProductAnsatz& ansatz) {
  return fidelity(ansatz.state(psi.n_qubits()), psi);
}

GmResult gm_lambda2(const DensityMatrix& rho, AnsatzMode mode, const OptimizerOptions& options) {
  if (mode == AnsatzMode::symmetric && !is_permutation_symmetric(rho)) {
    fail(ErrorCode::domain, "gm: symmetric ansatz requires a permutation-symmetric state");
  }
  return run_gm(density_problem(rho), mode, options);
}

GmResult gm_lambda2(const PureState& psi, AnsatzMode mode, const OptimizerOptions& options) {
  if (mode == AnsatzMode::symmetric && !is_permutation_symmetric(psi)) {
    fail(ErrorCode::domain, "gm: symmetric ansatz requires a permutation-symmetric state");
  }
  return run_gm(pure_problem(psi), mode, options);
}

double gm(const DensityMatrix& rho, const OptimizerOptions& options) {
  return gm_lambda2(rho, AnsatzMode::general, options).gm;
}

double gm(const PureState& psi, const OptimizerOptions& options) {
  return gm_lambda2(psi, AnsatzMode::general, options).gm;
}

}  // namespace qrta
