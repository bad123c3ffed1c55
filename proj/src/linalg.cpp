#include "qrta/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qrta/error.hpp"

namespace qrta {

namespace {

constexpr double kStateNormTol = 1e-12;
constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kEigInputTol = 1e-10;
constexpr double kEntropyFloor = 1e-15;
constexpr int kMaxJacobiSweeps = 100;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::invalid_argument, std::string(op) + ": dimension mismatch");
  }
}

}  // namespace

std::size_t dimension_of(int n_qubits) {
  if (n_qubits < 0 || n_qubits > 62) {
    fail(ErrorCode::invalid_argument, "qubit count out of range: " + std::to_string(n_qubits));
  }
  return std::size_t{1} << n_qubits;
}

// ---------------------------------------------------------------- matrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    fail(ErrorCode::invalid_argument, "matrix entry count does not match rows x cols");
  }
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    fail(ErrorCode::invalid_argument, "matrix has non-finite entries");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::invalid_argument, "matrix product: dimension mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

double ComplexMatrix::hermiticity_defect() const {
  if (!square()) return INFINITY;
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

// ------------------------------------------------------------ pure state

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits_ < 0 || n_qubits_ > 30) fail(ErrorCode::invalid_argument, "pure state: qubit count out of range");
  if (amplitudes_.size() != dimension_of(n_qubits_)) {
    fail(ErrorCode::invalid_argument, "pure state: expected 2^n amplitudes");
  }
  if (!std::all_of(amplitudes_.begin(), amplitudes_.end(), finite)) {
    fail(ErrorCode::invalid_argument, "pure state: non-finite amplitude");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > kStateNormTol) {
    fail(ErrorCode::domain, "pure state: amplitudes not normalized (norm^2 = " + std::to_string(norm2) + ")");
  }
}

PureState PureState::normalized(int n_qubits, std::vector<Complex> amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) fail(ErrorCode::domain, "pure state: cannot normalize zero vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amplitudes) a *= inv;
  return PureState(n_qubits, std::move(amplitudes));
}

PureState PureState::basis(int n_qubits, std::uint64_t index) {
  std::vector<Complex> amps(dimension_of(n_qubits));
  if (index >= amps.size()) fail(ErrorCode::invalid_argument, "basis index out of range");
  amps[index] = 1.0;
  return PureState(n_qubits, std::move(amps));
}

// -------------------------------------------------------- density matrix

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix matrix, TrustedTag)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  if (!matrix_.square() || matrix_.rows() != dimension_of(n_qubits_)) {
    fail(ErrorCode::invalid_argument, "density matrix: expected 2^n x 2^n matrix");
  }
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix matrix)
    : DensityMatrix(n_qubits, std::move(matrix), TrustedTag{}) {
  if (matrix_.hermiticity_defect() > kHermitianTol) fail(ErrorCode::domain, "density matrix: not Hermitian");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0}) > kTraceTol) fail(ErrorCode::domain, "density matrix: trace is not 1");
  const auto eig = hermitian_eig(matrix_);
  if (eig.eigenvalues.back() < -kPsdTol) fail(ErrorCode::domain, "density matrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::trusted(int n_qubits, ComplexMatrix matrix) {
  return DensityMatrix(n_qubits, std::move(matrix), TrustedTag{});
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& z : matrix_.entries()) s += std::norm(z);
  return s;
}

// -------------------------------------------------------------- products

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::trusted(a.n_qubits() + b.n_qubits(), kron(a.matrix(), b.matrix()));
}

DensityMatrix outer(const PureState& psi) {
  const std::size_t d = psi.dimension();
  ComplexMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = psi[r] * std::conj(psi[c]);
  return DensityMatrix::trusted(psi.n_qubits(), std::move(m));
}

double fidelity(const PureState& a, const PureState& b) {
  if (a.dimension() != b.dimension()) fail(ErrorCode::invalid_argument, "fidelity: dimension mismatch");
  Complex ip = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) ip += std::conj(a[i]) * b[i];
  return std::norm(ip);
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& unitary) {
  if (!unitary.square() || unitary.rows() != rho.dimension()) {
    fail(ErrorCode::invalid_argument, "conjugate: unitary dimension mismatch");
  }
  const ComplexMatrix check = unitary * unitary.adjoint();
  if (frobenius_distance(check, ComplexMatrix::identity(check.rows())) > 1e-10) {
    fail(ErrorCode::domain, "conjugate: matrix is not unitary");
  }
  return DensityMatrix::trusted(rho.n_qubits(), unitary * rho.matrix() * unitary.adjoint());
}

// --------------------------------------------------------- partial trace

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.n_qubits();
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) fail(ErrorCode::invalid_argument, "partial trace: nothing kept");
  if (kept.front() < 0 || kept.back() >= n) fail(ErrorCode::invalid_argument, "partial trace: qubit index out of range");

  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

  // Scatter a compact index over the given qubits into a full basis index.
  auto offsets = [n](const std::vector<int>& qubits) {
    const std::size_t count = std::size_t{1} << qubits.size();
    std::vector<std::size_t> out(count);
    const int k = static_cast<int>(qubits.size());
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t full = 0;
      for (int j = 0; j < k; ++j)
        if ((i >> (k - 1 - j)) & 1u) full |= std::size_t{1} << (n - 1 - qubits[j]);
      out[i] = full;
    }
    return out;
  };
  const auto ko = offsets(kept);
  const auto to = offsets(traced);

  ComplexMatrix out(ko.size(), ko.size());
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t i = 0; i < ko.size(); ++i)
    for (std::size_t j = 0; j < ko.size(); ++j) {
      Complex s = 0.0;
      for (const auto t : to) s += m(ko[i] | t, ko[j] | t);
      out(i, j) = s;
    }
  return DensityMatrix::trusted(static_cast<int>(kept.size()), std::move(out));
}

// ---------------------------------------------------------- eigensolver

EigenDecomposition hermitian_eig(const ComplexMatrix& h) {
  if (!h.square()) fail(ErrorCode::invalid_argument, "hermitian_eig: matrix is not square");
  if (h.hermiticity_defect() > kEigInputTol) fail(ErrorCode::invalid_argument, "hermitian_eig: matrix is not Hermitian");

  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, h.frobenius_norm());

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < kMaxJacobiSweeps && off_norm() > 1e-14 * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g < 1e-300) continue;
        // Phase away arg(a_pq), then a real rotation zeroes the pair.
        const Complex phase_conj = std::conj(apq / g);
        const double theta = 0.5 * std::atan2(2.0 * g, a(q, q).real() - a(p, p).real());
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const Complex upp = c, upq = s, uqp = -s * phase_conj, uqq = c * phase_conj;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.eigenvalues[i] = a(order[i], order[i]).real();
    for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, i) = v(k, order[i]);
  }
  return out;
}

// -------------------------------------------------------------- entropy

double spectrum_entropy(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (const double lambda : eigenvalues) {
    if (lambda < -kPsdTol) fail(ErrorCode::domain, "entropy: negative eigenvalue " + std::to_string(lambda));
    if (lambda > kEntropyFloor) s -= lambda * std::log2(lambda);
  }
  return std::max(0.0, s);
}

double binary_entropy(double p) {
  const double q[2] = {p, 1.0 - p};
  return spectrum_entropy(q);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  // A purity this close to 1 bounds the entropy below 1e-12 bits.
  if (1.0 - rho.purity() < 1e-14) return 0.0;
  return spectrum_entropy(hermitian_eig(rho.matrix()).eigenvalues);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  double s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) s += std::norm(ea[i] - eb[i]);
  return std::sqrt(s);
}

}  // namespace qrta
