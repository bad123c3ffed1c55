#pragma once

// Dense complex linear algebra at qubit scale.
//
// Qubit 0 is the most significant bit of a basis index, so |abc> maps to
// index 4a + 2b + c.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qrta {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws on size mismatch or non-finite values.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  /// Largest entrywise |a_ij - conj(a_ji)|.
  double hermiticity_defect() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Normalized amplitude vector over n qubits.
class PureState {
 public:
  /// Validates length 2^n and unit norm within 1e-12.
  PureState(int n_qubits, std::vector<Complex> amplitudes);

  /// Rescales to unit norm; throws on a zero vector.
  static PureState normalized(int n_qubits, std::vector<Complex> amplitudes);
  static PureState basis(int n_qubits, std::uint64_t index);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix over n qubits.
class DensityMatrix {
 public:
  /// Full validation: Hermitian within 1e-12, trace 1 within 1e-12,
  /// smallest eigenvalue >= -1e-10.
  DensityMatrix(int n_qubits, ComplexMatrix matrix);

  /// Skips the eigenvalue check. For results of operations that preserve
  /// positivity (outer products, partial traces, convex mixtures).
  static DensityMatrix trusted(int n_qubits, ComplexMatrix matrix);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Complex operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

  double purity() const;

 private:
  struct TrustedTag {};
  DensityMatrix(int n_qubits, ComplexMatrix matrix, TrustedTag);

  int n_qubits_;
  ComplexMatrix matrix_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column i pairs with eigenvalues[i]
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep` (any order, duplicates ignored). Kept qubits
/// retain their relative significance in the result.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Cyclic complex Jacobi; input must be Hermitian within 1e-10.
EigenDecomposition hermitian_eig(const ComplexMatrix& h);

/// Entropy in bits of a spectrum; eigenvalues in [-1e-10, 0) count as 0,
/// anything more negative is rejected.
double spectrum_entropy(std::span<const double> eigenvalues);
double binary_entropy(double p);
double von_neumann_entropy(const DensityMatrix& rho);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

DensityMatrix outer(const PureState& psi);

/// |<a|b>|^2 for states of equal dimension.
double fidelity(const PureState& a, const PureState& b);

/// Applies U rho U^dagger.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& unitary);

/// 2^n for n in [0, 62].
std::size_t dimension_of(int n_qubits);

}  // namespace qrta
