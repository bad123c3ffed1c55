#pragma once

// Resource measures on small multi-qubit states: Frobenius coherence,
// quantum discord over projective measurements, and the geometric measure
// of entanglement.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrta/linalg.hpp"

namespace qrta {

struct OptimizerOptions {
  /// Cap on objective evaluations per optimization; 0 means no cap.
  std::size_t eval_budget = 0;
};

/// Split of the qubits into a measured side and the rest. Labels use
/// letters A, B, C, ... for qubits 0, 1, 2, ... and read "measured|rest".
class Bipartition {
 public:
  Bipartition(int n_qubits, std::vector<int> measured);

  static Bipartition parse(int n_qubits, std::string_view label);
  /// All splits with a nonempty measured side and a nonempty rest.
  static std::vector<Bipartition> all(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<int>& measured() const noexcept { return measured_; }
  const std::vector<int>& rest() const noexcept { return rest_; }
  std::size_t measured_dimension() const noexcept { return std::size_t{1} << measured_.size(); }
  std::string label() const;

 private:
  int n_qubits_;
  std::vector<int> measured_;
  std::vector<int> rest_;
};

/// Complete set of orthogonal projectors on the measured subsystem.
class MeasurementBasis {
 public:
  explicit MeasurementBasis(std::vector<ComplexMatrix> projectors);

  static MeasurementBasis computational(std::size_t dimension);
  /// Rank-1 projectors onto the columns of a unitary.
  static MeasurementBasis from_unitary(const ComplexMatrix& unitary);

  std::size_t dimension() const noexcept { return projectors_.front().rows(); }
  const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }
  bool rank_one() const;

 private:
  std::vector<ComplexMatrix> projectors_;
};

// ------------------------------------------------------------- coherence

/// min over diagonal states delta of ||rho - delta||_F; attained at
/// delta = diag(rho), so this is the off-diagonal Frobenius norm.
double coherence_frobenius(const DensityMatrix& rho);

// --------------------------------------------------------------- discord

double mutual_information(const DensityMatrix& rho, const Bipartition& split);

/// sum_a p_a S(rho_rest|a) for the given measurement on split.measured().
/// Outcomes with p_a <= 1e-14 contribute nothing.
double conditional_entropy_after_measurement(const DensityMatrix& rho, const Bipartition& split,
                                             const MeasurementBasis& basis);

struct DiscordResult {
  double value;                    // min conditional entropy + S(measured) - S(rho)
  double min_conditional_entropy;
  MeasurementBasis basis;          // minimizing rank-1 basis
  std::size_t evaluations;
};

DiscordResult discord_search(const DensityMatrix& rho, const Bipartition& split,
                             const OptimizerOptions& options = {});
double discord(const DensityMatrix& rho, const Bipartition& split, const OptimizerOptions& options = {});

/// Unitary on `n_qubits` qubits built from d(d-1)/2 complex Givens
/// rotations; takes d(d-1) angles (theta, phi pairs).
ComplexMatrix givens_unitary(std::size_t dimension, std::span<const double> angles);
/// [[cos t/2, -e^{-i p} sin t/2], [e^{i p} sin t/2, cos t/2]].
ComplexMatrix bloch_unitary(double theta, double phi);

// ------------------------------------------------------ geometric measure

enum class AnsatzMode { symmetric, general };

/// (cos a|0> + e^{ib} sin a|1>) per qubit; symmetric mode holds one pair
/// shared by every qubit.
struct ProductAnsatz {
  AnsatzMode mode = AnsatzMode::general;
  std::vector<std::pair<double, double>> angles;  // (alpha, beta)

  PureState state(int n_qubits) const;
  std::pair<double, double> qubit(int q) const { return angles[mode == AnsatzMode::symmetric ? 0 : q]; }
};

struct GmResult {
  double lambda2;  // max overlap <phi|rho|phi> over product states
  double gm;       // -log2(lambda2)
  ProductAnsatz argmax;
  std::size_t evaluations;
};

/// Wraps (alpha, beta) into alpha in [0, pi], beta in [0, 2 pi); the state
/// changes by a global phase at most.
std::pair<double, double> normalize_angles(double alpha, double beta);

bool is_permutation_symmetric(const DensityMatrix& rho, double tol = 1e-10);
bool is_permutation_symmetric(const PureState& psi, double tol = 1e-10);

double product_overlap(const DensityMatrix& rho, const ProductAnsatz& ansatz);
double product_overlap(const PureState& psi, const ProductAnsatz& ansatz);

/// Symmetric mode throws on states that are not permutation symmetric.
GmResult gm_lambda2(const DensityMatrix& rho, AnsatzMode mode, const OptimizerOptions& options = {});
GmResult gm_lambda2(const PureState& psi, AnsatzMode mode, const OptimizerOptions& options = {});

/// -2 log2 Lambda = -log2 Lambda^2, general ansatz.
double gm(const DensityMatrix& rho, const OptimizerOptions& options = {});
double gm(const PureState& psi, const OptimizerOptions& options = {});

}  // namespace qrta
