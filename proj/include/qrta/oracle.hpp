#pragma once

// Brute-force bounds for the optimized quantities. These share nothing with
// the measures module beyond the core linear algebra, so a bug in one path
// shows up as a bracket violation.

#include <cstddef>

#include "qrta/linalg.hpp"
#include "qrta/measures.hpp"

namespace qrta::oracle {

/// Points per angle dimension (or per simplex coordinate for coherence).
/// Closed-interval axes use lo + k (hi - lo) / r for k = 0..r, periodic axes
/// k = 0..r-1, so doubling r refines the previous grid.
struct GridSpec {
  std::size_t resolution;

  void validate() const;
};

inline constexpr GridSpec kDefaultAngleGrid{128};
inline constexpr GridSpec kDefaultSimplexGrid{16};

/// Upper bound on the Frobenius coherence: simplex grid over diagonal
/// probability vectors, then projected-gradient descent from the best point.
double coherence_grid_oracle(const DensityMatrix& rho, const GridSpec& spec = kDefaultSimplexGrid);

/// Lower bound on max <phi|rho|phi> over product states. Symmetric: full
/// (alpha, beta) grid. General: grid over all qubits but the last, whose
/// factor is maximized exactly (top eigenvalue of its 2x2 block).
double gm_grid_oracle(const DensityMatrix& rho, const GridSpec& spec, bool symmetric);

/// Upper bound on discord for a single measured qubit: Bloch-angle grid of
/// projective bases.
double discord_grid_oracle(const DensityMatrix& rho, const Bipartition& split,
                           const GridSpec& spec = kDefaultAngleGrid);

}  // namespace qrta::oracle
