#pragma once

// Derivative-free minimization for the small angle problems behind the
// discord and geometric-measure searches.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qrta::opt {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
  double initial_step = 0.2;
  double ftol = 1e-10;  // spread of objective values across the simplex
  double xtol = 1e-7;   // simplex diameter (max-norm)
  std::size_t max_evals = 2000;
  int restarts = 1;     // fresh simplex around the incumbent after convergence
};

struct Minimum {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

Minimum nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options = {});

/// Point `index` of the Halton sequence in [0,1)^dims (bases 2, 3, 5, ...).
/// Deterministic substitute for random start points.
std::vector<double> halton_point(std::size_t index, std::size_t dims);

/// Evaluation cap shared across the starts of one multistart search.
/// A cap of 0 means unlimited.
class EvalBudget {
 public:
  explicit EvalBudget(std::size_t cap) : cap_(cap) {}

  std::size_t grant(std::size_t wanted) const;
  void spend(std::size_t used) { used_ += used; }
  bool exhausted() const { return cap_ != 0 && used_ >= cap_; }
  std::size_t used() const { return used_; }

 private:
  std::size_t cap_;
  std::size_t used_ = 0;
};

}  // namespace qrta::opt
