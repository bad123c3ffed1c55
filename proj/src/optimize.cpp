#include "qrta/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qrta::opt {

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

}  // namespace

Minimum nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  Minimum out;
  auto eval = [&](const std::vector<double>& x) {
    ++out.evaluations;
    return f(x);
  };

  Vertex best{x0, eval(x0)};
  if (n == 0 || options.max_evals <= 1) {
    out.x = std::move(best.x);
    out.value = best.f;
    return out;
  }

  double step = options.initial_step;
  for (int round = 0; round <= options.restarts; ++round) {
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back(best);
    for (std::size_t i = 0; i < n && out.evaluations < options.max_evals; ++i) {
      auto x = best.x;
      x[i] += step;
      simplex.push_back({x, eval(x)});
    }
    if (simplex.size() != n + 1) break;

    bool converged = false;
    std::vector<double> centroid(n), trial(n);
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

    while (out.evaluations < options.max_evals) {
      std::sort(simplex.begin(), simplex.end(), by_value);
      double diameter = 0.0;
      for (std::size_t v = 1; v <= n; ++v)
        for (std::size_t i = 0; i < n; ++i)
          diameter = std::max(diameter, std::abs(simplex[v].x[i] - simplex[0].x[i]));
      if (simplex[n].f - simplex[0].f <= options.ftol && diameter <= options.xtol) {
        converged = true;
        break;
      }

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(n);

      auto along = [&](double t) {
        for (std::size_t i = 0; i < n; ++i) trial[i] = centroid[i] + t * (simplex[n].x[i] - centroid[i]);
        if (out.evaluations >= options.max_evals) return Vertex{trial, INFINITY};
        return Vertex{trial, eval(trial)};
      };

      Vertex reflected = along(-1.0);
      if (reflected.f < simplex[0].f) {
        Vertex expanded = along(-2.0);
        simplex[n] = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
        continue;
      }
      if (reflected.f < simplex[n - 1].f) {
        simplex[n] = std::move(reflected);
        continue;
      }
      const bool outside = reflected.f < simplex[n].f;
      Vertex contracted = along(outside ? -0.5 : 0.5);
      if (contracted.f < (outside ? reflected.f : simplex[n].f)) {
        simplex[n] = std::move(contracted);
        continue;
      }
      // Shrink toward the best vertex.
      for (std::size_t v = 1; v <= n && out.evaluations < options.max_evals; ++v) {
        for (std::size_t i = 0; i < n; ++i) simplex[v].x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
        simplex[v].f = eval(simplex[v].x);
      }
    }

    const auto it = std::min_element(simplex.begin(), simplex.end(), by_value);
    if (it->f <= best.f) best = *it;
    out.converged = converged;
    if (!converged) break;
    step = std::max(options.xtol * 100.0, 1e-4);
  }

  out.x = std::move(best.x);
  out.value = best.f;
  return out;
}

std::vector<double> halton_point(std::size_t index, std::size_t dims) {
  static constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                         41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  std::vector<double> out(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    const unsigned base = kPrimes[d % std::size(kPrimes)];
    double f = 1.0, r = 0.0;
    for (std::size_t i = index + 1; i > 0; i /= base) {
      f /= base;
      r += f * static_cast<double>(i % base);
    }
    out[d] = r;
  }
  return out;
}

std::size_t EvalBudget::grant(std::size_t wanted) const {
  if (cap_ == 0) return wanted;
  return used_ >= cap_ ? 0 : std::min(wanted, cap_ - used_);
}

}  // namespace qrta::opt
