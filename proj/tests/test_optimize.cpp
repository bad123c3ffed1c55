#include <doctest.h>

#include <cmath>

#include "qrta/optimize.hpp"

using namespace qrta::opt;

TEST_CASE("nelder-mead on a quadratic bowl") {
  const Objective f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 10.0 * (x[1] + 0.5) * (x[1] + 0.5);
  };
  const auto m = nelder_mead(f, {0.0, 0.0});
  CHECK(m.converged);
  CHECK(m.x[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(m.x[1] == doctest::Approx(-0.5).epsilon(1e-5));
  CHECK(m.value < 1e-9);
  CHECK(m.evaluations <= 2 * 2000);
}

TEST_CASE("nelder-mead on rosenbrock") {
  const Objective f = [](std::span<const double> x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  NelderMeadOptions o;
  o.max_evals = 5000;
  const auto m = nelder_mead(f, {-1.2, 1.0}, o);
  CHECK(m.x[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(m.x[1] == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("evaluation cap is respected") {
  std::size_t calls = 0;
  const Objective f = [&](std::span<const double> x) {
    ++calls;
    return std::sin(3 * x[0]) + std::cos(5 * x[1]) + x[2] * x[2];
  };
  NelderMeadOptions o;
  o.max_evals = 40;
  o.restarts = 0;
  const auto m = nelder_mead(f, {0.1, 0.2, 0.3}, o);
  CHECK(calls <= 40);
  CHECK(m.evaluations == calls);
}

TEST_CASE("deterministic") {
  const Objective f = [](std::span<const double> x) { return std::sin(x[0]) * std::cos(x[1]) + 0.1 * x[0] * x[0]; };
  const auto a = nelder_mead(f, {0.3, 0.4});
  const auto b = nelder_mead(f, {0.3, 0.4});
  CHECK(a.x == b.x);
  CHECK(a.value == b.value);
}

TEST_CASE("halton points") {
  const auto p1 = halton_point(0, 2);
  CHECK(p1[0] == doctest::Approx(0.5));
  CHECK(p1[1] == doctest::Approx(1.0 / 3));
  const auto p2 = halton_point(1, 3);
  CHECK(p2[0] == doctest::Approx(0.25));
  CHECK(p2[1] == doctest::Approx(2.0 / 3));
  CHECK(p2[2] == doctest::Approx(0.4));
  for (std::size_t i = 0; i < 200; ++i)
    for (const double v : halton_point(i, 12)) {
      CHECK(v >= 0.0);
      CHECK(v < 1.0);
    }
}

TEST_CASE("eval budget") {
  EvalBudget unlimited(0);
  CHECK(unlimited.grant(123) == 123);
  unlimited.spend(1000000);
  CHECK_FALSE(unlimited.exhausted());

  EvalBudget cap(100);
  CHECK(cap.grant(60) == 60);
  cap.spend(60);
  CHECK(cap.grant(60) == 40);
  cap.spend(40);
  CHECK(cap.exhausted());
  CHECK(cap.used() == 100);
}

TEST_CASE("cap holds when an iteration needs two evaluations") {
  for (std::size_t cap = 2; cap < 60; ++cap) {
    std::size_t calls = 0;
    const Objective f = [&](std::span<const double> x) {
      ++calls;
      return (x[0] - 3) * (x[0] - 3) + (x[1] + 2) * (x[1] + 2);
    };
    NelderMeadOptions o;
    o.max_evals = cap;
    nelder_mead(f, {0.0, 0.0}, o);
    CHECK(calls <= cap);
  }
}
