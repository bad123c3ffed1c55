#include "qrta/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qrta/error.hpp"
#include "qrta/grover.hpp"
#include "qrta/hhl.hpp"
#include "qrta/optimize.hpp"
#include "qrta/oracle.hpp"

namespace qrta::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSandwichSlack = 1e-9;

struct Collector {
  std::vector<Check>& out;
  std::string suite;

  void near(const std::string& what, double expected, double got, double tol, std::string note = {}) {
    const bool ok = std::isfinite(got) && std::abs(got - expected) <= tol;
    out.push_back({suite + "/" + what, expected, got, tol, ok, false, std::move(note)});
  }
  // got <= bound + tol
  void at_most(const std::string& what, double bound, double got, double tol, std::string note = {}) {
    const bool ok = std::isfinite(got) && got <= bound + tol;
    out.push_back({suite + "/" + what, bound, got, tol, ok, false, std::move(note)});
  }
  void at_least(const std::string& what, double bound, double got, double tol, std::string note = {}) {
    const bool ok = std::isfinite(got) && got >= bound - tol;
    out.push_back({suite + "/" + what, bound, got, tol, ok, false, std::move(note)});
  }
  void info(const std::string& what, double expected, double got, double tol, std::string note) {
    out.push_back({suite + "/" + what, expected, got, tol, true, true, std::move(note)});
  }
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<grover::LabeledState> grover_psis() {
  auto trace = grover::trace_states({});
  trace.states.erase(trace.states.begin());
  return trace.states;
}

std::vector<double> sample_b0(int points) {
  std::vector<double> out;
  for (int k = 0; k < points; ++k) out.push_back(static_cast<double>(k) / (points - 1));
  return out;
}

double circular_distance(double a, double b) {
  const double d = std::remainder(a - b, 2.0 * kPi);
  return std::abs(d);
}

// Distance of a symmetric-ansatz argmax to (alpha_p, beta_p) under
// (a, b) ~ (pi - a, b + pi) and, for real states, (a, b) ~ (a, -b).
double ansatz_distance(double alpha, double beta, double alpha_p, double beta_p) {
  double best = INFINITY;
  for (const auto& [a, b] : {std::pair{alpha, beta}, std::pair{kPi - alpha, beta + kPi},
                             std::pair{alpha, -beta}, std::pair{kPi - alpha, kPi - beta}})
    best = std::min(best, std::max(std::abs(a - alpha_p), circular_distance(b, beta_p)));
  return best;
}

ComplexMatrix local_unitary(int n, std::span<const double> u) {
  ComplexMatrix full = ComplexMatrix::identity(1);
  for (int q = 0; q < n; ++q) {
    const double theta = kPi * u[3 * q];
    const double phi = 2.0 * kPi * u[3 * q + 1];
    const double lambda = 2.0 * kPi * u[3 * q + 2];
    const ComplexMatrix phase(2, 2, {1.0, 0.0, 0.0, std::exp(Complex{0.0, lambda})});
    full = kron(full, bloch_unitary(theta, phi) * phase);
  }
  return full;
}

struct NamedState {
  std::string label;
  DensityMatrix rho;
};

std::vector<NamedState> hhl_states(double b0) {
  const auto input = hhl::HhlInput::from_b0(b0);
  const std::string tag = "(b0=" + fmt(b0) + ")";
  return {{"hhl_rho1" + tag, outer(hhl::stage1_state(input))},
          {"hhl_rho2" + tag, hhl::stage2_state(hhl::stage2_params(input))},
          {"hhl_rho3" + tag, hhl::stage3_state(hhl::stage3_params(input))}};
}

// ------------------------------------------------------------------ tables

void run_tables(std::vector<Check>& out, const OptimizerOptions& options) {
  Collector c{out, "tables"};
  const auto psis = grover_psis();
  const std::array<double, 4> coherence{std::sqrt(14.0) / 4, 7 * std::sqrt(2.0) / 16, 7 * std::sqrt(2.0) / 16,
                                        std::sqrt(434.0) / 64};
  const std::array<double, 4> discord_p{0.25, (4 + std::sqrt(13.0)) / 8, (8 + std::sqrt(37.0)) / 16,
                                        (16 + std::sqrt(229.0)) / 32};
  const std::array<double, 4> gm_table{0.56, 0.11, 0.24, 0.05};

  for (std::size_t k = 0; k < 4; ++k)
    c.near("coherence " + psis[k].label, coherence[k], coherence_frobenius(outer(psis[k].state)), 1e-9);
  for (std::size_t k = 0; k < 4; ++k)
    c.near("discord A|BC " + psis[k].label, binary_entropy(discord_p[k]),
           discord(outer(psis[k].state), Bipartition(3, {0}), options), 1e-6);
  for (std::size_t k = 0; k < 4; ++k)
    c.near("gm " + psis[k].label, gm_table[k], gm(psis[k].state, options), 0.01);
}

// ------------------------------------------------------------------ lemmas

void run_lemmas(std::vector<Check>& out, const OptimizerOptions& options) {
  Collector c{out, "lemmas"};
  const auto psis = grover_psis();

  for (const auto& [label, psi] : psis) {
    const auto rho = outer(psi);
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& split : Bipartition::all(3)) {
      const double d = discord(rho, split, options);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    c.near("discord six-way spread " + label, 0.0, hi - lo, 1e-6);
  }

  const std::array<double, 4> lambda2{0.6759, 0.9266, 0.8481, 0.9651};
  const std::array<double, 4> alpha_p{0.59, 1.28, 1.43, 1.64};
  const std::array<double, 4> beta_p{0.0, 0.0, kPi, 0.0};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto r = gm_lambda2(psis[k].state, AnsatzMode::symmetric, options);
    c.near("gm lambda2 " + psis[k].label, lambda2[k], r.lambda2, 1e-3);
    const auto [a, b] = r.argmax.qubit(0);
    c.near("gm argmax " + psis[k].label, 0.0, ansatz_distance(a, b, alpha_p[k], beta_p[k]), 0.02,
           "alpha=" + fmt(a) + " beta=" + fmt(b));
  }

  const auto points = sample_b0(21);
  double worst1 = 0.0, worst3 = 0.0, at1 = 0.0, at3 = 0.0;
  for (const double b0 : points) {
    const auto input = hhl::HhlInput::from_b0(b0);
    const double e1 = std::abs(gm(hhl::stage1_state(input), options) - hhl::stage1_gm_closed_form(input));
    if (e1 >= worst1) worst1 = e1, at1 = b0;
    const auto p3 = hhl::stage3_params(input);
    const double e3 = std::abs(gm(hhl::stage3_state(p3), options) - hhl::stage3_gm_closed_form(p3));
    if (e3 >= worst3) worst3 = e3, at3 = b0;
  }
  c.near("hhl stage1 closed form, 21 points", 0.0, worst1, 1e-4, "worst at b0=" + fmt(at1));
  c.near("hhl stage3 closed form, 21 points", 0.0, worst3, 1e-6, "worst at b0=" + fmt(at3));

  for (const double b0 : points) {
    const auto params = hhl::stage2_params(hhl::HhlInput::from_b0(b0));
    const auto bound = hhl::stage2_single_angle_bound(params);
    const double numeric = gm_lambda2(hhl::stage2_state(params), AnsatzMode::general, options).lambda2;
    const std::string tag = " b0=" + fmt(b0);
    c.at_least("hhl stage2 optimum >= single-angle bound" + tag, bound.lambda2, numeric, 1e-9);

    // beta enters the symmetric overlap of the rotated state only through 3 beta.
    const auto rotated = hhl::stage2_rotated_state(params);
    const auto sym = gm_lambda2(rotated, AnsatzMode::symmetric, options);
    const auto [alpha, beta] = sym.argmax.qubit(0);
    double on_axis = 0.0;
    for (const double b : {0.0, kPi})
      on_axis = std::max(on_axis, product_overlap(rotated, ProductAnsatz{AnsatzMode::symmetric, {{alpha, b}}}));
    const bool confirmed = on_axis >= sym.lambda2 - 1e-9;
    const std::string note = "alpha*=" + fmt(alpha) + " beta*=" + fmt(beta) +
                             (confirmed ? " (beta in {0,pi} attains the optimum)" : " (beta* off {0,pi})");
    if (confirmed)
      c.near("hhl stage2 agreement" + tag, bound.lambda2, numeric, 1e-4, note);
    else
      c.info("hhl stage2 agreement" + tag, bound.lambda2, numeric, 1e-4, note);
  }
}

// ----------------------------------------------------------------- oracles

void run_oracles(std::vector<Check>& out, const OptimizerOptions& options) {
  Collector c{out, "oracles"};
  for (const auto& [label, psi] : grover_psis()) {
    const auto rho = outer(psi);
    const double lambda2 = gm_lambda2(rho, AnsatzMode::general, options).lambda2;
    c.at_most("gm symmetric grid <= optimizer " + label, lambda2,
              oracle::gm_grid_oracle(rho, oracle::kDefaultAngleGrid, true), kSandwichSlack);
    c.at_most("gm general grid <= optimizer " + label, lambda2, oracle::gm_grid_oracle(rho, {16}, false),
              kSandwichSlack);
    c.at_least("coherence grid >= optimizer " + label, coherence_frobenius(rho), oracle::coherence_grid_oracle(rho),
               kSandwichSlack);
    for (int q = 0; q < 3; ++q) {
      const Bipartition split(3, {q});
      c.at_least("discord grid >= optimizer " + split.label() + " " + label, discord(rho, split, options),
                 oracle::discord_grid_oracle(rho, split), kSandwichSlack);
    }
  }
  for (const double b0 : sample_b0(21)) {
    for (const auto& [label, rho] : hhl_states(b0)) {
      const double lambda2 = gm_lambda2(rho, AnsatzMode::general, options).lambda2;
      c.at_most("gm general grid <= optimizer " + label, lambda2, oracle::gm_grid_oracle(rho, {16}, false),
                kSandwichSlack);
    }
  }
}

// -------------------------------------------------------------- invariants

void run_invariants(std::vector<Check>& out, const OptimizerOptions& options) {
  Collector c{out, "invariants"};

  for (int n = 1; n <= 10; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const int iterations = std::max(1, static_cast<int>(std::floor(kPi / 4 * std::sqrt(static_cast<double>(dim)))));
    const auto trace = grover::trace_states({n, dim - 1, iterations});
    double worst = 0.0;
    for (const auto& s : trace.states) {
      double norm = 0.0;
      for (const auto& a : s.state.amplitudes()) norm += std::norm(a);
      worst = std::max(worst, std::abs(norm - 1.0));
    }
    c.near("grover normalization n=" + std::to_string(n), 0.0, worst, 1e-12);
  }

  const auto sweep = sample_b0(201);
  std::array<double, 3> herm{}, trace{}, neg{};
  double abc = 0.0, x = 0.0, y = 0.0;
  for (const double b0 : sweep) {
    const auto states = hhl_states(b0);
    for (std::size_t s = 0; s < 3; ++s) {
      const auto& m = states[s].rho.matrix();
      herm[s] = std::max(herm[s], m.hermiticity_defect());
      trace[s] = std::max(trace[s], std::abs(m.trace() - Complex{1.0}));
      neg[s] = std::max(neg[s], -hermitian_eig(m).eigenvalues.back());
    }
    const auto input = hhl::HhlInput::from_b0(b0);
    const auto p2 = hhl::stage2_params(input);
    const auto p3 = hhl::stage3_params(input);
    abc = std::max(abc, std::abs(p3.A * p3.A + p3.B * p3.B + p3.C1 * p3.C1 + p3.C2 * p3.C2 - 1.0));
    x = std::max(x, std::abs(p2.x1 * p2.x1 + p2.x2 * p2.x2 - 1.0));
    y = std::max(y, std::abs(p3.y1 * p3.y1 + p3.y2 * p3.y2 - 1.0));
  }
  for (std::size_t s = 0; s < 3; ++s) {
    const std::string stage = "hhl stage" + std::to_string(s + 1) + " ";
    c.near(stage + "hermiticity, 201 points", 0.0, herm[s], 1e-12);
    c.near(stage + "unit trace, 201 points", 0.0, trace[s], 1e-12);
    c.at_most(stage + "min eigenvalue >= -1e-10, 201 points", 0.0, neg[s], 1e-10);
  }
  c.near("A^2+B^2+C1^2+C2^2=1, 201 points", 0.0, abc, 1e-10);
  c.near("x1^2+x2^2=1, 201 points", 0.0, x, 1e-10);
  c.near("y1^2+y2^2=1, 201 points", 0.0, y, 1e-10);

  std::vector<NamedState> states;
  for (const auto& [label, psi] : grover_psis()) states.push_back({label, outer(psi)});
  for (auto& s : hhl_states(0.6)) states.push_back(std::move(s));
  std::size_t draw = 1;
  for (const auto& [label, rho] : states) {
    const double reference = gm(rho, options);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const auto u = opt::halton_point(draw++, 3 * static_cast<std::size_t>(rho.n_qubits()));
      worst = std::max(worst, std::abs(gm(conjugate(rho, local_unitary(rho.n_qubits(), u)), options) - reference));
    }
    c.near("gm local-unitary invariance " + label, 0.0, worst, 1e-5, "10 local unitaries");
  }

  const auto psis = grover_psis();
  for (const auto& [label, psi] : psis) {
    const double sym = gm_lambda2(psi, AnsatzMode::symmetric, options).lambda2;
    const double gen = gm_lambda2(psi, AnsatzMode::general, options).lambda2;
    c.near("gm symmetric vs general " + label, gen, sym, 1e-6);
  }

  for (std::size_t k = 0; k < 4; ++k) {
    const auto u = opt::halton_point(100 + k, 9);
    const ProductAnsatz ansatz{AnsatzMode::general,
                               {{kPi * u[0], 2 * kPi * u[1]}, {kPi * u[2], 2 * kPi * u[3]}, {kPi * u[4], 2 * kPi * u[5]}}};
    const auto rho = outer(k == 0 ? PureState::basis(3, 0) : ansatz.state(3));
    double worst = 0.0;
    for (const auto& split : Bipartition::all(3)) worst = std::max(worst, std::abs(discord(rho, split, options)));
    c.at_most("discord of product state #" + std::to_string(k), 0.0, worst, 1e-6, "max over six splits");
  }
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "tables") return Suite::tables;
  if (name == "lemmas") return Suite::lemmas;
  if (name == "oracles") return Suite::oracles;
  if (name == "invariants") return Suite::invariants;
  if (name == "all") return Suite::all;
  fail(ErrorCode::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::tables: return "tables";
    case Suite::lemmas: return "lemmas";
    case Suite::oracles: return "oracles";
    case Suite::invariants: return "invariants";
    case Suite::all: return "all";
  }
  return "";
}

bool Summary::passed() const { return failures() == 0; }

std::size_t Summary::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

Summary run(Suite suite, const OptimizerOptions& options) {
  Summary summary;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::tables) run_tables(summary.checks, options);
  if (all || suite == Suite::lemmas) run_lemmas(summary.checks, options);
  if (all || suite == Suite::oracles) run_oracles(summary.checks, options);
  if (all || suite == Suite::invariants) run_invariants(summary.checks, options);
  return summary;
}

std::string render(const Summary& summary) {
  std::string out;
  std::size_t info = 0;
  for (const auto& c : summary.checks) {
    const char* tag = c.informational ? "INFO" : c.passed ? "PASS" : "FAIL";
    if (c.informational) ++info;
    out += std::string(tag) + " " + c.name + " expected=" + fmt(c.expected) + " got=" + fmt(c.got) +
           " tol=" + fmt(c.tolerance);
    if (!c.note.empty()) out += " [" + c.note + "]";
    out += '\n';
  }
  const std::size_t failed = summary.failures();
  out += std::to_string(summary.checks.size() - failed - info) + " passed, " + std::to_string(failed) +
         " failed, " + std::to_string(info) + " reported\n";
  return out;
}

}  // namespace qrta::verify
