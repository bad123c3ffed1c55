#include "qrta/hhl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qrta/error.hpp"

namespace qrta::hhl {

namespace {

constexpr double kRadicandTol = 1e-12;

double checked_sqrt(double radicand, const char* what) {
  if (radicand < -kRadicandTol) {
    fail(ErrorCode::internal, std::string("hhl: negative radicand in ") + what);
  }
  return std::sqrt(std::max(0.0, radicand));
}

PureState make_state(std::vector<Complex> amps) { return PureState(3, std::move(amps)); }

}  // namespace

HhlInput HhlInput::make(double b0, double b1, double tol) {
  if (!std::isfinite(b0) || !std::isfinite(b1)) fail(ErrorCode::invalid_argument, "hhl: b0 and b1 must be finite");
  if (std::abs(b0 * b0 + b1 * b1 - 1.0) > tol) {
    fail(ErrorCode::domain, "hhl: b0^2 + b1^2 must equal 1 (got " + std::to_string(b0 * b0 + b1 * b1) + ")");
  }
  return {b0, b1};
}

HhlInput HhlInput::from_b0(double b0) {
  if (!std::isfinite(b0) || std::abs(b0) > 1.0) fail(ErrorCode::domain, "hhl: |b0| must be <= 1");
  return {b0, std::sqrt(std::max(0.0, 1.0 - b0 * b0))};
}

double rotation_constant() {
  return 0.5 * (std::sin(std::numbers::pi / 4) + 2.0 * std::sin(std::numbers::pi / 8));
}

PureState stage1_state(const HhlInput& input) {
  const double minus = 0.5 * (input.b0 - input.b1);
  const double plus = 0.5 * (input.b0 + input.b1);
  // (b0-b1)|01>(|0>-|1>) + (b0+b1)|10>(|0>+|1>), halved.
  std::vector<Complex> amps(8);
  amps[0b010] = minus;
  amps[0b011] = -minus;
  amps[0b100] = plus;
  amps[0b101] = plus;
  return make_state(std::move(amps));
}

Stage2Params stage2_params(const HhlInput& input) {
  Stage2Params s{};
  s.C = rotation_constant();
  const double c2 = s.C * s.C;
  s.gamma = checked_sqrt((1.0 - c2) * (1.0 - c2 / 4.0), "gamma") + c2 / 2.0;
  s.beta1 = (input.b0 - input.b1) / std::numbers::sqrt2;
  s.beta2 = (input.b0 + input.b1) / std::numbers::sqrt2;

  const double one_minus_g2 = 1.0 - s.gamma * s.gamma;
  const double root =
      checked_sqrt(1.0 - 4.0 * s.beta1 * s.beta1 * s.beta2 * s.beta2 * one_minus_g2, "p");
  s.p = 0.5 * (1.0 + root);
  s.a1 = s.beta1 * (1.0 + root - 2.0 * s.beta2 * s.beta2 * one_minus_g2);
  s.a2 = s.beta2 * s.gamma * (1.0 + root);

  const double norm2 = s.a1 * s.a1 + s.a2 * s.a2;
  if (norm2 < 1e-24) fail(ErrorCode::domain, "hhl: degenerate spectral parameters");
  const double norm = std::sqrt(norm2);
  s.x1 = s.a1 / norm;
  s.x2 = s.a2 / norm;
  return s;
}

std::vector<PureState> stage2_components(const Stage2Params& params) {
  const double h = 1.0 / std::numbers::sqrt2;
  // phi1 = x1/sqrt2 (|010> - |011>) + x2/sqrt2 (|100> + |101>)
  // phi2 = -x2/sqrt2 (|010> - |011>) + x1/sqrt2 (|100> + |101>)
  std::vector<Complex> phi1(8), phi2(8);
  phi1[0b010] = h * params.x1;
  phi1[0b011] = -h * params.x1;
  phi1[0b100] = h * params.x2;
  phi1[0b101] = h * params.x2;
  phi2[0b010] = -h * params.x2;
  phi2[0b011] = h * params.x2;
  phi2[0b100] = h * params.x1;
  phi2[0b101] = h * params.x1;
  return {PureState::normalized(3, std::move(phi1)), PureState::normalized(3, std::move(phi2))};
}

DensityMatrix stage2_state(const Stage2Params& params) {
  const auto phis = stage2_components(params);
  ComplexMatrix m = outer(phis[0]).matrix() * Complex{params.p};
  m += outer(phis[1]).matrix() * Complex{1.0 - params.p};
  return DensityMatrix::trusted(3, std::move(m));
}

Stage3Params stage3_params(const HhlInput& input) {
  Stage3Params s{};
  const double C = rotation_constant();
  const double r1 = checked_sqrt(1.0 - C * C, "A");
  const double r2 = checked_sqrt(1.0 - C * C / 4.0, "A");
  const double dm = input.b0 - input.b1;
  const double dp = input.b0 + input.b1;
  s.A = 0.5 * (dm * r1 + dp * r2);
  s.B = 0.5 * (-dm * r1 + dp * r2);
  s.C1 = C * (3.0 * input.b0 - input.b1) / 4.0;
  s.C2 = C * (-input.b0 + 3.0 * input.b1) / 4.0;

  const double det = s.A * s.C2 - s.B * s.C1;
  const double root = checked_sqrt(1.0 - 4.0 * det * det, "q");
  s.q = 0.5 * (1.0 + root);
  s.f1 = s.A * s.A - s.B * s.B + s.C1 * s.C1 + s.C2 * s.C2 + root;
  s.f2 = 2.0 * (s.A * s.B + s.C1 * s.C2);

  const double norm2 = s.f1 * s.f1 + s.f2 * s.f2;
  if (norm2 < 1e-24) fail(ErrorCode::domain, "hhl: degenerate spectral parameters");
  const double norm = std::sqrt(norm2);
  s.y1 = s.f1 / norm;
  s.y2 = s.f2 / norm;
  return s;
}

DensityMatrix stage3_state(const Stage3Params& params) {
  const double q = params.q, y1 = params.y1, y2 = params.y2;
  ComplexMatrix m(8, 8);
  m(0, 0) = q * y1 * y1 + (1.0 - q) * y2 * y2;
  m(0, 1) = (2.0 * q - 1.0) * y1 * y2;
  m(1, 0) = m(0, 1);
  m(1, 1) = (1.0 - q) * y1 * y1 + q * y2 * y2;
  return DensityMatrix::trusted(3, std::move(m));
}

double stage1_gm_closed_form(const HhlInput& input) {
  const double dm = input.b0 - input.b1;
  const double dp = input.b0 + input.b1;
  return -std::log2(std::max(dm * dm / 2.0, dp * dp / 2.0));
}

double stage3_gm_closed_form(const Stage3Params& params) {
  return -std::log2(std::max(params.q, 1.0 - params.q));
}

ComplexMatrix stage2_local_unitary() {
  const double h = 1.0 / std::numbers::sqrt2;
  const ComplexMatrix x(2, 2, {0.0, 1.0, 1.0, 0.0});
  // Rows <-| and <+|: sends |-> to |0> and |+> to |1>.
  const ComplexMatrix v(2, 2, {h, -h, h, h});
  return kron(kron(ComplexMatrix::identity(2), x), v);
}

DensityMatrix stage2_rotated_state(const Stage2Params& params) {
  const double p = params.p, x1 = params.x1, x2 = params.x2;
  ComplexMatrix m(8, 8);
  m(0, 0) = p * x1 * x1 + (1.0 - p) * x2 * x2;
  m(7, 7) = (1.0 - p) * x1 * x1 + p * x2 * x2;
  m(0, 7) = (2.0 * p - 1.0) * x1 * x2;
  m(7, 0) = m(0, 7);
  return DensityMatrix::trusted(3, std::move(m));
}

Stage2Objective stage2_objective(const Stage2Params& params) {
  const double p = params.p, x1 = params.x1, x2 = params.x2;
  return {p * x1 * x1 + (1.0 - p) * x2 * x2, std::abs((4.0 * p - 2.0) * x1 * x2),
          (1.0 - p) * x1 * x1 + p * x2 * x2};
}

double Stage2Objective::value(double alpha) const {
  const double c = std::cos(alpha), s = std::sin(alpha);
  const double c3 = c * c * c, s3 = s * s * s;
  return a * c3 * c3 + b * c3 * s3 + this->c * s3 * s3;
}

double Stage2Objective::derivative(double alpha) const {
  const double c = std::cos(alpha), s = std::sin(alpha);
  const double c2 = c * c, s2 = s * s;
  return -6.0 * a * c2 * c2 * c * s + 3.0 * b * c2 * s2 * (c2 - s2) + 6.0 * this->c * s2 * s2 * s * c;
}

Stage2Bound stage2_single_angle_bound(const Stage2Params& params) {
  Stage2Bound out{stage2_objective(params), {}, 0.0, 0.0, 0.0};
  const auto& f = out.objective;
  const double hi = std::numbers::pi / 2;
  constexpr int kSamples = 4096;

  out.stationary_points.push_back(0.0);
  double prev_x = hi / kSamples;
  double prev_d = f.derivative(prev_x);
  for (int k = 2; k < kSamples; ++k) {
    const double x = hi * k / kSamples;
    const double d = f.derivative(x);
    if (d == 0.0) {
      out.stationary_points.push_back(x);
    } else if ((prev_d < 0.0) != (d < 0.0) && prev_d != 0.0) {
      double lo_x = prev_x, hi_x = x, lo_d = prev_d;
      for (int it = 0; it < 200 && hi_x - lo_x > 1e-15; ++it) {
        const double mid = 0.5 * (lo_x + hi_x);
        const double md = f.derivative(mid);
        if ((md < 0.0) == (lo_d < 0.0)) {
          lo_x = mid;
          lo_d = md;
        } else {
          hi_x = mid;
        }
      }
      out.stationary_points.push_back(0.5 * (lo_x + hi_x));
    }
    prev_x = x;
    prev_d = d;
  }
  out.stationary_points.push_back(hi);

  out.lambda2 = -1.0;
  for (const double x : out.stationary_points) {
    const double v = f.value(x);
    if (v > out.lambda2) {
      out.lambda2 = v;
      out.alpha = x;
    }
  }
  out.gm = -std::log2(out.lambda2);
  return out;
}

}  // namespace qrta::hhl
