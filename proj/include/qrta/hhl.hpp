#pragma once

// Closed-form three-qubit states of the HHL instance A = (1/2)[[3,1],[1,3]],
// b = (b0, b1), after QPE (stage 1), the controlled rotation (stage 2) and
// the inverse QPE (stage 3).

#include <vector>

#include "qrta/linalg.hpp"

namespace qrta::hhl {

struct HhlInput {
  double b0;
  double b1;

  /// Throws unless b0^2 + b1^2 = 1 within `tol`.
  static HhlInput make(double b0, double b1, double tol = 1e-12);
  /// b1 = +sqrt(1 - b0^2); |b0| <= 1 required.
  static HhlInput from_b0(double b0);
};

struct Stage2Params {
  double C;
  double gamma;
  double beta1;
  double beta2;
  double p;
  double a1;
  double a2;
  double x1;
  double x2;
};

struct Stage3Params {
  double A;
  double B;
  double C1;
  double C2;
  double q;
  double f1;
  double f2;
  double y1;
  double y2;
};

/// Rotation constant (sin(pi/4) + 2 sin(pi/8)) / 2 ~= 0.736.
double rotation_constant();

PureState stage1_state(const HhlInput& input);

Stage2Params stage2_params(const HhlInput& input);
/// p |phi1><phi1| + (1 - p) |phi2><phi2|.
DensityMatrix stage2_state(const Stage2Params& params);
/// The two mixture components |phi1>, |phi2>.
std::vector<PureState> stage2_components(const Stage2Params& params);

Stage3Params stage3_params(const HhlInput& input);
/// q |00>(y1|0>+y2|1>) ... + (1 - q) |00>(-y2|0>+y1|1>) ...
DensityMatrix stage3_state(const Stage3Params& params);

// ---- geometric-measure closed forms ----

/// -log2 max{(b0-b1)^2/2, (b0+b1)^2/2}.
double stage1_gm_closed_form(const HhlInput& input);
/// -log2 max{q, 1-q}.
double stage3_gm_closed_form(const Stage3Params& params);

/// Local unitary I (x) X (x) V taking stage 2 onto span{|000>, |111>}.
ComplexMatrix stage2_local_unitary();
/// The stage-2 state after stage2_local_unitary().
DensityMatrix stage2_rotated_state(const Stage2Params& params);

/// Single-angle objective f(alpha) = a cos^6 + b cos^3 sin^3 + c sin^6 with
/// a = p x1^2 + (1-p) x2^2, b = |(4p-2) x1 x2|, c = (1-p) x1^2 + p x2^2.
struct Stage2Objective {
  double a;
  double b;
  double c;

  double value(double alpha) const;
  double derivative(double alpha) const;
};

Stage2Objective stage2_objective(const Stage2Params& params);

struct Stage2Bound {
  Stage2Objective objective;
  std::vector<double> stationary_points;  // in [0, pi/2], endpoints included
  double alpha;                           // argmax among stationary points
  double lambda2;
  double gm;
};

/// Maximum of the single-angle objective over its stationary points.
Stage2Bound stage2_single_angle_bound(const Stage2Params& params);

}  // namespace qrta::hhl
