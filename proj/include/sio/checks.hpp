// Regularity and boundedness checkers: the Dini-Lipschitz exponent class, the
// power-weight boundedness criterion 0 < 1/p(tau_k) + lambda_k < 1, a Carleson
// constant grid estimator, and a spiral-exponent (whirl) estimator.
#pragma once

#include <vector>

#include "sio/curve.hpp"
#include "sio/exponent.hpp"
#include "sio/weight.hpp"

namespace sio {

struct DiniReport {
  bool pass = true;
  double worst_A = 0.0;  // max |p(tau)-p(t)| * (-log|tau-t|) over sampled pairs
  int pairs_checked = 0;
  bool vacuous = false;  // no usable pairs (|tau-t| < 1/2 never sampled)
  double worst_u1 = 0.0, worst_u2 = 0.0;
};

DiniReport dini_lipschitz_check(const CurveModel& curve, const ExponentFunction& p,
                                int pair_budget);

struct BoundednessViolation {
  int k;         // weight point index
  double value;  // 1/p(tau_k) + lambda_k
};

struct BoundednessReport {
  bool bounded = true;
  std::vector<BoundednessViolation> violations;
  std::vector<double> values;  // 1/p(tau_k)+lambda_k per weight point
};

// Exact open-interval semantics: boundary values 0 and 1 are violations.
BoundednessReport khvedelidze_check(const CurveModel& curve, const ExponentFunction& p,
                                    const KhvedelidzeWeight& w);

// max over a (t,R) grid of |Gamma(t,R)|/R; a lower bound for the Carleson
// constant, monotone nondecreasing under nested grid refinement.
double carleson_estimate(const CurveModel& curve, int grid);

// Least-squares slope of arg(tau-t) against -log|tau-t| over nodes within
// `window` of t, with an independently unwound branch on each approach side.
double estimate_whirl(const CurveModel& curve, Complex t, double window);

}  // namespace sio
