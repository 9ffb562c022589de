// Symbol calculus over the spiral bundle: sigma_{t,mu} evaluation into
// 2n x 2n matrices, the scalar Fredholm criterion, local spectra, the
// determinant sweep for algebra elements, essential spectrum clouds, jump
// classification (gamma_t, m_t) and the winding-number index.
#pragma once

#include <optional>
#include <vector>

#include "sio/curve.hpp"
#include "sio/exponent.hpp"
#include "sio/expr.hpp"
#include "sio/spiral.hpp"
#include "sio/symbol.hpp"
#include "sio/weight.hpp"

namespace sio {

// The analysis space: curve with whirl data, exponent, Khvedelidze weight.
struct SpaceModel {
  CurveModel curve;
  ExponentFunction p;
  KhvedelidzeWeight weight;

  double lambda_at(double u) const { return weight.lambda_at(u); }
  double delta_at(double u) const { return curve.whirl_at(u); }
  // r(t) = 1/p(t) + lambda(t)
  double r_at(double u) const { return 1.0 / p.at(u) + weight.lambda_at(u); }
};

struct BundlePoint {
  double u = 0.0;       // curve parameter of t
  Complex mu;           // point of S(0,1; delta(t), r(t))
  double r = 0.5;       // 1/p(t) + lambda(t)
  double delta = 0.0;   // delta(t)
  double s = 0.0;       // spiral parameter of mu when sampled (+-inf at endpoints)
};

// Validates mu against the fibre spiral (tol on the congruence fraction).
BundlePoint make_bundle_point(const SpaceModel& space, double u, Complex mu, double tol = 1e-7);

struct SymbolMatrix {
  Matrix mat;   // 2n x 2n
  double u;     // provenance t
  Complex mu;   // provenance mu
};

SymbolMatrix sigma_eval(const Expr& e, const SpaceModel& space, const BundlePoint& bp);

struct FredholmWitness {
  enum class Kind { arc_zero, limit_zero, integer_quantity } kind;
  double u;       // curve parameter it was found at
  double value;   // |a| for zeros, the criterion quantity for integers
};

struct ScalarFredholmReport {
  bool fredholm = true;
  std::vector<FredholmWitness> witnesses;
  double min_integer_distance = 0.5;  // min over checked points of dist(quantity, Z)
  double min_abs_value = 0.0;         // min |a| over arcs and one-sided limits
  double integer_tol = 1e-9;
  double zero_tol = 0.0;
};

// Criterion for a P + Q with scalar a in PC: nonvanishing one-sided limits and
// arc values, and at each jump / weight point the quantity
//   -(1/2pi) arg(a(t-0)/a(t+0)) + (delta(t)/2pi) log|a(t-0)/a(t+0)| + 1/p(t) + lambda(t)
// must stay away from the integers.
ScalarFredholmReport fredholm_scalar(const PCSymbol& a, const SpaceModel& space);

// S(0,1; delta(t), 1/p(t)+lambda(t)): the local spectrum of the chi_t family.
SpiralSet local_spectrum(const SpaceModel& space, double u);

struct SweepConfig {
  int mu_samples = 512;     // spiral samples per jump fibre
  int grid_points = 1024;   // continuity grid
  double s_span = 12.0;     // spiral parameter range [-s_span, s_span]
  double tol = 1e-10;       // |det| threshold for the Fredholm verdict
  double tail_eps = 1e-8;   // spiral tail truncation for winding, relative
  int max_refine_points = 2000000;  // adaptive winding budget
};

struct AlgebraFredholmReport {
  bool fredholm = true;
  double min_abs_det = 0.0;
  BundlePoint argmin;
};

// Determinant sweep over the bundle with local refinement around minima.
// A numerically certified semi-decision, not an exact decision procedure.
AlgebraFredholmReport fredholm_algebra(const Expr& e, const SpaceModel& space,
                                       const SweepConfig& sweep);

struct SpectrumPoint {
  Complex lambda;
  double u;  // bundle point t
  double s;  // spiral parameter of mu (+-inf at endpoints / continuity points)
};

// Eigenvalues of sigma_{t,mu}(e) over the swept bundle (n <= 4).
std::vector<SpectrumPoint> essential_spectrum(const Expr& e, const SpaceModel& space,
                                              const SweepConfig& sweep);

struct JumpClassifier {
  double u = 0.0;
  Complex gamma;              // exp(2 pi i gamma) = a(t-0)/a(t+0)
  int m = 0;                  // unique integer with 0 < m - Re g - delta Im g + 1/p + lambda < 1
  double fredholm_quantity = 0.0;
};

JumpClassifier classify_jump(const PCSymbol& a, double u, const SpaceModel& space);

struct IndexResult {
  int index = 0;
  double residue = 0.0;  // |accumulated argument - 2 pi k|
};

// index(aP+Q) = -(winding about 0 of the symbol curve completed by the
// spiral arcs S(a(t-0), a(t+0); delta(t), r(t)) at each jump).
IndexResult index_scalar(const PCSymbol& a, const SpaceModel& space, const SweepConfig& sweep);

}  // namespace sio
