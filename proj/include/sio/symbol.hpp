// Piecewise continuous n x n matrix symbols: finitely many jump points with
// stored one-sided limits, plus sampled continuous arcs in between (linear
// interpolation in value space). Arc end samples equal the adjacent one-sided
// limits exactly.
#pragma once

#include <utility>
#include <vector>

#include "sio/curve.hpp"
#include "sio/linalg.hpp"

namespace sio {

class PCSymbol {
 public:
  struct Jump {
    double u;     // in [0,1)
    Matrix left;  // a(t-0)
    Matrix right; // a(t+0)
  };
  struct Arc {
    std::vector<double> u;       // strictly increasing; may exceed 1 (wraps mod 1)
    std::vector<Matrix> values;  // same length as u
  };

  int size() const { return n_; }
  const std::vector<Jump>& jumps() const { return jumps_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::vector<double> jump_params() const;

  // Interpolated value; at a jump parameter this is the right limit.
  Matrix value(double u) const;
  // (a(t-0), a(t+0)); equal matrices at a continuity point.
  std::pair<Matrix, Matrix> one_sided_limits(double u) const;

  // All stored sample parameters reduced mod 1 (arc interiors + jump points).
  std::vector<double> sample_params() const;

  static PCSymbol constant(int n, Complex c);
  static PCSymbol constant(Matrix m);
  // chi_t: continuous on the complement of t, limits (0,1); default arc is a
  // linear ramp from 1 back down to 0 in the arc parameter.
  static PCSymbol chi(double u0, int n);
  // chi_t whose arc traces the truncated spiral S(0,1;delta,r) itself.
  static PCSymbol chi_spiral(double u0, int n, double delta, double r, int samples,
                             double tail_eps = 1e-8);
  // Single jump with a straight-chord arc from `right` around to `left`.
  static PCSymbol single_jump(double u0, Matrix left, Matrix right, int arc_samples = 2);
  // Continuous symbol sampled at the curve nodes.
  static PCSymbol from_curve(const CurveModel& curve,
                             const std::function<Matrix(double, Complex)>& fn);
  static PCSymbol power(const CurveModel& curve, int k);  // tau^k, scalar
  // Full control; validates the arc/limit matching invariants.
  static PCSymbol from_parts(int n, std::vector<Jump> jumps, std::vector<Arc> arcs);

  // Pointwise algebra; jumps whose combined limits coincide are dissolved
  // into arc data.
  friend PCSymbol operator+(const PCSymbol& a, const PCSymbol& b);
  friend PCSymbol operator*(const PCSymbol& a, const PCSymbol& b);
  PCSymbol operator+(Complex c) const;  // a + c*Id
  PCSymbol operator-(Complex c) const { return *this + (-c); }

 private:
  PCSymbol() = default;
  int n_ = 0;
  std::vector<Jump> jumps_;  // sorted by u; arcs_[i] runs from jumps_[i] to jumps_[i+1]
  std::vector<Arc> arcs_;    // exactly max(1, jumps_.size()) arcs covering one period
};

}  // namespace sio
