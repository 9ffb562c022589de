// Closed-curve model: arc parameter u in [0,1), node list with arc-length
// measure, and a whirl map delta(t) stored at marked points (0 elsewhere).
// Open polylines are supported as a diagnostic mode (no closure/winding
// checks); the spectral machinery requires closed curves.
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "sio/linalg.hpp"

namespace sio {

class CurveModel {
 public:
  using ParamFn = std::function<Complex(double)>;

  CurveModel() = default;  // empty model; assign from a factory before use

  static CurveModel circle(Complex center, double radius, int nodes);
  static CurveModel ellipse(Complex center, double rx, double ry, int nodes);
  static CurveModel polyline(std::vector<Complex> points, bool closed);
  static CurveModel segment(Complex a, Complex b, int nodes);
  // Open diagnostic curve spiralling into `center` with whirl exponent delta:
  // tau(s) = center + exp(-s*(1 - i*delta)), s in [s_min, s_max].
  static CurveModel spiral_patch(Complex center, double delta, double s_min, double s_max,
                                 int nodes);

  Complex point(double u) const;  // u taken mod 1 for closed curves
  bool closed() const { return closed_; }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  double node_u(int i) const { return u_[static_cast<size_t>(i)]; }
  Complex node(int i) const { return nodes_[static_cast<size_t>(i)]; }
  // Arc-length measure attached to node i; sums to length().
  double node_measure(int i) const { return measure_[static_cast<size_t>(i)]; }
  double length() const { return length_; }
  double diameter() const;

  void mark_whirl(double u, double delta);
  double whirl_at(double u) const;  // 0 unless marked (match tolerance 1e-9 in u)
  const std::vector<std::pair<double, double>>& whirl_marks() const { return whirl_; }

  double nearest_u(Complex z) const;
  double distance_to(Complex z) const;

  // Closed curves: closure, sampled simplicity, winding +1 around the origin.
  void validate() const;

 private:
  void finish_nodes();

  std::vector<double> u_;
  std::vector<Complex> nodes_;
  std::vector<double> measure_;
  double length_ = 0.0;
  bool closed_ = true;
  ParamFn analytic_;  // empty -> piecewise linear through nodes
  std::vector<std::pair<double, double>> whirl_;
};

}  // namespace sio
