// Khvedelidze weight rho(t) = prod_k |t - tau_k|^{lambda_k}, given as a
// finite list of (point on curve, real power).
#pragma once

#include <utility>
#include <vector>

#include "sio/curve.hpp"
#include "sio/linalg.hpp"

namespace sio {

struct WeightPoint {
  double u;        // arc parameter on the carrying curve
  Complex point;   // tau_k = curve.point(u)
  double lambda;
};

class KhvedelidzeWeight {
 public:
  KhvedelidzeWeight() = default;  // empty product, rho == 1

  static KhvedelidzeWeight at_params(const CurveModel& curve,
                                     const std::vector<std::pair<double, double>>& u_lambda);
  // Projects each point onto the curve; errors if farther than tol from it.
  static KhvedelidzeWeight at_points(const CurveModel& curve,
                                     const std::vector<std::pair<Complex, double>>& pt_lambda,
                                     double tol);

  const std::vector<WeightPoint>& points() const { return points_; }
  size_t size() const { return points_.size(); }
  double lambda_at(double u) const;  // lambda_k at tau_k (1e-9 in u), else 0

 private:
  std::vector<WeightPoint> points_;
};

}  // namespace sio
