#include "sio/weight.hpp"

#include <cmath>

#include "sio/errors.hpp"

namespace sio {

namespace {
void check_distinct(const std::vector<WeightPoint>& pts) {
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      double d = std::abs(pts[i].u - pts[j].u);
      d = std::min(d, 1.0 - d);
      if (d < 1e-9)
        throw Error(Error::Code::invalid_argument, "weight: coincident weight points");
    }
}
}  // namespace

KhvedelidzeWeight KhvedelidzeWeight::at_params(
    const CurveModel& curve, const std::vector<std::pair<double, double>>& u_lambda) {
  KhvedelidzeWeight w;
  for (const auto& [u, lambda] : u_lambda) {
    if (!std::isfinite(lambda) || !std::isfinite(u))
      throw Error(Error::Code::invalid_argument, "weight: non-finite entry");
    const double uu = u - std::floor(u);
    w.points_.push_back({uu, curve.point(uu), lambda});
  }
  check_distinct(w.points_);
  return w;
}

KhvedelidzeWeight KhvedelidzeWeight::at_points(
    const CurveModel& curve, const std::vector<std::pair<Complex, double>>& pt_lambda,
    double tol) {
  KhvedelidzeWeight w;
  for (const auto& [pt, lambda] : pt_lambda) {
    if (!std::isfinite(lambda))
      throw Error(Error::Code::invalid_argument, "weight: non-finite power");
    if (curve.distance_to(pt) > tol)
      throw Error(Error::Code::precondition, "weight: point is not on the curve");
    const double u = curve.nearest_u(pt);
    w.points_.push_back({u, curve.point(u), lambda});
  }
  check_distinct(w.points_);
  return w;
}

double KhvedelidzeWeight::lambda_at(double u) const {
  const double v = u - std::floor(u);
  for (const auto& p : points_) {
    double d = std::abs(v - p.u);
    d = std::min(d, 1.0 - d);
    if (d < 1e-9) return p.lambda;
  }
  return 0.0;
}

}  // namespace sio
