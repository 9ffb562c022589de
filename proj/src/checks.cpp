#include "sio/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sio/errors.hpp"

namespace sio {

DiniReport dini_lipschitz_check(const CurveModel& curve, const ExponentFunction& p,
                                int pair_budget) {
  if (pair_budget < 1)
    throw Error(Error::Code::invalid_argument, "dini check: pair budget must be >= 1");
  const int n = curve.node_count();
  const int max_stride = std::max(1, std::min(n - 1, pair_budget / n));
  DiniReport rep;
  for (int k = 1; k <= max_stride; ++k) {
    for (int i = 0; i < n; ++i) {
      const int j = (i + k) % n;
      const double d = std::abs(curve.node(i) - curve.node(j));
      if (d <= 0.0 || d >= 0.5) continue;
      const double need = std::abs(p.at(curve.node_u(i)) - p.at(curve.node_u(j))) * (-std::log(d));
      ++rep.pairs_checked;
      if (need > rep.worst_A) {
        rep.worst_A = need;
        rep.worst_u1 = curve.node_u(i);
        rep.worst_u2 = curve.node_u(j);
      }
    }
  }
  rep.vacuous = rep.pairs_checked == 0;
  rep.pass = rep.worst_A <= p.dini_constant();
  return rep;
}

BoundednessReport khvedelidze_check(const CurveModel& curve, const ExponentFunction& p,
                                    const KhvedelidzeWeight& w) {
  BoundednessReport rep;
  int k = 0;
  for (const auto& wp : w.points()) {
    if (curve.distance_to(wp.point) > 1e-6 * std::max(1.0, curve.diameter()))
      throw Error(Error::Code::precondition, "boundedness check: weight point off the curve");
    const double value = 1.0 / p.at(wp.u) + wp.lambda;
    rep.values.push_back(value);
    if (!(value > 0.0 && value < 1.0)) {
      rep.bounded = false;
      rep.violations.push_back({k, value});
    }
    ++k;
  }
  return rep;
}

namespace {
// Length of the part of segment [a,b] lying inside the open disk |z-t|<R.
double clipped_length(Complex a, Complex b, Complex t, double R) {
  const Complex d = b - a;
  const double len = std::abs(d);
  if (len == 0.0) return 0.0;
  // |a + s d - t|^2 = R^2, s in [0,1]
  const Complex e = a - t;
  const double A = std::norm(d);
  const double B = 2.0 * (e.real() * d.real() + e.imag() * d.imag());
  const double C = std::norm(e) - R * R;
  const double disc = B * B - 4.0 * A * C;
  if (disc <= 0.0) return C < 0.0 ? len : 0.0;
  const double sq = std::sqrt(disc);
  const double s0 = std::clamp((-B - sq) / (2.0 * A), 0.0, 1.0);
  const double s1 = std::clamp((-B + sq) / (2.0 * A), 0.0, 1.0);
  return (s1 - s0) * len;
}
}  // namespace

double carleson_estimate(const CurveModel& curve, int grid) {
  if (grid < 2) throw Error(Error::Code::invalid_argument, "carleson estimate: grid must be >= 2");
  const int n = curve.node_count();
  const double diam = curve.diameter();
  const int stride = std::max(1, n / grid);
  const int last = curve.closed() ? n : n - 1;
  double best = 0.0;
  for (int ti = 0; ti < n; ti += stride) {
    const Complex t = curve.node(ti);
    for (int j = 1; j <= grid; ++j) {
      const double R = diam * double(j) / grid;
      double inside = 0.0;
      for (int i = 0; i < last; ++i)
        inside += clipped_length(curve.node(i), curve.node((i + 1) % n), t, R);
      best = std::max(best, inside / R);
    }
  }
  return best;
}

double estimate_whirl(const CurveModel& curve, Complex t, double window) {
  if (window <= 0.0) throw Error(Error::Code::invalid_argument, "whirl estimate: window must be > 0");
  const int n = curve.node_count();

  // Usable nodes in index order; split into contiguous runs, each run gets
  // its own unwound arg branch and intercept, the slope is shared.
  struct Obs {
    double x, y;
    int run;
  };
  std::vector<Obs> obs;
  int run = -1;
  bool in_run = false;
  double prev_arg = 0.0;
  double prev_dist = 0.0;
  Complex prev_node;
  for (int i = 0; i < n; ++i) {
    const Complex d = curve.node(i) - t;
    const double dist = std::abs(d);
    if (dist <= 0.0 || dist >= window) {
      in_run = false;
      continue;
    }
    double a = std::atan2(d.imag(), d.real());
    // a new approach direction starts when the curve passes by t: the chord
    // between consecutive in-window nodes is then comparable to the sum of
    // their distances to t
    const bool crossed =
        in_run && std::abs(curve.node(i) - prev_node) >= 0.9 * (dist + prev_dist);
    if (!in_run || crossed) {
      ++run;
      in_run = true;
    } else {
      // continuous branch: step by the principal increment
      double inc = a - prev_arg;
      inc -= 2.0 * std::numbers::pi * std::round(inc / (2.0 * std::numbers::pi));
      a = prev_arg + inc;
    }
    prev_arg = a;
    prev_dist = dist;
    prev_node = curve.node(i);
    obs.push_back({-std::log(dist), a, run});
  }
  if (obs.size() < 3)
    throw Error(Error::Code::precondition, "whirl estimate: fewer than 3 usable nodes");

  // least squares with shared slope and per-run intercept:
  // minimize sum (y - slope*x - b_run)^2
  const int runs = run + 1;
  std::vector<double> sx(runs, 0.0), sy(runs, 0.0), cnt(runs, 0.0);
  for (const auto& o : obs) {
    sx[o.run] += o.x;
    sy[o.run] += o.y;
    cnt[o.run] += 1.0;
  }
  double num = 0.0, den = 0.0;
  for (const auto& o : obs) {
    const double xc = o.x - sx[o.run] / cnt[o.run];
    const double yc = o.y - sy[o.run] / cnt[o.run];
    num += xc * yc;
    den += xc * xc;
  }
  if (den < 1e-18) return 0.0;  // all points at one distance; no slope information
  return num / den;
}

}  // namespace sio
