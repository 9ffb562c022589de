#include "sio/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sio/errors.hpp"

namespace sio {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap01(double u) {
  double v = u - std::floor(u);
  if (v >= 1.0) v = 0.0;
  return v;
}

double segment_distance(Complex a, Complex b, Complex z) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z - a).real() * d.real() + (z - a).imag() * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}
}  // namespace

void CurveModel::finish_nodes() {
  const int n = node_count();
  if (n < 2) throw Error(Error::Code::invalid_argument, "curve: need at least 2 nodes");
  measure_.assign(static_cast<size_t>(n), 0.0);
  length_ = 0.0;
  const int last = closed_ ? n : n - 1;
  for (int i = 0; i < last; ++i) {
    const Complex a = nodes_[static_cast<size_t>(i)];
    const Complex b = nodes_[static_cast<size_t>((i + 1) % n)];
    const double seg = std::abs(b - a);
    length_ += seg;
    measure_[static_cast<size_t>(i)] += seg / 2.0;
    measure_[static_cast<size_t>((i + 1) % n)] += seg / 2.0;
  }
}

CurveModel CurveModel::circle(Complex center, double radius, int nodes) {
  if (radius <= 0.0) throw Error(Error::Code::invalid_argument, "circle: radius must be > 0");
  CurveModel c;
  c.closed_ = true;
  c.analytic_ = [center, radius](double u) {
    return center + std::polar(radius, kTwoPi * u);
  };
  for (int i = 0; i < nodes; ++i) {
    const double u = double(i) / nodes;
    c.u_.push_back(u);
    c.nodes_.push_back(c.analytic_(u));
  }
  c.finish_nodes();
  return c;
}

CurveModel CurveModel::ellipse(Complex center, double rx, double ry, int nodes) {
  if (rx <= 0.0 || ry <= 0.0) throw Error(Error::Code::invalid_argument, "ellipse: radii must be > 0");
  CurveModel c;
  c.closed_ = true;
  c.analytic_ = [center, rx, ry](double u) {
    return center + Complex(rx * std::cos(kTwoPi * u), ry * std::sin(kTwoPi * u));
  };
  for (int i = 0; i < nodes; ++i) {
    const double u = double(i) / nodes;
    c.u_.push_back(u);
    c.nodes_.push_back(c.analytic_(u));
  }
  c.finish_nodes();
  return c;
}

CurveModel CurveModel::polyline(std::vector<Complex> points, bool closed) {
  CurveModel c;
  c.closed_ = closed;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) c.u_.push_back(double(i) / (closed ? n : n - 1));
  c.nodes_ = std::move(points);
  c.finish_nodes();
  return c;
}

CurveModel CurveModel::segment(Complex a, Complex b, int nodes) {
  if (nodes < 2) throw Error(Error::Code::invalid_argument, "segment: need at least 2 nodes");
  std::vector<Complex> pts;
  pts.reserve(static_cast<size_t>(nodes));
  for (int i = 0; i < nodes; ++i) pts.push_back(a + (b - a) * (double(i) / (nodes - 1)));
  return polyline(std::move(pts), false);
}

CurveModel CurveModel::spiral_patch(Complex center, double delta, double s_min, double s_max,
                                    int nodes) {
  if (!(s_min < s_max)) throw Error(Error::Code::invalid_argument, "spiral patch: s_min >= s_max");
  if (nodes < 3) throw Error(Error::Code::invalid_argument, "spiral patch: need at least 3 nodes");
  std::vector<Complex> pts;
  pts.reserve(static_cast<size_t>(nodes));
  for (int i = 0; i < nodes; ++i) {
    const double s = s_min + (s_max - s_min) * double(i) / (nodes - 1);
    pts.push_back(center + std::polar(std::exp(-s), delta * s));
  }
  return polyline(std::move(pts), false);
}

Complex CurveModel::point(double u) const {
  if (closed_) u = wrap01(u);
  if (analytic_) return analytic_(u);
  const int n = node_count();
  if (!closed_) {
    u = std::clamp(u, 0.0, 1.0);
    const double x = u * (n - 1);
    const int i = std::min(static_cast<int>(std::floor(x)), n - 2);
    const double t = x - i;
    return nodes_[static_cast<size_t>(i)] * (1.0 - t) + nodes_[static_cast<size_t>(i + 1)] * t;
  }
  const double x = u * n;
  const int i = std::min(static_cast<int>(std::floor(x)), n - 1);
  const double t = x - i;
  return nodes_[static_cast<size_t>(i)] * (1.0 - t) + nodes_[static_cast<size_t>((i + 1) % n)] * t;
}

double CurveModel::diameter() const {
  double best = 0.0;
  const int n = node_count();
  const int stride = std::max(1, n / 256);
  for (int i = 0; i < n; i += stride)
    for (int j = i + stride; j < n; j += stride)
      best = std::max(best, std::abs(nodes_[static_cast<size_t>(i)] - nodes_[static_cast<size_t>(j)]));
  return best;
}

void CurveModel::mark_whirl(double u, double delta) {
  whirl_.emplace_back(closed_ ? wrap01(u) : u, delta);
}

double CurveModel::whirl_at(double u) const {
  const double v = closed_ ? wrap01(u) : u;
  for (const auto& [mu, d] : whirl_) {
    double diff = std::abs(v - mu);
    if (closed_) diff = std::min(diff, 1.0 - diff);
    if (diff < 1e-9) return d;
  }
  return 0.0;
}

double CurveModel::nearest_u(Complex z) const {
  const int n = node_count();
  int best = 0;
  double best_d = std::abs(z - nodes_[0]);
  for (int i = 1; i < n; ++i) {
    const double d = std::abs(z - nodes_[static_cast<size_t>(i)]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  // refine within the two adjacent segments
  double best_u = u_[static_cast<size_t>(best)];
  auto try_seg = [&](int i) {
    const int j = (i + 1) % n;
    if (!closed_ && j == 0) return;
    const Complex a = nodes_[static_cast<size_t>(i)], b = nodes_[static_cast<size_t>(j)];
    const double len2 = std::norm(b - a);
    if (len2 == 0.0) return;
    double t = ((z - a).real() * (b - a).real() + (z - a).imag() * (b - a).imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const double d = std::abs(z - (a + t * (b - a)));
    if (d < best_d) {
      best_d = d;
      const double ui = u_[static_cast<size_t>(i)];
      const double uj = (j == 0) ? 1.0 : u_[static_cast<size_t>(j)];
      best_u = ui + t * (uj - ui);
    }
  };
  try_seg(best);
  try_seg((best + n - 1) % n);
  return closed_ ? wrap01(best_u) : best_u;
}

double CurveModel::distance_to(Complex z) const {
  const int n = node_count();
  double best = std::abs(z - nodes_[0]);
  const int last = closed_ ? n : n - 1;
  for (int i = 0; i < last; ++i)
    best = std::min(best, segment_distance(nodes_[static_cast<size_t>(i)],
                                           nodes_[static_cast<size_t>((i + 1) % n)], z));
  return best;
}

void CurveModel::validate() const {
  if (!closed_) return;
  const int n = node_count();
  // closure
  if (std::abs(point(0.0) - point(1.0 - 1e-12)) > 1e-6 * std::max(1.0, diameter()))
    throw Error(Error::Code::invalid_argument, "curve: not closed");
  // sampled simplicity: non-adjacent nodes stay apart
  double min_seg = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double seg = std::abs(nodes_[static_cast<size_t>(i)] - nodes_[static_cast<size_t>((i + 1) % n)]);
    if (seg > 0.0) min_seg = std::min(min_seg, seg);
  }
  const double thresh = 0.25 * min_seg;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      if (std::abs(nodes_[static_cast<size_t>(i)] - nodes_[static_cast<size_t>(j)]) < thresh)
        throw Error(Error::Code::invalid_argument, "curve: sampled self-intersection");
    }
  // counter-clockwise and 0 in the bounded component: winding of the nodes
  // about the origin must be +1
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex a = nodes_[static_cast<size_t>(i)];
    const Complex b = nodes_[static_cast<size_t>((i + 1) % n)];
    if (a == 0.0 || b == 0.0) throw Error(Error::Code::invalid_argument, "curve: passes through 0");
    const Complex q = b * std::conj(a);
    total += std::atan2(q.imag(), q.real());
  }
  const long w = std::lround(total / kTwoPi);
  if (w != 1)
    throw Error(Error::Code::invalid_argument,
                "curve: winding about 0 is " + std::to_string(w) + ", expected +1");
}

}  // namespace sio
