#include "sio/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sio/errors.hpp"
#include "sio/spiral.hpp"

namespace sio {

namespace {
constexpr double kJumpTol = 1e-9;       // parameter identity tolerance
constexpr double kCollapseTol = 1e-12;  // limits closer than this are "no jump"

double wrap01(double u) {
  double v = u - std::floor(u);
  if (v >= 1.0) v = 0.0;
  return v;
}
}  // namespace

std::vector<double> PCSymbol::jump_params() const {
  std::vector<double> out;
  out.reserve(jumps_.size());
  for (const auto& j : jumps_) out.push_back(j.u);
  return out;
}

std::vector<double> PCSymbol::sample_params() const {
  std::vector<double> out;
  for (const auto& arc : arcs_)
    for (double u : arc.u) out.push_back(wrap01(u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) < kJumpTol; }),
            out.end());
  return out;
}

Matrix PCSymbol::value(double u) const {
  const double base = arcs_.front().u.front();
  double x = base + (u - base) - std::floor(u - base);  // into [base, base+1)
  for (const auto& arc : arcs_) {
    if (x < arc.u.front() - kJumpTol || x > arc.u.back() + kJumpTol) continue;
    const double xx = std::clamp(x, arc.u.front(), arc.u.back());
    auto it = std::upper_bound(arc.u.begin(), arc.u.end(), xx);
    size_t hi = static_cast<size_t>(it - arc.u.begin());
    if (hi == 0) hi = 1;
    if (hi == arc.u.size()) hi = arc.u.size() - 1;
    const size_t lo = hi - 1;
    const double span = arc.u[hi] - arc.u[lo];
    const double t = span == 0.0 ? 0.0 : (xx - arc.u[lo]) / span;
    Matrix out = arc.values[lo];
    out *= (1.0 - t);
    Matrix other = arc.values[hi];
    other *= t;
    out += other;
    return out;
  }
  throw Error(Error::Code::numeric, "pc symbol: parameter not covered by arcs");
}

std::pair<Matrix, Matrix> PCSymbol::one_sided_limits(double u) const {
  const double v = wrap01(u);
  for (const auto& j : jumps_) {
    double d = std::abs(v - j.u);
    d = std::min(d, 1.0 - d);
    if (d < kJumpTol) return {j.left, j.right};
  }
  const Matrix m = value(v);
  return {m, m};
}

PCSymbol PCSymbol::from_parts(int n, std::vector<Jump> jumps, std::vector<Arc> arcs) {
  if (n < 1) throw Error(Error::Code::invalid_argument, "pc symbol: size must be >= 1");
  if (arcs.size() != std::max<size_t>(1, jumps.size()))
    throw Error(Error::Code::invalid_argument, "pc symbol: need one arc per inter-jump interval");
  std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) { return a.u < b.u; });
  for (const auto& j : jumps) {
    if (j.left.size() != n || j.right.size() != n)
      throw Error(Error::Code::invalid_argument, "pc symbol: jump limit size mismatch");
    if (max_abs_diff(j.left, j.right) <= kCollapseTol)
      throw Error(Error::Code::invalid_argument, "pc symbol: stored jump has equal limits");
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!std::isfinite(std::abs(j.left(r, c))) || !std::isfinite(std::abs(j.right(r, c))))
          throw Error(Error::Code::invalid_argument, "pc symbol: non-finite one-sided limit");
  }
  for (const auto& arc : arcs) {
    if (arc.u.size() != arc.values.size() || arc.u.size() < 2)
      throw Error(Error::Code::invalid_argument, "pc symbol: arc needs >= 2 samples");
    for (size_t i = 1; i < arc.u.size(); ++i)
      if (!(arc.u[i] > arc.u[i - 1]))
        throw Error(Error::Code::invalid_argument, "pc symbol: arc parameters must increase");
  }
  if (!jumps.empty()) {
    for (size_t i = 0; i < jumps.size(); ++i) {
      const auto& arc = arcs[i];
      const auto& from = jumps[i];
      const auto& to = jumps[(i + 1) % jumps.size()];
      if (max_abs_diff(arc.values.front(), from.right) > 1e-9 ||
          max_abs_diff(arc.values.back(), to.left) > 1e-9)
        throw Error(Error::Code::invalid_argument,
                    "pc symbol: arc end samples must match adjacent one-sided limits");
    }
  } else {
    const auto& arc = arcs[0];
    if (std::abs(arc.u.back() - arc.u.front() - 1.0) > 1e-9 ||
        max_abs_diff(arc.values.front(), arc.values.back()) > 1e-9)
      throw Error(Error::Code::invalid_argument, "pc symbol: continuous symbol must close up");
  }
  PCSymbol s;
  s.n_ = n;
  s.jumps_ = std::move(jumps);
  s.arcs_ = std::move(arcs);
  return s;
}

PCSymbol PCSymbol::constant(int n, Complex c) { return constant(Matrix::scalar(n, c)); }

PCSymbol PCSymbol::constant(Matrix m) {
  PCSymbol s;
  s.n_ = m.size();
  Arc arc;
  arc.u = {0.0, 1.0};
  arc.values = {m, m};
  s.arcs_.push_back(std::move(arc));
  return s;
}

PCSymbol PCSymbol::chi(double u0, int n) {
  PCSymbol s;
  s.n_ = n;
  const double u = wrap01(u0);
  s.jumps_.push_back({u, Matrix::zero(n), Matrix::identity(n)});
  Arc arc;
  arc.u = {u, u + 1.0};
  arc.values = {Matrix::identity(n), Matrix::zero(n)};
  s.arcs_.push_back(std::move(arc));
  return s;
}

PCSymbol PCSymbol::chi_spiral(double u0, int n, double delta, double r, int samples,
                              double tail_eps) {
  if (samples < 2) throw Error(Error::Code::invalid_argument, "chi spiral: samples must be >= 2");
  PCSymbol s;
  s.n_ = n;
  const double u = wrap01(u0);
  s.jumps_.push_back({u, Matrix::zero(n), Matrix::identity(n)});
  const SpiralSet sp(0.0, 1.0, delta, r);
  const auto [s_lo, s_hi] = spiral_tail_span(sp, tail_eps);
  Arc arc;
  arc.u.reserve(static_cast<size_t>(samples) + 2);
  arc.values.reserve(static_cast<size_t>(samples) + 2);
  arc.u.push_back(u);
  arc.values.push_back(Matrix::identity(n));
  for (int i = 0; i < samples; ++i) {
    const double d = (i + 1.0) / (samples + 1.0);       // arc fraction past t
    const double sp_param = s_hi + d * (s_lo - s_hi);   // decreasing: 1-end to 0-end
    arc.u.push_back(u + d);
    arc.values.push_back(Matrix::scalar(n, spiral_point(sp, sp_param)));
  }
  arc.u.push_back(u + 1.0);
  arc.values.push_back(Matrix::zero(n));
  s.arcs_.push_back(std::move(arc));
  return s;
}

PCSymbol PCSymbol::single_jump(double u0, Matrix left, Matrix right, int arc_samples) {
  if (left.size() != right.size())
    throw Error(Error::Code::invalid_argument, "single jump: limit size mismatch");
  if (arc_samples < 2) arc_samples = 2;
  PCSymbol s;
  s.n_ = left.size();
  const double u = wrap01(u0);
  if (max_abs_diff(left, right) <= kCollapseTol)
    throw Error(Error::Code::invalid_argument, "single jump: equal limits are not a jump");
  Arc arc;
  for (int i = 0; i < arc_samples; ++i) {
    const double t = double(i) / (arc_samples - 1);
    Matrix v = right;
    v *= (1.0 - t);
    Matrix l = left;
    l *= t;
    v += l;
    arc.u.push_back(u + t);
    arc.values.push_back(std::move(v));
  }
  s.jumps_.push_back({u, std::move(left), std::move(right)});
  s.arcs_.push_back(std::move(arc));
  return s;
}

PCSymbol PCSymbol::from_curve(const CurveModel& curve,
                              const std::function<Matrix(double, Complex)>& fn) {
  PCSymbol s;
  Arc arc;
  const int n = curve.node_count();
  for (int i = 0; i < n; ++i) {
    arc.u.push_back(curve.node_u(i));
    arc.values.push_back(fn(curve.node_u(i), curve.node(i)));
  }
  arc.u.push_back(curve.node_u(0) + 1.0);
  arc.values.push_back(arc.values.front());
  s.n_ = arc.values.front().size();
  s.arcs_.push_back(std::move(arc));
  return s;
}

PCSymbol PCSymbol::power(const CurveModel& curve, int k) {
  return from_curve(curve, [k](double, Complex tau) {
    Matrix m(1);
    m(0, 0) = std::pow(tau, k);
    return m;
  });
}

namespace {

PCSymbol combine(const PCSymbol& a, const PCSymbol& b, bool product) {
  if (a.size() != b.size())
    throw Error(Error::Code::invalid_argument, "pc symbol algebra: size mismatch");
  auto apply = [&](const Matrix& x, const Matrix& y) { return product ? x * y : x + y; };

  // candidate breakpoints: union of the jump parameters
  std::vector<double> bps;
  for (const auto& j : a.jumps()) bps.push_back(j.u);
  for (const auto& j : b.jumps()) bps.push_back(j.u);
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end(),
                        [](double x, double y) { return std::abs(x - y) < kJumpTol; }),
            bps.end());

  std::vector<PCSymbol::Jump> jumps;
  for (double u : bps) {
    const auto la = a.one_sided_limits(u);
    const auto lb = b.one_sided_limits(u);
    Matrix L = apply(la.first, lb.first), R = apply(la.second, lb.second);
    const double scale = std::max({1.0, max_abs(L), max_abs(R)});
    if (max_abs_diff(L, R) <= kCollapseTol * scale) continue;  // jump dissolved
    jumps.push_back({u, std::move(L), std::move(R)});
  }

  // merged sample grid; densified so products of coarse arcs stay resolved
  // (the product of two linear arcs is quadratic in the parameter)
  std::vector<double> grid = a.sample_params();
  for (double u : b.sample_params()) grid.push_back(u);
  for (int k = 0; k < 256; ++k) grid.push_back(double(k) / 256.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double x, double y) { return std::abs(x - y) < kJumpTol; }),
             grid.end());

  std::vector<PCSymbol::Arc> arcs;
  auto interior_value = [&](double u) { return apply(a.value(u), b.value(u)); };
  if (jumps.empty()) {
    PCSymbol::Arc arc;
    for (double u : grid) {
      arc.u.push_back(u);
      arc.values.push_back(interior_value(u));
    }
    if (arc.u.size() < 2) {
      arc.u = {0.0};
      arc.values = {interior_value(0.0)};
    }
    arc.u.push_back(arc.u.front() + 1.0);
    arc.values.push_back(arc.values.front());
    arcs.push_back(std::move(arc));
  } else {
    const size_t J = jumps.size();
    for (size_t i = 0; i < J; ++i) {
      const double u_from = jumps[i].u;
      const double u_to = (i + 1 < J) ? jumps[i + 1].u : jumps[0].u + 1.0;
      std::vector<double> inner;
      for (double g : grid) {
        double x = g;
        if (x <= u_from + kJumpTol) x += 1.0;
        if (x >= u_to - kJumpTol || x <= u_from + kJumpTol) continue;
        inner.push_back(x);
      }
      std::sort(inner.begin(), inner.end());
      PCSymbol::Arc arc;
      arc.u.push_back(u_from);
      arc.values.push_back(jumps[i].right);
      for (double x : inner) {
        arc.u.push_back(x);
        arc.values.push_back(interior_value(x));
      }
      arc.u.push_back(u_to);
      arc.values.push_back(jumps[(i + 1) % J].left);
      arcs.push_back(std::move(arc));
    }
  }
  return PCSymbol::from_parts(a.size(), std::move(jumps), std::move(arcs));
}

}  // namespace

PCSymbol operator+(const PCSymbol& a, const PCSymbol& b) { return combine(a, b, false); }
PCSymbol operator*(const PCSymbol& a, const PCSymbol& b) { return combine(a, b, true); }

PCSymbol PCSymbol::operator+(Complex c) const { return *this + PCSymbol::constant(n_, c); }

}  // namespace sio
