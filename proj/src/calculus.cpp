#include "sio/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sio/checks.hpp"
#include "sio/errors.hpp"

namespace sio {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kParamTol = 1e-9;
const double kInf = std::numeric_limits<double>::infinity();

double wrap01(double u) {
  double v = u - std::floor(u);
  if (v >= 1.0) v = 0.0;
  return v;
}

void check_space(const SpaceModel& space) {
  const auto rep = khvedelidze_check(space.curve, space.p, space.weight);
  if (!rep.bounded) {
    std::string msg = "S is not bounded on this space:";
    for (const auto& v : rep.violations)
      msg += " 1/p+lambda = " + std::to_string(v.value) + " at weight point " +
             std::to_string(v.k) + ";";
    throw Error(Error::Code::precondition, msg);
  }
}
}  // namespace

BundlePoint make_bundle_point(const SpaceModel& space, double u, Complex mu, double tol) {
  const double uu = wrap01(u);
  BundlePoint bp;
  bp.u = uu;
  bp.mu = mu;
  bp.r = space.r_at(uu);
  bp.delta = space.delta_at(uu);
  bp.s = 0.0;
  const SpiralSet fibre(0.0, 1.0, bp.delta, bp.r);
  if (!spiral_membership(mu, fibre, tol))
    throw Error(Error::Code::invalid_argument, "bundle point: mu is not on the fibre spiral");
  return bp;
}

namespace {

Matrix sigma_of_symbol(const PCSymbol& sym, const BundlePoint& bp) {
  const auto [left, right] = sym.one_sided_limits(bp.u);
  const Complex mu = bp.mu;
  const Complex root = std::sqrt(mu * (1.0 - mu));  // principal branch
  // a11 = a(t+0) mu + a(t-0)(1-mu),   a22 = a(t+0)(1-mu) + a(t-0) mu,
  // a12 = a21 = (a(t+0) - a(t-0)) sqrt(mu(1-mu))
  Matrix a11 = right;
  a11 *= mu;
  {
    Matrix l = left;
    l *= (1.0 - mu);
    a11 += l;
  }
  Matrix a22 = right;
  a22 *= (1.0 - mu);
  {
    Matrix l = left;
    l *= mu;
    a22 += l;
  }
  Matrix a12 = right;
  a12 -= left;
  a12 *= root;
  return block2x2(a11, a12, a12, a22);
}

Matrix sigma_node(const expr_node::Node& node, int n, const BundlePoint& bp) {
  using namespace expr_node;
  return std::visit(
      [&](const auto& v) -> Matrix {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GenS>) {
          Matrix m = Matrix::identity(2 * n);
          for (int i = n; i < 2 * n; ++i) m(i, i) = -1.0;
          return m;
        } else if constexpr (std::is_same_v<T, GenScalar>) {
          return Matrix::scalar(2 * n, v.c);
        } else if constexpr (std::is_same_v<T, GenCompact>) {
          return Matrix::zero(2 * n);
        } else if constexpr (std::is_same_v<T, GenMul>) {
          return sigma_of_symbol(v.sym, bp);
        } else if constexpr (std::is_same_v<T, Sum>) {
          Matrix acc = Matrix::zero(2 * n);
          for (const auto& t : v.terms) acc += sigma_node(t.node(), n, bp);
          return acc;
        } else if constexpr (std::is_same_v<T, Product>) {
          Matrix acc = sigma_node(v.factors[0].node(), n, bp);
          for (size_t i = 1; i < v.factors.size(); ++i)
            acc = acc * sigma_node(v.factors[i].node(), n, bp);
          return acc;
        } else if constexpr (std::is_same_v<T, Scale>) {
          Matrix m = sigma_node(v.child[0].node(), n, bp);
          m *= v.c;
          return m;
        }
      },
      node);
}

}  // namespace

SymbolMatrix sigma_eval(const Expr& e, const SpaceModel& space, const BundlePoint& bp) {
  (void)space;
  const int n = e.size();
  const SpiralSet fibre(0.0, 1.0, bp.delta, bp.r);
  if (!spiral_membership(bp.mu, fibre, 1e-7))
    throw Error(Error::Code::invalid_argument, "sigma: mu off the bundle fibre");
  return {sigma_node(e.node(), n, bp), bp.u, bp.mu};
}

// ---------------------------------------------------------------------------
// scalar criterion

namespace {

double fredholm_quantity_at(Complex left, Complex right, double delta, double r_of_t) {
  const Complex ratio = left / right;
  return -std::arg(ratio) / kTwoPi + delta * std::log(std::abs(ratio)) / kTwoPi + r_of_t;
}

double integer_distance(double x) { return std::abs(x - std::round(x)); }

}  // namespace

ScalarFredholmReport fredholm_scalar(const PCSymbol& a, const SpaceModel& space) {
  if (a.size() != 1)
    throw Error(Error::Code::invalid_argument, "scalar criterion: symbol must be 1x1");
  check_space(space);

  ScalarFredholmReport rep;
  rep.min_abs_value = kInf;

  double scale = 0.0;
  for (const auto& arc : a.arcs())
    for (const auto& v : arc.values) scale = std::max(scale, std::abs(v(0, 0)));
  for (const auto& j : a.jumps())
    scale = std::max({scale, std::abs(j.left(0, 0)), std::abs(j.right(0, 0))});
  rep.zero_tol = 1e-12 * std::max(1.0, scale);

  // (i) nonvanishing one-sided limits and arc values (densified between samples)
  for (const auto& j : a.jumps()) {
    for (const Complex v : {j.left(0, 0), j.right(0, 0)}) {
      rep.min_abs_value = std::min(rep.min_abs_value, std::abs(v));
      if (std::abs(v) <= rep.zero_tol) {
        rep.fredholm = false;
        rep.witnesses.push_back({FredholmWitness::Kind::limit_zero, j.u, std::abs(v)});
      }
    }
  }
  for (const auto& arc : a.arcs()) {
    const int steps = std::max<int>(1, 1024 / static_cast<int>(arc.u.size()));
    for (size_t i = 0; i + 1 < arc.u.size(); ++i) {
      for (int k = 0; k <= steps; ++k) {
        const double t = double(k) / steps;
        const Complex v = arc.values[i](0, 0) * (1.0 - t) + arc.values[i + 1](0, 0) * t;
        rep.min_abs_value = std::min(rep.min_abs_value, std::abs(v));
        if (std::abs(v) <= rep.zero_tol) {
          rep.fredholm = false;
          rep.witnesses.push_back(
              {FredholmWitness::Kind::arc_zero,
               wrap01(arc.u[i] + t * (arc.u[i + 1] - arc.u[i])), std::abs(v)});
          break;
        }
      }
    }
  }

  // (ii) integer test at jump points and weight points
  std::vector<double> checkpoints = a.jump_params();
  for (const auto& wp : space.weight.points()) checkpoints.push_back(wp.u);
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end(),
                                [](double x, double y) { return std::abs(x - y) < kParamTol; }),
                    checkpoints.end());
  for (double u : checkpoints) {
    const auto [left, right] = a.one_sided_limits(u);
    const Complex l = left(0, 0), r = right(0, 0);
    if (std::abs(l) <= rep.zero_tol || std::abs(r) <= rep.zero_tol) continue;  // witnessed above
    const double q = fredholm_quantity_at(l, r, space.delta_at(u), space.r_at(u));
    const double dist = integer_distance(q);
    rep.min_integer_distance = std::min(rep.min_integer_distance, dist);
    if (dist <= rep.integer_tol) {
      rep.fredholm = false;
      rep.witnesses.push_back({FredholmWitness::Kind::integer_quantity, u, q});
    }
  }
  if (rep.min_abs_value == kInf) rep.min_abs_value = 0.0;
  return rep;
}

SpiralSet local_spectrum(const SpaceModel& space, double u) {
  check_space(space);
  const double uu = wrap01(u);
  return SpiralSet(0.0, 1.0, space.delta_at(uu), space.r_at(uu));
}

JumpClassifier classify_jump(const PCSymbol& a, double u, const SpaceModel& space) {
  if (a.size() != 1)
    throw Error(Error::Code::invalid_argument, "jump classification: symbol must be 1x1");
  const double uu = wrap01(u);
  const auto [left, right] = a.one_sided_limits(uu);
  const Complex l = left(0, 0), r = right(0, 0);
  if (std::abs(l) == 0.0 || std::abs(r) == 0.0)
    throw Error(Error::Code::precondition, "jump classification: vanishing one-sided limit");
  const Complex ratio = l / r;
  JumpClassifier out;
  out.u = uu;
  out.gamma = Complex(std::arg(ratio) / kTwoPi, -std::log(std::abs(ratio)) / kTwoPi);
  out.fredholm_quantity = fredholm_quantity_at(l, r, space.delta_at(uu), space.r_at(uu));
  if (integer_distance(out.fredholm_quantity) <= 1e-9)
    throw Error(Error::Code::precondition,
                "jump classification: criterion quantity is an integer, no m exists");
  // unique integer with 0 < m + quantity < 1
  out.m = static_cast<int>(std::floor(-out.fredholm_quantity)) + 1;
  return out;
}

// ---------------------------------------------------------------------------
// bundle sweep

namespace {

// jump parameters of the expression plus the weight points
std::vector<double> sweep_checkpoints(const Expr& e, const SpaceModel& space) {
  std::vector<double> cps = e.jump_point_set();
  for (const auto& wp : space.weight.points()) cps.push_back(wp.u);
  std::sort(cps.begin(), cps.end());
  cps.erase(std::unique(cps.begin(), cps.end(),
                        [](double x, double y) { return std::abs(x - y) < kParamTol; }),
            cps.end());
  return cps;
}

template <typename Fn>
double golden_minimize(Fn&& f, double lo, double hi, int iters = 90) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iters && (b - a) > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? f1 : f2;
}

}  // namespace

AlgebraFredholmReport fredholm_algebra(const Expr& e, const SpaceModel& space,
                                       const SweepConfig& sweep) {
  check_space(space);
  const int n = e.size();
  AlgebraFredholmReport rep;
  rep.min_abs_det = kInf;

  auto consider = [&](const BundlePoint& bp, double ad) {
    if (ad < rep.min_abs_det) {
      rep.min_abs_det = ad;
      rep.argmin = bp;
    }
  };
  auto det_at = [&](const BundlePoint& bp) {
    return std::abs(sigma_node(e.node(), n, bp).det());
  };

  const std::vector<double> cps = sweep_checkpoints(e, space);
  for (double u : cps) {
    const double r = space.r_at(u);
    const double delta = space.delta_at(u);
    const SpiralSet fibre(0.0, 1.0, delta, r);
    // endpoints mu = 0, 1
    consider({u, 0.0, r, delta, -kInf}, det_at({u, 0.0, r, delta, -kInf}));
    consider({u, 1.0, r, delta, kInf}, det_at({u, 1.0, r, delta, kInf}));

    const auto pts = spiral_sample(fibre, -sweep.s_span, sweep.s_span, sweep.mu_samples);
    std::vector<double> dets(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      BundlePoint bp{u, pts[i].z, r, delta, pts[i].s};
      dets[i] = det_at(bp);
      consider(bp, dets[i]);
    }
    // refine around the deepest interior local minima
    std::vector<size_t> minima;
    for (size_t i = 1; i + 1 < pts.size(); ++i)
      if (dets[i] <= dets[i - 1] && dets[i] <= dets[i + 1]) minima.push_back(i);
    std::sort(minima.begin(), minima.end(),
              [&](size_t x, size_t y) { return dets[x] < dets[y]; });
    if (minima.size() > 3) minima.resize(3);
    for (size_t i : minima) {
      auto f = [&](double s) {
        BundlePoint bp{u, spiral_point(fibre, s), r, delta, s};
        const double d = det_at(bp);
        consider(bp, d);
        return d;
      };
      golden_minimize(f, pts[i - 1].s, pts[i + 1].s);
    }
  }

  // continuity grid: sigma is mu-independent between jumps, one mu=0 evaluation
  const int G = std::max(2, sweep.grid_points);
  std::vector<double> gu;
  std::vector<double> gdet;
  for (int k = 0; k < G; ++k) {
    const double u = double(k) / G;
    bool near_cp = false;
    for (double c : cps) {
      double d = std::abs(u - c);
      d = std::min(d, 1.0 - d);
      if (d < 1e-7) {
        near_cp = true;
        break;
      }
    }
    if (near_cp) continue;
    BundlePoint bp{u, 0.0, space.r_at(u), space.delta_at(u), -kInf};
    const double d = det_at(bp);
    consider(bp, d);
    gu.push_back(u);
    gdet.push_back(d);
  }
  // refine interior grid minima in u, staying between checkpoints
  std::vector<size_t> gmin;
  for (size_t i = 1; i + 1 < gu.size(); ++i)
    if (gdet[i] <= gdet[i - 1] && gdet[i] <= gdet[i + 1]) gmin.push_back(i);
  std::sort(gmin.begin(), gmin.end(), [&](size_t x, size_t y) { return gdet[x] < gdet[y]; });
  if (gmin.size() > 3) gmin.resize(3);
  for (size_t i : gmin) {
    double lo = gu[i - 1], hi = gu[i + 1];
    bool crosses = false;
    for (double c : cps)
      if (c > lo + kParamTol && c < hi - kParamTol) crosses = true;
    if (crosses) continue;
    auto f = [&](double u) {
      BundlePoint bp{u, 0.0, space.r_at(u), space.delta_at(u), -kInf};
      const double d = det_at(bp);
      consider(bp, d);
      return d;
    };
    golden_minimize(f, lo, hi);
  }

  if (rep.min_abs_det == kInf) rep.min_abs_det = 0.0;
  rep.fredholm = rep.min_abs_det > sweep.tol;
  return rep;
}

std::vector<SpectrumPoint> essential_spectrum(const Expr& e, const SpaceModel& space,
                                              const SweepConfig& sweep) {
  check_space(space);
  const int n = e.size();
  if (n > 4)
    throw Error(Error::Code::unsupported, "essential spectrum: symbol sizes above 4 unsupported");
  std::vector<SpectrumPoint> cloud;

  auto emit = [&](const BundlePoint& bp) {
    const Matrix m = sigma_node(e.node(), n, bp);
    for (const Complex lam : m.eigenvalues()) cloud.push_back({lam, bp.u, bp.s});
  };

  const std::vector<double> cps = sweep_checkpoints(e, space);
  for (double u : cps) {
    const double r = space.r_at(u);
    const double delta = space.delta_at(u);
    const SpiralSet fibre(0.0, 1.0, delta, r);
    emit({u, 0.0, r, delta, -kInf});
    emit({u, 1.0, r, delta, kInf});
    for (const auto& pt : spiral_sample(fibre, -sweep.s_span, sweep.s_span, sweep.mu_samples))
      emit({u, pt.z, r, delta, pt.s});
  }
  const int G = std::max(2, sweep.grid_points);
  for (int k = 0; k < G; ++k) {
    const double u = double(k) / G;
    bool near_cp = false;
    for (double c : cps) {
      double d = std::abs(u - c);
      d = std::min(d, 1.0 - d);
      if (d < 1e-7) {
        near_cp = true;
        break;
      }
    }
    if (near_cp) continue;
    emit({u, 0.0, space.r_at(u), space.delta_at(u), -kInf});
  }
  return cloud;
}

// ---------------------------------------------------------------------------
// index by winding of the spiral-completed symbol curve

namespace {

double principal_increment(Complex a, Complex b) {
  const Complex q = b * std::conj(a);
  return std::atan2(q.imag(), q.real());
}

double chord_distance_to_zero(Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(a);
  double t = -(a.real() * d.real() + a.imag() * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a + t * d);
}

// Append the truncated fibre spiral image from `left` to `right`, refining in
// s until consecutive argument increments are below pi/2.
void append_spiral(std::vector<Complex>& loop, const SpiralSet& arc, const SweepConfig& sweep,
                   int& budget) {
  const double eps = sweep.tail_eps * std::min(std::abs(arc.z1), std::abs(arc.z2));
  const auto [s_lo, s_hi] = spiral_tail_span(arc, std::max(eps, 1e-300));
  const int n0 = std::max<int>(64, static_cast<int>((s_hi - s_lo) * 4.0 * (1.0 + std::abs(arc.delta))));
  std::vector<std::pair<double, Complex>> pts;
  pts.reserve(static_cast<size_t>(n0) + 1);
  for (int i = 0; i <= n0; ++i) {
    const double s = s_lo + (s_hi - s_lo) * double(i) / n0;
    pts.emplace_back(s, spiral_point(arc, s));
  }
  loop.push_back(arc.z1);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    // bisect in s until the increment is tame
    while (std::abs(principal_increment(pts[i].second, pts[i + 1].second)) >= std::numbers::pi / 2) {
      if (--budget <= 0)
        throw Error(Error::Code::numeric, "index: refinement budget exhausted");
      const double sm = 0.5 * (pts[i].first + pts[i + 1].first);
      pts.insert(pts.begin() + static_cast<long>(i) + 1, {sm, spiral_point(arc, sm)});
    }
    loop.push_back(pts[i].second);
  }
  loop.push_back(pts.back().second);
  loop.push_back(arc.z2);
}

}  // namespace

IndexResult index_scalar(const PCSymbol& a, const SpaceModel& space, const SweepConfig& sweep) {
  const auto scalar_rep = fredholm_scalar(a, space);
  if (!scalar_rep.fredholm)
    throw Error(Error::Code::precondition, "index: operator is not Fredholm");

  std::vector<Complex> loop;
  const auto& jumps = a.jumps();
  const auto& arcs = a.arcs();
  int budget = sweep.max_refine_points;

  if (jumps.empty()) {
    for (size_t i = 0; i + 1 < arcs[0].u.size(); ++i) loop.push_back(arcs[0].values[i](0, 0));
  } else {
    for (size_t j = 0; j < jumps.size(); ++j) {
      // spiral completion from a(t-0) to a(t+0) traversed with increasing s
      const SpiralSet fibre(0.0, 1.0, space.delta_at(jumps[j].u), space.r_at(jumps[j].u));
      const SpiralSet image =
          spiral_affine_image(fibre, jumps[j].left(0, 0), jumps[j].right(0, 0));
      append_spiral(loop, image, sweep, budget);
      // then the continuity arc towards the next jump (its last sample is the
      // next jump's left limit, which the next spiral re-adds)
      const auto& arc = arcs[j];
      for (size_t i = 1; i + 1 < arc.u.size(); ++i) loop.push_back(arc.values[i](0, 0));
    }
  }
  // drop consecutive duplicates
  std::vector<Complex> clean;
  for (const Complex z : loop)
    if (clean.empty() || std::abs(z - clean.back()) > 0.0) clean.push_back(z);
  while (clean.size() > 1 && std::abs(clean.front() - clean.back()) == 0.0) clean.pop_back();
  if (clean.size() < 3) {
    // constant symbol: no winding
    return {0, 0.0};
  }

  double total = 0.0;
  for (size_t i = 0; i < clean.size(); ++i) {
    const Complex z0 = clean[i];
    const Complex z1 = clean[(i + 1) % clean.size()];
    if (chord_distance_to_zero(z0, z1) <= sweep.tol)
      throw Error(Error::Code::precondition, "index: symbol curve passes through 0");
    const double inc = principal_increment(z0, z1);
    if (std::abs(inc) >= std::numbers::pi * (1.0 - 1e-12))
      throw Error(Error::Code::numeric, "index: argument increment reached pi");
    total += inc;
  }
  const long w = std::lround(total / kTwoPi);
  const double residue = std::abs(total - kTwoPi * double(w));
  if (residue > 1e-6)
    throw Error(Error::Code::numeric, "index: accumulated argument is not a multiple of 2 pi");
  return {static_cast<int>(-w), residue};
}

}  // namespace sio
