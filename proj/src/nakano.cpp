#include "sio/nakano.hpp"

#include <cmath>

#include "sio/errors.hpp"

namespace sio {

SampledFunction SampledFunction::from_nodes(const CurveModel& curve,
                                            const std::function<Complex(double, Complex)>& fn) {
  SampledFunction f;
  const int n = curve.node_count();
  f.u.reserve(static_cast<size_t>(n));
  f.values.reserve(static_cast<size_t>(n));
  f.measure.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    f.u.push_back(curve.node_u(i));
    f.values.push_back(fn(curve.node_u(i), curve.node(i)));
    f.measure.push_back(curve.node_measure(i));
  }
  return f;
}

SampledFunction SampledFunction::constant(const CurveModel& curve, Complex c) {
  return from_nodes(curve, [c](double, Complex) { return c; });
}

namespace {

void check_nodes(const SampledFunction& f, const ExponentFunction& p) {
  if (f.u.size() != f.values.size() || f.u.size() != f.measure.size() || f.u.empty())
    throw Error(Error::Code::invalid_argument, "sampled function: inconsistent arrays");
  if (p.is_sampled()) {
    const auto& pu = p.sample_u();
    if (pu.size() != f.u.size())
      throw Error(Error::Code::invalid_argument, "modular: mismatched node sets");
    for (size_t i = 0; i < pu.size(); ++i)
      if (std::abs(pu[i] - f.u[i]) > 1e-12)
        throw Error(Error::Code::invalid_argument, "modular: mismatched node sets");
  }
}

double modular_scaled(const SampledFunction& f, const ExponentFunction& p, double inv_lambda) {
  double acc = 0.0;
  for (size_t i = 0; i < f.u.size(); ++i) {
    const double a = std::abs(f.values[i]) * inv_lambda;
    if (a == 0.0) continue;
    acc += std::pow(a, p.at(f.u[i])) * f.measure[i];
  }
  return acc;
}

}  // namespace

double modular(const SampledFunction& f, const ExponentFunction& p) {
  check_nodes(f, p);
  for (const Complex& v : f.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(Error::Code::invalid_argument, "modular: non-finite sample");
  return modular_scaled(f, p, 1.0);
}

double luxemburg_norm(const SampledFunction& f, const ExponentFunction& p, double tol) {
  if (tol <= 0.0) throw Error(Error::Code::invalid_argument, "luxemburg norm: tol must be > 0");
  check_nodes(f, p);
  double fmax = 0.0, total = 0.0;
  for (size_t i = 0; i < f.u.size(); ++i) {
    const Complex v = f.values[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(Error::Code::invalid_argument, "luxemburg norm: non-finite sample");
    fmax = std::max(fmax, std::abs(v));
    total += f.measure[i];
  }
  if (fmax == 0.0) return 0.0;

  // hi is an analytic upper bracket: m(f/hi,p) <= L/max(1,L) <= 1.
  double hi = fmax * std::pow(std::max(1.0, total), 1.0 / p.ess_inf());
  double lo = hi;
  while (modular_scaled(f, p, 1.0 / lo) < 1.0) {
    lo /= 2.0;
    if (lo < 1e-300) return 0.0;
  }
  while (modular_scaled(f, p, 1.0 / hi) > 1.0) hi *= 2.0;

  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double m = modular_scaled(f, p, 1.0 / mid);
    if (std::abs(m - 1.0) <= tol && (hi - lo) <= 1e-13 * mid) return mid;
    if (m > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace sio
