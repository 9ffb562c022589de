#include "sio/oracles.hpp"

#include <cmath>
#include <numbers>

#include "sio/errors.hpp"

namespace sio::oracles {

bool membership_oracle(Complex z, Complex z1, Complex z2, double delta, double r, double tol) {
  const double zx = z.real(), zy = z.imag();
  if (zx == z1.real() && zy == z1.imag()) return true;
  if (zx == z2.real() && zy == z2.imag()) return true;
  // w = (z - z1)/(z - z2), spelled out in real arithmetic
  const double ax = zx - z1.real(), ay = zy - z1.imag();
  const double bx = zx - z2.real(), by = zy - z2.imag();
  const double den = bx * bx + by * by;
  const double wx = (ax * bx + ay * by) / den;
  const double wy = (ay * bx - ax * by) / den;
  const double phi = std::atan2(wy, wx);
  const double logw = 0.5 * std::log(wx * wx + wy * wy);
  double x = (phi - delta * logw) / (2.0 * std::numbers::pi) - r;
  x -= std::floor(x);
  return x <= tol || 1.0 - x <= tol;
}

WindingResult winding_oracle(const std::vector<Complex>& closed_samples) {
  if (closed_samples.size() < 3)
    throw Error(Error::Code::invalid_argument, "winding oracle: need at least 3 samples");
  double total = 0.0;
  const size_t n = closed_samples.size();
  for (size_t i = 0; i < n; ++i) {
    const Complex a = closed_samples[i];
    const Complex b = closed_samples[(i + 1) % n];
    if (std::abs(a) == 0.0 || std::abs(b) == 0.0)
      throw Error(Error::Code::invalid_argument, "winding oracle: zero sample");
    const double inc = std::atan2((b * std::conj(a)).imag(), (b * std::conj(a)).real());
    if (std::abs(inc) >= std::numbers::pi * (1.0 - 1e-12))
      throw Error(Error::Code::precondition, "winding oracle: increment reached pi, refine input");
    total += inc;
  }
  WindingResult out;
  out.winding = static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
  out.residue = std::abs(total - 2.0 * std::numbers::pi * out.winding);
  return out;
}

double modular_bisect_oracle(const SampledFunction& f, const ExponentFunction& p) {
  double fmax = 0.0;
  for (const Complex& v : f.values) fmax = std::max(fmax, std::abs(v));
  if (fmax == 0.0) return 0.0;
  auto mod = [&](double lambda) {
    double acc = 0.0;
    for (size_t i = 0; i < f.values.size(); ++i) {
      const double a = std::abs(f.values[i]) / lambda;
      if (a > 0.0) acc += std::pow(a, p.at(f.u[i])) * f.measure[i];
    }
    return acc;
  };
  // coarse geometric scan for the crossing m(f/lambda) = 1
  double lo = fmax * 1e-9, hi = lo;
  double prev = mod(lo);
  for (int k = 0; k < 200; ++k) {
    hi = lo * 1.5;
    const double cur = mod(hi);
    if (prev >= 1.0 && cur <= 1.0) break;
    lo = hi;
    prev = cur;
  }
  // golden-section on |m - 1| (m is monotone, so this is unimodal)
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double g1 = std::abs(mod(x1) - 1.0), g2 = std::abs(mod(x2) - 1.0);
  for (int it = 0; it < 300 && (b - a) > 1e-14 * b; ++it) {
    if (g1 <= g2) {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - phi * (b - a);
      g1 = std::abs(mod(x1) - 1.0);
    } else {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + phi * (b - a);
      g2 = std::abs(mod(x2) - 1.0);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace sio::oracles
