#include "sio/spiral.hpp"

#include <cmath>
#include <numbers>

#include "sio/errors.hpp"

namespace sio {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
}  // namespace

SpiralSet::SpiralSet(Complex z1_, Complex z2_, double delta_, double r_)
    : z1(z1_), z2(z2_), delta(delta_), r(r_) {
  if (!finite(z1) || !finite(z2) || !std::isfinite(delta) || !std::isfinite(r))
    throw Error(Error::Code::invalid_argument, "spiral set: non-finite parameter");
  if (z1 == z2) throw Error(Error::Code::invalid_argument, "spiral set: z1 == z2");
}

bool spiral_membership(Complex z, const SpiralSet& sp, double tol) {
  if (tol <= 0.0) throw Error(Error::Code::invalid_argument, "spiral membership: tol must be > 0");
  if (!finite(z)) throw Error(Error::Code::invalid_argument, "spiral membership: non-finite point");
  if (z == sp.z1 || z == sp.z2) return true;
  const Complex w = (z - sp.z1) / (z - sp.z2);
  const double value = (std::arg(w) - sp.delta * std::log(std::abs(w))) / kTwoPi - sp.r;
  const double frac = value - std::floor(value);
  return frac <= tol || frac >= 1.0 - tol;
}

Complex spiral_point(const SpiralSet& sp, double s) {
  const Complex w = std::polar(std::exp(s), sp.delta * s + kTwoPi * sp.r);
  return sp.z1 + (sp.z2 - sp.z1) * (w / (w - 1.0));
}

std::vector<SpiralPoint> spiral_sample(const SpiralSet& sp, double s_min, double s_max, int count) {
  if (count < 2) throw Error(Error::Code::invalid_argument, "spiral sample: count must be >= 2");
  if (!(s_min < s_max)) throw Error(Error::Code::invalid_argument, "spiral sample: s_min >= s_max");
  std::vector<SpiralPoint> out;
  out.reserve(static_cast<size_t>(count));
  const double step = (s_max - s_min) / (count - 1);
  for (int i = 0; i < count; ++i) {
    double s = s_min + step * i;
    Complex w = std::polar(std::exp(s), sp.delta * s + kTwoPi * sp.r);
    if (std::abs(w - 1.0) < 1e-12) {
      s += step * 1e-6;  // w(s)=1 only at s=0 with integer r
      w = std::polar(std::exp(s), sp.delta * s + kTwoPi * sp.r);
      if (std::abs(w - 1.0) < 1e-12) continue;
    }
    out.push_back({sp.z1 + (sp.z2 - sp.z1) * (w / (w - 1.0)), s});
  }
  return out;
}

std::pair<double, double> spiral_tail_span(const SpiralSet& sp, double eps_tail) {
  if (eps_tail <= 0.0)
    throw Error(Error::Code::invalid_argument, "spiral tail span: eps_tail must be > 0");
  const double d = std::abs(sp.z2 - sp.z1);
  // |z(s)-z1| <= d e^s/(1-e^s) for s<0; the symmetric bound holds near z2.
  const double s = std::log(eps_tail / (d + eps_tail));
  return {s, -s};
}

SpiralSet spiral_affine_image(const SpiralSet& sp01, Complex a_minus, Complex a_plus) {
  if (std::abs(sp01.z1) > 1e-12 || std::abs(sp01.z2 - 1.0) > 1e-12)
    throw Error(Error::Code::invalid_argument, "spiral affine image: base set must have endpoints 0,1");
  if (!finite(a_minus) || !finite(a_plus))
    throw Error(Error::Code::invalid_argument, "spiral affine image: non-finite endpoint");
  if (a_minus == a_plus)
    throw Error(Error::Code::invalid_argument, "spiral affine image: degenerate jump (equal endpoints)");
  return SpiralSet(a_minus, a_plus, sp01.delta, sp01.r);
}

}  // namespace sio
