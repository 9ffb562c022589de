// Double logarithmic spiral sets S(z1,z2;delta,r): the level set of
//   arg((z-z1)/(z-z2)) - delta*log|(z-z1)/(z-z2)|  in  2*pi*(r+Z),
// together with both endpoints. delta=0 degenerates to a circular arc
// through the endpoints (a straight segment when additionally r=1/2).
#pragma once

#include <utility>
#include <vector>

#include "sio/linalg.hpp"

namespace sio {

struct SpiralSet {
  Complex z1;
  Complex z2;
  double delta = 0.0;
  double r = 0.5;  // membership is invariant under r -> r+1

  SpiralSet(Complex z1_, Complex z2_, double delta_, double r_);
};

struct SpiralPoint {
  Complex z;
  double s;  // canonical parameter, z(s) -> z1 as s -> -inf, -> z2 as s -> +inf
};

// True iff z is an endpoint or the defining congruence holds with the
// fractional part within tol of 0 or 1.
bool spiral_membership(Complex z, const SpiralSet& sp, double tol);

// Canonical parametrization z(s) = z1 + (z2-z1)*w/(w-1), w = exp(s + i*(delta*s + 2*pi*r)).
Complex spiral_point(const SpiralSet& sp, double s);

// count equally spaced parameters in [s_min, s_max]; points where w(s)=1
// (possible only for integer r at s=0) are perturbed or skipped.
std::vector<SpiralPoint> spiral_sample(const SpiralSet& sp, double s_min, double s_max, int count);

// Parameter range outside of which z(s) stays within eps_tail of an endpoint.
std::pair<double, double> spiral_tail_span(const SpiralSet& sp, double eps_tail);

// S(0,1;delta,r) mapped through mu -> a_minus + mu*(a_plus - a_minus),
// which carries it onto S(a_minus, a_plus; delta, r).
SpiralSet spiral_affine_image(const SpiralSet& sp01, Complex a_minus, Complex a_plus);

}  // namespace sio
