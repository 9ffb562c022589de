// Discretized Nakano space machinery: sampled functions on curve nodes with
// arc-length quadrature, the convex modular m(f,p), and the Luxemburg-Nakano
// norm computed by monotone bisection.
#pragma once

#include <functional>
#include <vector>

#include "sio/curve.hpp"
#include "sio/exponent.hpp"
#include "sio/linalg.hpp"

namespace sio {

struct SampledFunction {
  std::vector<double> u;        // node parameters
  std::vector<Complex> values;  // f(tau_i)
  std::vector<double> measure;  // |dtau|_i, positive, summing to curve length

  static SampledFunction from_nodes(const CurveModel& curve,
                                    const std::function<Complex(double, Complex)>& fn);
  static SampledFunction constant(const CurveModel& curve, Complex c);
};

// m(f,p) = sum |f(tau_i)|^{p(tau_i)} |dtau|_i
double modular(const SampledFunction& f, const ExponentFunction& p);

// inf{ lambda>0 : m(f/lambda, p) <= 1 }, resolved until |m(f/lambda,p)-1| <= tol
// (0 for f identically 0).
double luxemburg_norm(const SampledFunction& f, const ExponentFunction& p, double tol = 1e-10);

}  // namespace sio
