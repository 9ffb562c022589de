// Independent brute-force validators used by the test suites and the CLI's
// --verify mode. Deliberately naive and coded without reusing the main
// implementation paths, so that agreement between the two is evidence.
#pragma once

#include <vector>

#include "sio/exponent.hpp"
#include "sio/linalg.hpp"
#include "sio/nakano.hpp"

namespace sio::oracles {

// Spiral membership via two-argument arctangent and floor reduction.
bool membership_oracle(Complex z, Complex z1, Complex z2, double delta, double r,
                       double tol = 1e-9);

struct WindingResult {
  int winding = 0;
  double residue = 0.0;
};

// Argument-increment winding of a closed sample list about 0. Requires
// nonzero samples and consecutive increments below pi (the caller refines).
WindingResult winding_oracle(const std::vector<Complex>& closed_samples);

// Luxemburg norm by coarse scan plus golden-section bracketing of |m-1|.
double modular_bisect_oracle(const SampledFunction& f, const ExponentFunction& p);

}  // namespace sio::oracles
