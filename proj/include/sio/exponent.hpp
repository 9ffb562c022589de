// Variable exponent p(.) keyed by the arc parameter, with essential bounds
// and a claimed Dini-Lipschitz modulus constant A. The bounds 1 < inf <= sup
// < infinity are enforced at construction; whether the claimed A actually
// dominates the modulus is the business of dini_lipschitz_check.
#pragma once

#include <functional>
#include <vector>

#include "sio/linalg.hpp"

namespace sio {

class ExponentFunction {
 public:
  ExponentFunction() = default;  // constant exponent 2

  static ExponentFunction constant(double p, double dini_constant = 1.0);
  static ExponentFunction from_function(std::function<double(double)> fn, double ess_inf,
                                        double ess_sup, double dini_constant);
  // Values at given parameters, linear interpolation in between (wraps mod 1).
  static ExponentFunction sampled(std::vector<double> us, std::vector<double> values,
                                  double dini_constant);

  double at(double u) const;
  double ess_inf() const { return ess_inf_; }
  double ess_sup() const { return ess_sup_; }
  double dini_constant() const { return dini_constant_; }

  bool is_sampled() const { return !sample_u_.empty(); }
  const std::vector<double>& sample_u() const { return sample_u_; }

 private:
  std::function<double(double)> fn_;
  std::vector<double> sample_u_;
  std::vector<double> sample_v_;
  double ess_inf_ = 2.0;
  double ess_sup_ = 2.0;
  double dini_constant_ = 1.0;
};

// q(t) = p(t)/(p(t)-1); an involution.
ExponentFunction conjugate_exponent(const ExponentFunction& p);

}  // namespace sio
