#include "sio/exponent.hpp"

#include <algorithm>
#include <cmath>

#include "sio/errors.hpp"

namespace sio {

namespace {
void check_bounds(double lo, double hi) {
  if (!(lo > 1.0))
    throw Error(Error::Code::invalid_argument, "exponent: ess inf must be > 1");
  if (!(hi >= lo) || !std::isfinite(hi))
    throw Error(Error::Code::invalid_argument, "exponent: ess sup must be finite and >= ess inf");
}
}  // namespace

ExponentFunction ExponentFunction::constant(double p, double dini_constant) {
  check_bounds(p, p);
  ExponentFunction e;
  e.fn_ = [p](double) { return p; };
  e.ess_inf_ = e.ess_sup_ = p;
  e.dini_constant_ = dini_constant;
  return e;
}

ExponentFunction ExponentFunction::from_function(std::function<double(double)> fn, double ess_inf,
                                                 double ess_sup, double dini_constant) {
  check_bounds(ess_inf, ess_sup);
  ExponentFunction e;
  e.fn_ = std::move(fn);
  e.ess_inf_ = ess_inf;
  e.ess_sup_ = ess_sup;
  e.dini_constant_ = dini_constant;
  return e;
}

ExponentFunction ExponentFunction::sampled(std::vector<double> us, std::vector<double> values,
                                           double dini_constant) {
  if (us.size() != values.size() || us.size() < 1)
    throw Error(Error::Code::invalid_argument, "exponent: sample arrays mismatch");
  double lo = values[0], hi = values[0];
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (!(v > 1.0))
      throw Error(Error::Code::invalid_argument, "exponent: sample value <= 1");
  }
  check_bounds(lo, hi);
  ExponentFunction e;
  e.sample_u_ = std::move(us);
  e.sample_v_ = std::move(values);
  e.ess_inf_ = lo;
  e.ess_sup_ = hi;
  e.dini_constant_ = dini_constant;
  return e;
}

double ExponentFunction::at(double u) const {
  if (fn_) return fn_(u);
  const auto& us = sample_u_;
  const size_t n = us.size();
  if (n == 0) return ess_inf_;  // default-constructed: constant
  double v = u - std::floor(u);
  // locate the bracketing samples, wrapping around
  size_t hi = std::lower_bound(us.begin(), us.end(), v) - us.begin();
  const size_t lo = (hi == 0) ? n - 1 : hi - 1;
  if (hi == n) hi = 0;
  const double ulo = us[lo];
  double uhi = us[hi];
  double x = v;
  if (uhi <= ulo) uhi += 1.0;
  if (x < ulo) x += 1.0;
  const double t = (uhi == ulo) ? 0.0 : (x - ulo) / (uhi - ulo);
  return sample_v_[lo] * (1.0 - t) + sample_v_[hi] * t;
}

ExponentFunction conjugate_exponent(const ExponentFunction& p) {
  if (!(p.ess_inf() > 1.0))
    throw Error(Error::Code::invalid_argument, "conjugate exponent: p <= 1 somewhere");
  const double target_inf = p.ess_sup() / (p.ess_sup() - 1.0);
  const double target_sup = p.ess_inf() / (p.ess_inf() - 1.0);
  const double a = p.dini_constant() / ((p.ess_inf() - 1.0) * (p.ess_inf() - 1.0));
  if (p.is_sampled()) {
    std::vector<double> vs;
    vs.reserve(p.sample_u().size());
    for (double u : p.sample_u()) {
      const double v = p.at(u);
      if (!(v > 1.0))
        throw Error(Error::Code::invalid_argument, "conjugate exponent: p <= 1 at a sample");
      vs.push_back(v / (v - 1.0));
    }
    return ExponentFunction::sampled(p.sample_u(), std::move(vs), a);
  }
  return ExponentFunction::from_function([p](double u) {
    const double v = p.at(u);
    return v / (v - 1.0);
  }, target_inf, target_sup, a);
}

}  // namespace sio
