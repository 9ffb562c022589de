#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "sio/calculus.hpp"
#include "sio/errors.hpp"
#include "sio/oracles.hpp"

using sio::BundlePoint;
using sio::Complex;
using sio::CurveModel;
using sio::Expr;
using sio::ExponentFunction;
using sio::KhvedelidzeWeight;
using sio::Matrix;
using sio::PCSymbol;
using sio::SpaceModel;
using sio::SpiralSet;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix m1(Complex c) {
  Matrix m(1);
  m(0, 0) = c;
  return m;
}

SpaceModel plain_space(double p = 2.0) {
  SpaceModel s;
  s.curve = CurveModel::circle(0.0, 1.0, 512);
  s.p = ExponentFunction::constant(p);
  return s;
}

// circle space with a weight and a whirl mark placed at the given parameter
SpaceModel marked_space(double u, double p, double lambda, double delta) {
  SpaceModel s;
  s.curve = CurveModel::circle(0.0, 1.0, 512);
  s.curve.mark_whirl(u, delta);
  s.p = ExponentFunction::constant(p);
  if (lambda != 0.0) s.weight = KhvedelidzeWeight::at_params(s.curve, {{u, lambda}});
  return s;
}

BundlePoint fibre_point(const SpaceModel& space, double u, double s) {
  const SpiralSet fibre(0.0, 1.0, space.delta_at(u), space.r_at(u));
  return sio::make_bundle_point(space, u, sio::spiral_point(fibre, s), 1e-6);
}

}  // namespace

TEST_CASE("sigma on generators") {
  const auto space = plain_space();
  const BundlePoint bp = fibre_point(space, 0.1, 0.8);

  const auto sS = sio::sigma_eval(Expr::S(), space, bp);
  CHECK(sS.mat.size() == 2);
  CHECK(sS.mat(0, 0) == Complex(1.0));
  CHECK(sS.mat(1, 1) == Complex(-1.0));
  CHECK(sS.mat(0, 1) == Complex(0.0));
  CHECK(sio::max_abs_diff(sS.mat * sS.mat, Matrix::identity(2)) == 0.0);

  // constant symbol: the jump blocks vanish for every mu
  const Complex v(1.3, -0.4);
  const auto sc = sio::sigma_eval(Expr::mul(PCSymbol::constant(1, v)), space, bp);
  CHECK(std::abs(sc.mat(0, 0) - v) < 1e-15);
  CHECK(std::abs(sc.mat(1, 1) - v) < 1e-15);
  CHECK(std::abs(sc.mat(0, 1)) < 1e-15);

  // mu = 0 endpoint: diag(a(t-0), a(t+0))
  const auto a = PCSymbol::single_jump(0.1, m1(Complex(2.0, 1.0)), m1(Complex(-1.0, 0.5)));
  const BundlePoint bp0 = sio::make_bundle_point(space, 0.1, 0.0);
  const auto s0 = sio::sigma_eval(Expr::mul(a), space, bp0);
  CHECK(std::abs(s0.mat(0, 0) - Complex(2.0, 1.0)) < 1e-15);
  CHECK(std::abs(s0.mat(1, 1) - Complex(-1.0, 0.5)) < 1e-15);
  CHECK(std::abs(s0.mat(0, 1)) < 1e-15);

  // off-bundle mu is rejected
  CHECK_THROWS_AS(sio::make_bundle_point(space, 0.1, Complex(0.5, 0.4)), sio::Error);
}

TEST_CASE("sigma idempotents and homomorphism identities") {
  const auto space = plain_space();
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> U(-1.0, 1.0);

  std::map<std::string, PCSymbol> binds;
  binds.emplace("x", PCSymbol::chi(0.1, 1));
  const Expr ppp = sio::parse_expr("P*P - P", binds);

  for (int k = 0; k < 20; ++k) {
    const BundlePoint bp = fibre_point(space, 0.1, 8.0 * U(rng));
    CHECK(sio::max_abs(sio::sigma_eval(ppp, space, bp).mat) < 1e-15);

    const auto sP = sio::sigma_eval(Expr::P(), space, bp).mat;
    CHECK(sio::max_abs_diff(sP * sP, sP) < 1e-12);

    // the chi generator evaluates to the two-projections q matrix; idempotent
    const auto sq = sio::sigma_eval(Expr::mul(PCSymbol::chi(0.1, 1)), space, bp).mat;
    CHECK(sio::max_abs_diff(sq * sq, sq) < 1e-12);
    CHECK(std::abs(sq(0, 0) - bp.mu) < 1e-15);
    CHECK(std::abs(sq(0, 1) - std::sqrt(bp.mu * (1.0 - bp.mu))) < 1e-15);
    CHECK(std::abs(sq(1, 1) - (1.0 - bp.mu)) < 1e-15);

    // compact placeholder maps to the zero matrix
    CHECK(sio::max_abs(sio::sigma_eval(Expr::compact(), space, bp).mat) == 0.0);
  }
}

TEST_CASE("sigma respects pointwise symbol products") {
  const auto space = plain_space();
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + (k % 2);
    Matrix al(n), ar(n), bl(n), br(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        al(i, j) = Complex(U(rng), U(rng));
        ar(i, j) = Complex(U(rng), U(rng));
        bl(i, j) = Complex(U(rng), U(rng));
        br(i, j) = Complex(U(rng), U(rng));
      }
    const auto a = PCSymbol::single_jump(0.1, al, ar);
    const auto b = PCSymbol::single_jump(0.1, bl, br);
    const auto ab = a * b;
    const BundlePoint bp = fibre_point(space, 0.1, 8.0 * U(rng));
    const auto sa = sio::sigma_eval(Expr::mul(a), space, bp).mat;
    const auto sb = sio::sigma_eval(Expr::mul(b), space, bp).mat;
    const auto sab = sio::sigma_eval(Expr::mul(ab), space, bp).mat;
    CHECK(sio::max_abs_diff(sab, sa * sb) < 1e-12);

    const auto sum = sio::sigma_eval(Expr::mul(a + b), space, bp).mat;
    CHECK(sio::max_abs_diff(sum, sa + sb) < 1e-12);
  }
}

TEST_CASE("sign of the square root does not change determinants") {
  // conjugation by diag(E,-E) flips the off-diagonal blocks, which is the
  // other branch of sqrt(mu(1-mu)); determinants are invariant
  const auto space = plain_space();
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::map<std::string, PCSymbol> binds;
  binds.emplace("a", PCSymbol::single_jump(0.1, m1(Complex(1.0, 0.3)), m1(Complex(-0.7, 1.1))));
  binds.emplace("b", PCSymbol::chi(0.1, 1));
  for (const char* text : {"a*P + Q", "a*b*S + 2*I", "S*a*S + b", "(a + b)*(a - b)"}) {
    const Expr e = sio::parse_expr(text, binds);
    for (int k = 0; k < 10; ++k) {
      const BundlePoint bp = fibre_point(space, 0.1, 6.0 * U(rng));
      const Matrix m = sio::sigma_eval(e, space, bp).mat;
      Matrix flipped = m;
      const int n = m.size() / 2;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          flipped(i, j + n) = -m(i, j + n);
          flipped(i + n, j) = -m(i + n, j);
        }
      CHECK(std::abs(m.det() - flipped.det()) < 1e-12 * std::max(1.0, std::abs(m.det())));
    }
  }
}

TEST_CASE("scalar fredholm criterion") {
  // chi - 1/2 on the Lebesgue-type space p=2: quantity lands exactly on an
  // integer (0.5 is on the degenerate segment spectrum), so not Fredholm
  {
    const auto space = plain_space();
    const auto a = PCSymbol::chi(0.25, 1) - Complex(0.5);
    const auto rep = sio::fredholm_scalar(a, space);
    CHECK_FALSE(rep.fredholm);
    bool saw_integer = false;
    for (const auto& w : rep.witnesses)
      if (w.kind == sio::FredholmWitness::Kind::integer_quantity) {
        saw_integer = true;
        CHECK(std::abs(w.value - std::round(w.value)) < 1e-12);
      }
    CHECK(saw_integer);
  }
  // constant nonzero symbol is Fredholm
  {
    const auto space = plain_space();
    const auto rep = sio::fredholm_scalar(PCSymbol::constant(1, 1.0), space);
    CHECK(rep.fredholm);
    CHECK(rep.witnesses.empty());
  }
  // jump 1 -> i with a whirl mark delta = 1: quantity 1/4 + 0 + 1/2 = 3/4
  {
    const auto space = marked_space(0.25, 2.0, 0.0, 1.0);
    const auto a = PCSymbol::single_jump(0.25, m1(1.0), m1(Complex(0.0, 1.0)));
    const auto rep = sio::fredholm_scalar(a, space);
    CHECK(rep.fredholm);
    CHECK(rep.min_integer_distance == doctest::Approx(0.25).epsilon(1e-9));
  }
  // boundedness precondition: refuse with reason
  {
    auto space = plain_space();
    space.weight = KhvedelidzeWeight::at_params(space.curve, {{0.5, 0.5}});  // 1/2+1/2 = 1
    CHECK_THROWS_AS(sio::fredholm_scalar(PCSymbol::constant(1, 1.0), space), sio::Error);
  }
  // weight point is checked even where the symbol is continuous
  {
    auto space = marked_space(0.5, 2.0, 0.3, 0.0);
    const auto rep = sio::fredholm_scalar(PCSymbol::constant(1, 2.0), space);
    CHECK(rep.fredholm);
    CHECK(rep.min_integer_distance == doctest::Approx(0.2).epsilon(1e-9));  // 1/2+0.3 = 0.8
  }
}

TEST_CASE("jump classification") {
  const auto space = plain_space();

  // continuity point: gamma = 0, m = 0 under the boundedness hypothesis
  const auto c = sio::classify_jump(PCSymbol::constant(1, 3.0), 0.4, space);
  CHECK(std::abs(c.gamma) == 0.0);
  CHECK(c.m == 0);
  CHECK(c.fredholm_quantity == doctest::Approx(0.5));

  // jump 1 -> i: gamma = -1/4 exactly (arg(1/i) = -pi/2, log|1/i| = 0)
  const auto a1 = PCSymbol::single_jump(0.25, m1(1.0), m1(Complex(0.0, 1.0)));
  const auto c1 = sio::classify_jump(a1, 0.25, space);
  CHECK(std::abs(c1.gamma - Complex(-0.25, 0.0)) < 1e-15);

  // jump e -> 1: Re gamma = 0, Im gamma = -1/(2 pi)
  const auto a2 = PCSymbol::single_jump(0.25, m1(std::exp(1.0)), m1(1.0));
  const auto c2 = sio::classify_jump(a2, 0.25, space);
  CHECK(std::abs(c2.gamma.real()) < 1e-15);
  CHECK(c2.gamma.imag() == doctest::Approx(-1.0 / (2.0 * kPi)).epsilon(1e-12));

  // exp(2 pi i gamma) = a(t-0)/a(t+0) on random jumps, and m is the unique
  // integer in the admissible window
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const Complex l = std::polar(0.3 + 2.0 * U(rng), 2.0 * kPi * U(rng));
    const Complex r = std::polar(0.3 + 2.0 * U(rng), 2.0 * kPi * U(rng));
    const auto space2 = marked_space(0.25, 2.0, 0.4 * U(rng) - 0.2, 4.0 * U(rng) - 2.0);
    PCSymbol a = PCSymbol::single_jump(0.25, m1(l), m1(r));
    sio::JumpClassifier jc;
    try {
      jc = sio::classify_jump(a, 0.25, space2);
    } catch (const sio::Error&) {
      continue;  // quantity within tolerance of an integer: no m exists
    }
    const Complex back = std::exp(Complex(0.0, 2.0 * kPi) * jc.gamma);
    CHECK(std::abs(back - l / r) <= 1e-12 * std::abs(l / r));
    int count = 0;
    for (int m = -10; m <= 10; ++m)
      if (0.0 < m + jc.fredholm_quantity && m + jc.fredholm_quantity < 1.0) ++count;
    CHECK(count == 1);
    CHECK(0.0 < jc.m + jc.fredholm_quantity);
    CHECK(jc.m + jc.fredholm_quantity < 1.0);
  }
}

TEST_CASE("local spectrum degenerations") {
  // p = 2: the segment [0,1]
  {
    const auto sp = sio::local_spectrum(plain_space(2.0), 0.3);
    CHECK(sp.delta == 0.0);
    CHECK(sp.r == doctest::Approx(0.5));
    CHECK(sio::spiral_membership(0.5, sp, 1e-9));
    for (const auto& pt : sio::spiral_sample(sp, -8.0, 8.0, 200))
      CHECK(std::abs(pt.z.imag()) < 1e-9);
  }
  // p = 4: circular arc through 0 and 1 with center (1/2, 0), radius 1/2
  {
    const auto sp = sio::local_spectrum(plain_space(4.0), 0.3);
    CHECK(sp.r == doctest::Approx(0.25));
    for (const auto& pt : sio::spiral_sample(sp, -8.0, 8.0, 200))
      CHECK(std::abs(std::abs(pt.z - Complex(0.5, 0.0)) - 0.5) < 1e-9);
  }
  // probes on / off the set line up with the scalar criterion
  {
    const auto space = marked_space(0.25, 2.0, 0.0, 1.0);
    const auto sp = sio::local_spectrum(space, 0.25);
    const auto chi = PCSymbol::chi_spiral(0.25, 1, sp.delta, sp.r, 512);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int on_checked = 0, off_checked = 0;
    for (int k = 0; k < 40; ++k) {
      const double s = 12.0 * U(rng) - 6.0;
      const Complex on = sio::spiral_point(sp, s);
      const auto rep_on = sio::fredholm_scalar(chi - on, space);
      CHECK_FALSE(rep_on.fredholm);
      ++on_checked;

      Complex off(2.0 * U(rng) + 1.5, 2.0 * U(rng) + 0.5);
      const auto rep_off = sio::fredholm_scalar(chi - off, space);
      CHECK(rep_off.fredholm);
      ++off_checked;
    }
    CHECK(on_checked == 40);
    CHECK(off_checked == 40);
  }
}

TEST_CASE("algebra fredholm sweep") {
  const auto space = plain_space();
  sio::SweepConfig sweep;

  std::map<std::string, PCSymbol> binds;
  binds.emplace("a", PCSymbol::chi(0.25, 1));

  const auto rid = sio::fredholm_algebra(sio::parse_expr("I", binds), space, sweep);
  CHECK(rid.fredholm);
  CHECK(rid.min_abs_det == doctest::Approx(1.0));

  const auto rp = sio::fredholm_algebra(sio::parse_expr("P", binds), space, sweep);
  CHECK_FALSE(rp.fredholm);
  CHECK(rp.min_abs_det < 1e-14);

  // scalar a P + Q: verdicts match the closed-form criterion
  std::mt19937 rng(512);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int agreements = 0;
  for (int k = 0; k < 100; ++k) {
    const double delta = 4.0 * U(rng) - 2.0;
    const double target = 0.05 + 0.9 * U(rng);  // 1/p + lambda
    const auto sp2 = marked_space(0.25, 2.0, target - 0.5, delta);
    Complex l = std::polar(0.5 + U(rng), 2.0 * kPi * U(rng));
    Complex r = std::polar(0.5 + U(rng), 2.0 * kPi * U(rng));
    if (std::abs(l - r) < 0.1) l += 0.2;
    const auto a = PCSymbol::single_jump(0.25, m1(l), m1(r), 64);
    const auto scalar_rep = sio::fredholm_scalar(a, sp2);
    if (scalar_rep.min_integer_distance < 1e-6) continue;  // boundary band
    const Expr e = Expr::mul(a, "a") * Expr::P() + Expr::Q();
    const auto sweep_rep = sio::fredholm_algebra(e, sp2, sweep);
    CHECK(sweep_rep.fredholm == scalar_rep.fredholm);
    agreements += (sweep_rep.fredholm == scalar_rep.fredholm);
  }
  CHECK(agreements > 90);
}

TEST_CASE("essential spectrum clouds") {
  const auto space = plain_space();
  sio::SweepConfig sweep;
  sweep.mu_samples = 128;
  sweep.grid_points = 128;
  std::map<std::string, PCSymbol> binds;
  binds.emplace("two", PCSymbol::constant(1, 2.0));
  binds.emplace("x", PCSymbol::chi(0.25, 1));

  // 2P + Q: {1, 2}
  for (const auto& pt :
       sio::essential_spectrum(sio::parse_expr("two*P + Q", binds), space, sweep)) {
    const double d = std::min(std::abs(pt.lambda - Complex(1.0)), std::abs(pt.lambda - Complex(2.0)));
    CHECK(d < 1e-9);
  }
  // S: {1, -1}
  for (const auto& pt : sio::essential_spectrum(sio::parse_expr("S", binds), space, sweep)) {
    const double d = std::min(std::abs(pt.lambda - Complex(1.0)), std::abs(pt.lambda + Complex(1.0)));
    CHECK(d < 1e-9);
  }
  // chi P + Q: spiral fibre values, arc values, and 1
  const auto cloud = sio::essential_spectrum(sio::parse_expr("x*P + Q", binds), space, sweep);
  const SpiralSet seg(0.0, 1.0, 0.0, 0.5);
  int spiralish = 0;
  for (const auto& pt : cloud) {
    const bool near_one = std::abs(pt.lambda - Complex(1.0)) < 1e-9;
    const bool on_set = sio::spiral_membership(pt.lambda, seg, 1e-6);
    const bool on_arc = pt.lambda.real() >= -1e-9 && pt.lambda.real() <= 1.0 + 1e-9 &&
                        std::abs(pt.lambda.imag()) < 1e-9;
    CHECK((near_one || on_set || on_arc));
    spiralish += on_set;
  }
  CHECK(spiralish > 100);
}

TEST_CASE("index of power symbols and random jumps") {
  sio::SweepConfig sweep;
  SpaceModel space;
  space.curve = CurveModel::circle(0.0, 1.0, 1024);
  space.p = ExponentFunction::constant(2.0);

  CHECK(sio::index_scalar(PCSymbol::constant(1, 1.0), space, sweep).index == 0);
  for (int k = -3; k <= 3; ++k) {
    const auto tau_k = PCSymbol::power(space.curve, k);
    CHECK(sio::index_scalar(tau_k, space, sweep).index == -k);
  }
  // invariance under positive scaling
  const auto tau2 = PCSymbol::power(space.curve, 2);
  const auto scaled = tau2 * PCSymbol::constant(1, 7.5);
  CHECK(sio::index_scalar(scaled, space, sweep).index == -2);

  // single-jump configs: agreement with the chord winding + m_t oracle
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int done = 0;
  for (int k = 0; k < 30 && done < 20; ++k) {
    const double delta = 4.0 * U(rng) - 2.0;
    const double target = 0.05 + 0.9 * U(rng);
    const auto sp2 = marked_space(0.25, 2.0, target - 0.5, delta);
    const Complex l = std::polar(0.5 + U(rng), 2.0 * kPi * U(rng));
    const Complex r = std::polar(0.5 + U(rng), 2.0 * kPi * U(rng));
    if (std::abs(l - r) < 0.1) continue;
    Complex q = r * std::conj(l);
    if (std::abs(std::atan2(q.imag(), q.real())) > kPi - 0.05) continue;  // chord ambiguity
    const auto a = PCSymbol::single_jump(0.25, m1(l), m1(r), 64);
    sio::IndexResult res;
    try {
      res = sio::index_scalar(a, sp2, sweep);
    } catch (const sio::Error&) {
      continue;  // not Fredholm for this draw
    }
    const auto jc = sio::classify_jump(a, 0.25, sp2);
    std::vector<Complex> loop;
    for (size_t i = 0; i < a.arcs()[0].u.size(); ++i) loop.push_back(a.arcs()[0].values[i](0, 0));
    const auto w = sio::oracles::winding_oracle(loop);
    CHECK(res.index == -(w.winding + jc.m));
    CHECK(res.residue < 1e-6);
    ++done;
  }
  CHECK(done == 20);

  // refusal on non-Fredholm input
  const auto space2 = plain_space();
  const auto bad = PCSymbol::chi(0.25, 1) - Complex(0.5);
  CHECK_THROWS_AS(sio::index_scalar(bad, space2, sweep), sio::Error);
}
