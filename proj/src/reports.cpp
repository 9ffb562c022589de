#include "sio/reports.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include "json.hpp"
#include "sio/checks.hpp"
#include "sio/errors.hpp"
#include "sio/oracles.hpp"

namespace sio {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json num(double value, double tol) {
  ordered_json j;
  j["value"] = value;
  j["tol"] = tol;
  return j;
}

ordered_json cnum(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json sparam(double s) {
  if (std::isfinite(s)) return ordered_json(s);
  return ordered_json(s > 0 ? "inf" : "-inf");
}

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Recognizes "a*P + Q" shapes so the closed-form scalar engine can be used.
std::optional<std::pair<std::string, PCSymbol>> scalar_apq_shape(const AnalysisConfig& cfg) {
  const std::string s = strip_ws(cfg.expression);
  for (const auto& [name, sym] : cfg.symbols) {
    if (sym.size() != 1) continue;
    if (s == name + "*P+Q" || s == "Q+" + name + "*P") return std::make_pair(name, sym);
  }
  return std::nullopt;
}

const char* witness_kind(FredholmWitness::Kind k) {
  switch (k) {
    case FredholmWitness::Kind::arc_zero: return "arc_zero";
    case FredholmWitness::Kind::limit_zero: return "limit_zero";
    case FredholmWitness::Kind::integer_quantity: return "integer_quantity";
  }
  return "?";
}

ordered_json scalar_report_json(const ScalarFredholmReport& rep) {
  ordered_json j;
  j["fredholm"] = rep.fredholm;
  j["min_integer_distance"] = num(rep.min_integer_distance, rep.integer_tol);
  j["min_abs_value"] = num(rep.min_abs_value, rep.zero_tol);
  ordered_json ws = ordered_json::array();
  for (const auto& w : rep.witnesses) {
    ordered_json wj;
    wj["kind"] = witness_kind(w.kind);
    wj["u"] = num(w.u, 1e-9);
    wj["value"] = num(w.value, w.kind == FredholmWitness::Kind::integer_quantity ? rep.integer_tol
                                                                                 : rep.zero_tol);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

ordered_json sweep_report_json(const AlgebraFredholmReport& rep, const SweepConfig& sweep) {
  ordered_json j;
  j["fredholm"] = rep.fredholm;
  j["min_abs_det"] = num(rep.min_abs_det, sweep.tol);
  ordered_json am;
  am["u"] = num(rep.argmin.u, 0.0);
  am["mu"] = cnum(rep.argmin.mu);
  am["s"] = sparam(rep.argmin.s);
  am["r"] = num(rep.argmin.r, 0.0);
  am["delta"] = num(rep.argmin.delta, 0.0);
  j["argmin"] = std::move(am);
  return j;
}

// chord-completed winding of the symbol's arc samples (the wrap from one
// arc's end to the next arc's start is exactly the jump chord); the oracle
// side of the index cross-check
int oracle_index(const PCSymbol& a, const SpaceModel& space) {
  std::vector<Complex> loop;
  for (const auto& arc : a.arcs()) {
    const size_t last = a.jumps().empty() ? arc.u.size() - 1 : arc.u.size();
    for (size_t i = 0; i < last; ++i) loop.push_back(arc.values[i](0, 0));
  }
  const auto w = oracles::winding_oracle(loop);
  int msum = 0;
  for (const auto& j : a.jumps()) msum += classify_jump(a, j.u, space).m;
  return -(w.winding + msum);
}

}  // namespace

std::string report_check_bounded(const AnalysisConfig& cfg) {
  const auto bound = khvedelidze_check(cfg.space.curve, cfg.space.p, cfg.space.weight);
  const auto dini = dini_lipschitz_check(cfg.space.curve, cfg.space.p, cfg.dini_pair_budget);

  ordered_json j;
  j["command"] = "check-bounded";
  j["bounded"] = bound.bounded;
  ordered_json values = ordered_json::array();
  for (double v : bound.values) values.push_back(num(v, 0.0));
  j["values"] = std::move(values);
  ordered_json viols = ordered_json::array();
  for (const auto& v : bound.violations) {
    ordered_json vj;
    vj["k"] = v.k;
    vj["value"] = num(v.value, 0.0);
    viols.push_back(std::move(vj));
  }
  j["violations"] = std::move(viols);
  ordered_json dj;
  dj["pass"] = dini.pass;
  dj["vacuous"] = dini.vacuous;
  dj["worst_A"] = num(dini.worst_A, 0.0);
  dj["stored_A"] = num(cfg.space.p.dini_constant(), 0.0);
  dj["pairs_checked"] = dini.pairs_checked;
  j["dini"] = std::move(dj);
  j["exit"] = !dini.pass ? 3 : (bound.bounded ? 0 : 2);
  return j.dump(2) + "\n";
}

std::string report_fredholm(const AnalysisConfig& cfg, bool verify) {
  if (cfg.expression.empty())
    throw Error(Error::Code::config, "fredholm: config has no expression");
  ordered_json j;
  j["command"] = "fredholm";
  const auto shape = scalar_apq_shape(cfg);
  bool verdict;
  if (shape) {
    j["engine"] = "scalar";
    const auto rep = fredholm_scalar(shape->second, cfg.space);
    verdict = rep.fredholm;
    j["report"] = scalar_report_json(rep);
  } else {
    j["engine"] = "sweep";
    const auto rep = fredholm_algebra(cfg.expr, cfg.space, cfg.sweep);
    verdict = rep.fredholm;
    j["report"] = sweep_report_json(rep, cfg.sweep);
  }
  j["fredholm"] = verdict;
  bool pass = true;
  if (verify && shape) {
    const auto sweep_rep = fredholm_algebra(cfg.expr, cfg.space, cfg.sweep);
    ordered_json vj;
    vj["sweep"] = sweep_report_json(sweep_rep, cfg.sweep);
    vj["engines_agree"] = sweep_rep.fredholm == verdict;
    pass = sweep_rep.fredholm == verdict;
    j["verify"] = std::move(vj);
    j["verify_pass"] = pass;
  }
  j["exit"] = !pass ? 1 : (verdict ? 0 : 2);
  return j.dump(2) + "\n";
}

std::string report_index(const AnalysisConfig& cfg, bool verify) {
  const auto shape = scalar_apq_shape(cfg);
  if (!shape)
    throw Error(Error::Code::precondition,
                "index: only scalar expressions of the form a*P + Q are supported");
  const auto res = index_scalar(shape->second, cfg.space, cfg.sweep);
  ordered_json j;
  j["command"] = "index";
  j["index"] = res.index;
  j["residue"] = num(res.residue, 1e-6);
  bool pass = true;
  if (verify) {
    const int oracle = oracle_index(shape->second, cfg.space);
    ordered_json vj;
    vj["oracle_index"] = oracle;
    vj["agree"] = oracle == res.index;
    pass = oracle == res.index;
    j["verify"] = std::move(vj);
    j["verify_pass"] = pass;
  }
  j["exit"] = pass ? 0 : 1;
  return j.dump(2) + "\n";
}

std::string spectrum_csv(const AnalysisConfig& cfg) {
  if (cfg.expression.empty())
    throw Error(Error::Code::config, "spectrum: config has no expression");
  const auto cloud = essential_spectrum(cfg.expr, cfg.space, cfg.sweep);
  std::string out = "re_lambda,im_lambda,t_param,s_param\n";
  char buf[160];
  for (const auto& pt : cloud) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", pt.lambda.real(),
                  pt.lambda.imag(), pt.u, pt.s);
    out += buf;
  }
  return out;
}

namespace {

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string spectrum_svg(const AnalysisConfig& cfg) {
  if (cfg.expression.empty())
    throw Error(Error::Code::config, "spectrum: config has no expression");
  const auto cloud = essential_spectrum(cfg.expr, cfg.space, cfg.sweep);

  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  auto grow = [&](Complex z) {
    x0 = std::min(x0, z.real());
    x1 = std::max(x1, z.real());
    y0 = std::min(y0, z.imag());
    y1 = std::max(y1, z.imag());
  };
  for (const auto& pt : cloud) grow(pt.lambda);
  if (x0 > x1) {
    x0 = y0 = -1.0;
    x1 = y1 = 1.0;
  }
  const double mx = 0.08 * std::max(1e-6, x1 - x0), my = 0.08 * std::max(1e-6, y1 - y0);
  x0 -= mx;
  x1 += mx;
  y0 -= my;
  y1 += my;
  const double W = 640.0, H = 640.0;
  auto px = [&](double x) { return (x - x0) / (x1 - x0) * W; };
  auto py = [&](double y) { return H - (y - y0) / (y1 - y0) * H; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt6(W) + " " + fmt6(H) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // overlays for single-symbol configs: symbol range and jump spirals
  if (cfg.symbols.size() == 1 && cfg.symbols.begin()->second.size() == 1) {
    const PCSymbol& sym = cfg.symbols.begin()->second;
    for (const auto& arc : sym.arcs()) {
      svg += "<polyline fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" points=\"";
      for (size_t i = 0; i < arc.u.size(); ++i) {
        const Complex v = arc.values[i](0, 0);
        svg += fmt6(px(v.real())) + "," + fmt6(py(v.imag())) + " ";
      }
      svg += "\"/>\n";
    }
    for (const auto& jp : sym.jumps()) {
      const SpiralSet fibre(0.0, 1.0, cfg.space.delta_at(jp.u), cfg.space.r_at(jp.u));
      const SpiralSet image = spiral_affine_image(fibre, jp.left(0, 0), jp.right(0, 0));
      const auto [lo, hi] = spiral_tail_span(image, 1e-4);
      svg += "<polyline fill=\"none\" stroke=\"#3366cc\" stroke-width=\"1\" points=\"";
      for (const auto& sp : spiral_sample(image, lo, hi, 512))
        svg += fmt6(px(sp.z.real())) + "," + fmt6(py(sp.z.imag())) + " ";
      svg += "\"/>\n";
    }
  }
  for (const auto& pt : cloud)
    svg += "<circle cx=\"" + fmt6(px(pt.lambda.real())) + "\" cy=\"" + fmt6(py(pt.lambda.imag())) +
           "\" r=\"1.2\" fill=\"#cc3333\"/>\n";
  svg += "</svg>\n";
  return svg;
}

std::string report_verify(const AnalysisConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ordered_json j;
  bool pass = true;

  // spiral membership: samples of every checkpoint fibre against the oracle
  {
    int checked = 0, agree = 0;
    std::vector<double> cps = cfg.expression.empty() ? std::vector<double>{}
                                                     : cfg.expr.jump_point_set();
    for (const auto& wp : cfg.space.weight.points()) cps.push_back(wp.u);
    if (cps.empty()) cps.push_back(0.0);
    for (double u : cps) {
      const SpiralSet fibre(0.0, 1.0, cfg.space.delta_at(u), cfg.space.r_at(u));
      for (const auto& sp : spiral_sample(fibre, -8.0, 8.0, 100)) {
        ++checked;
        if (oracles::membership_oracle(sp.z, 0.0, 1.0, fibre.delta, fibre.r, 1e-6)) ++agree;
      }
      for (int k = 0; k < 100; ++k) {
        const Complex z(4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0);
        const bool main_says = spiral_membership(z, fibre, 1e-9);
        const bool oracle_says = oracles::membership_oracle(z, 0.0, 1.0, fibre.delta, fibre.r);
        ++checked;
        if (main_says == oracle_says) ++agree;
      }
    }
    ordered_json mj;
    mj["checked"] = checked;
    mj["agree"] = agree;
    j["membership"] = std::move(mj);
    pass = pass && checked == agree;
  }

  // Luxemburg norm against the scan/golden-section oracle
  {
    int checked = 0, agree = 0;
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double re = 2.0 * unit(rng) - 1.0, im = 2.0 * unit(rng) - 1.0;
      const double freq = 1.0 + std::floor(3.0 * unit(rng));
      const auto f = SampledFunction::from_nodes(cfg.space.curve, [&](double u, Complex) {
        return Complex(re + std::cos(2.0 * std::numbers::pi * freq * u), im);
      });
      const double main_norm = luxemburg_norm(f, cfg.space.p, 1e-12);
      const double oracle_norm = oracles::modular_bisect_oracle(f, cfg.space.p);
      const double rel = std::abs(main_norm - oracle_norm) / std::max(1e-300, main_norm);
      worst = std::max(worst, rel);
      ++checked;
      if (rel <= 1e-8) ++agree;
    }
    ordered_json nj;
    nj["checked"] = checked;
    nj["agree"] = agree;
    nj["worst_rel_diff"] = num(worst, 1e-8);
    j["norms"] = std::move(nj);
    pass = pass && checked == agree;
  }

  // sigma identities: sigma(S)^2 = Id, idempotency of the chi symbol matrix
  {
    int checked = 0, agree = 0;
    for (int k = 0; k < 50; ++k) {
      const double u = unit(rng);
      const SpiralSet fibre(0.0, 1.0, cfg.space.delta_at(u), cfg.space.r_at(u));
      const Complex mu = spiral_point(fibre, 16.0 * unit(rng) - 8.0);
      BundlePoint bp = make_bundle_point(cfg.space, u, mu, 1e-6);
      const auto sS = sigma_eval(Expr::S(), cfg.space, bp);
      const auto sP = sigma_eval(Expr::P(), cfg.space, bp);
      ++checked;
      if (max_abs_diff(sS.mat * sS.mat, Matrix::identity(2)) == 0.0 &&
          max_abs_diff(sP.mat * sP.mat, sP.mat) <= 1e-12)
        ++agree;
    }
    ordered_json sj;
    sj["checked"] = checked;
    sj["agree"] = agree;
    j["sigma"] = std::move(sj);
    pass = pass && checked == agree;
  }

  j["pass"] = pass;
  return j.dump(2) + "\n";
}

int report_exit_code(const std::string& report_json) {
  const auto j = nlohmann::json::parse(report_json);
  if (j.contains("exit")) return j["exit"].get<int>();
  return 0;
}

}  // namespace sio
