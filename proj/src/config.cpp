#include "sio/config.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "sio/errors.hpp"

namespace sio {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(Error::Code::config, msg); }

Complex parse_complex(const json& j, const char* what) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  bad(std::string(what) + ": expected a number or [re, im]");
}

Matrix parse_matrix(const json& j, int n, const char* what) {
  if (n == 1 && (j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number()))) {
    Matrix m(1);
    m(0, 0) = parse_complex(j, what);
    return m;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    bad(std::string(what) + ": expected an " + std::to_string(n) + "x" + std::to_string(n) +
        " matrix");
  Matrix m(n);
  for (int r = 0; r < n; ++r) {
    const json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad(std::string(what) + ": bad matrix row");
    for (int c = 0; c < n; ++c) m(r, c) = parse_complex(row[static_cast<size_t>(c)], what);
  }
  return m;
}

CurveModel parse_curve(const json& j) {
  if (!j.is_object()) bad("curve: expected an object");
  const std::string kind = j.value("kind", "circle");
  const int nodes = j.value("nodes", 1024);
  if (kind == "circle") {
    const Complex center = j.contains("center") ? parse_complex(j["center"], "curve.center")
                                                : Complex(0.0, 0.0);
    return CurveModel::circle(center, j.value("radius", 1.0), nodes);
  }
  if (kind == "ellipse") {
    const Complex center = j.contains("center") ? parse_complex(j["center"], "curve.center")
                                                : Complex(0.0, 0.0);
    return CurveModel::ellipse(center, j.value("rx", 1.0), j.value("ry", 0.5), nodes);
  }
  if (kind == "polyline") {
    if (!j.contains("points") || !j["points"].is_array()) bad("curve: polyline needs points");
    std::vector<Complex> pts;
    for (const auto& p : j["points"]) pts.push_back(parse_complex(p, "curve.points"));
    return CurveModel::polyline(std::move(pts), j.value("closed", true));
  }
  if (kind == "segment") {
    return CurveModel::segment(parse_complex(j.at("from"), "curve.from"),
                               parse_complex(j.at("to"), "curve.to"), nodes);
  }
  if (kind == "spiral_patch") {
    const Complex center = j.contains("center") ? parse_complex(j["center"], "curve.center")
                                                : Complex(0.0, 0.0);
    return CurveModel::spiral_patch(center, j.value("delta", 1.0), j.value("s_min", 1.0),
                                    j.value("s_max", 10.0), nodes);
  }
  bad("curve: unknown kind '" + kind + "'");
}

ExponentFunction parse_exponent(const json& j, const CurveModel& curve) {
  if (j.is_number()) return ExponentFunction::constant(j.get<double>());
  if (!j.is_object()) bad("exponent: expected a number or an object");
  const std::string kind = j.value("kind", "constant");
  const double dini = j.value("dini_constant", 1.0);
  if (kind == "constant") return ExponentFunction::constant(j.value("value", 2.0), dini);
  if (kind == "log_modulus") {
    // p(u) = base + amplitude * min(1, 1/(1 - log|tau(u) - tau(u0)|))
    const double base = j.value("base", 2.0);
    const double amp = j.value("amplitude", 1.0);
    const double u0 = j.value("u0", 0.0);
    if (!(base > 1.0)) bad("exponent: base must be > 1");
    if (amp < 0.0) bad("exponent: amplitude must be >= 0");
    const Complex anchor = curve.point(u0);
    auto fn = [curve, anchor, base, amp](double u) {
      const double d = std::abs(curve.point(u) - anchor);
      if (d <= 0.0) return base;
      const double t = 1.0 - std::log(d);
      return base + amp * (t >= 1.0 ? 1.0 / t : 1.0);
    };
    return ExponentFunction::from_function(fn, base, base + amp, dini);
  }
  if (kind == "sampled") {
    if (!j.contains("values") || !j["values"].is_array()) bad("exponent: sampled needs values");
    std::vector<double> vals;
    for (const auto& v : j["values"]) {
      if (!v.is_number()) bad("exponent: sampled values must be numbers");
      vals.push_back(v.get<double>());
    }
    std::vector<double> us;
    if (j.contains("u")) {
      for (const auto& v : j["u"]) us.push_back(v.get<double>());
    } else {
      if (static_cast<int>(vals.size()) != curve.node_count())
        bad("exponent: sampled values must match the curve nodes");
      for (int i = 0; i < curve.node_count(); ++i) us.push_back(curve.node_u(i));
    }
    return ExponentFunction::sampled(std::move(us), std::move(vals), dini);
  }
  bad("exponent: unknown kind '" + kind + "'");
}

PCSymbol parse_symbol(const json& j, const CurveModel& curve, const SpaceModel* space) {
  if (!j.is_object()) bad("symbol: expected an object");
  const std::string kind = j.value("kind", "jump");
  const int n = j.value("n", 1);
  if (n < 1 || n > 4) bad("symbol: n must be in 1..4");
  if (kind == "constant") return PCSymbol::constant(parse_matrix(j.at("value"), n, "symbol.value"));
  if (kind == "chi") {
    const double u = j.value("u", 0.0);
    const std::string arc = j.value("arc", "ramp");
    if (arc == "ramp") return PCSymbol::chi(u, n);
    if (arc == "spiral") {
      if (!space) bad("symbol: spiral chi needs the space model");
      return PCSymbol::chi_spiral(u, n, space->delta_at(u), space->r_at(u),
                                  j.value("samples", 512));
    }
    bad("symbol: unknown chi arc '" + arc + "'");
  }
  if (kind == "power") {
    if (n != 1) bad("symbol: power symbols are scalar");
    return PCSymbol::power(curve, j.value("k", 1));
  }
  if (kind == "jump") {
    const double u = j.value("u", 0.0);
    return PCSymbol::single_jump(u, parse_matrix(j.at("left"), n, "symbol.left"),
                                 parse_matrix(j.at("right"), n, "symbol.right"),
                                 j.value("arc_samples", 2));
  }
  if (kind == "jumps") {
    if (!j.contains("jumps") || !j["jumps"].is_array() || j["jumps"].empty())
      bad("symbol: jumps kind needs a jump list");
    std::vector<PCSymbol::Jump> jumps;
    for (const auto& jj : j["jumps"])
      jumps.push_back({jj.value("u", 0.0), parse_matrix(jj.at("left"), n, "symbol.left"),
                       parse_matrix(jj.at("right"), n, "symbol.right")});
    std::sort(jumps.begin(), jumps.end(),
              [](const PCSymbol::Jump& a, const PCSymbol::Jump& b) { return a.u < b.u; });
    // linear arcs between consecutive one-sided limits
    std::vector<PCSymbol::Arc> arcs;
    for (size_t i = 0; i < jumps.size(); ++i) {
      const auto& from = jumps[i];
      const auto& to = jumps[(i + 1) % jumps.size()];
      const double u_to = (i + 1 < jumps.size()) ? to.u : to.u + 1.0;
      PCSymbol::Arc arc;
      arc.u = {from.u, u_to};
      arc.values = {from.right, to.left};
      arcs.push_back(std::move(arc));
    }
    return PCSymbol::from_parts(n, std::move(jumps), std::move(arcs));
  }
  bad("symbol: unknown kind '" + kind + "'");
}

}  // namespace

AnalysisConfig load_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("config: expected a JSON object");

  AnalysisConfig cfg;
  try {
    cfg.space.curve = parse_curve(j.value("curve", json::object()));
    if (j.contains("whirl")) {
      if (!j["whirl"].is_array()) bad("whirl: expected a list");
      for (const auto& w : j["whirl"])
        cfg.space.curve.mark_whirl(w.value("u", 0.0), w.value("delta", 0.0));
    }
    if (cfg.space.curve.closed()) cfg.space.curve.validate();

    cfg.space.p = parse_exponent(j.value("exponent", json(2.0)), cfg.space.curve);

    if (j.contains("weights")) {
      if (!j["weights"].is_array()) bad("weights: expected a list");
      std::vector<std::pair<double, double>> by_u;
      std::vector<std::pair<Complex, double>> by_pt;
      for (const auto& w : j["weights"]) {
        if (w.contains("u"))
          by_u.emplace_back(w.at("u").get<double>(), w.value("lambda", 0.0));
        else if (w.contains("point"))
          by_pt.emplace_back(parse_complex(w.at("point"), "weights.point"),
                             w.value("lambda", 0.0));
        else
          bad("weights: entries need u or point");
      }
      if (!by_pt.empty() && !by_u.empty()) bad("weights: mix of u and point entries");
      cfg.space.weight =
          by_pt.empty()
              ? KhvedelidzeWeight::at_params(cfg.space.curve, by_u)
              : KhvedelidzeWeight::at_points(cfg.space.curve, by_pt,
                                             1e-3 * std::max(1.0, cfg.space.curve.diameter()));
    }

    if (j.contains("symbols")) {
      if (!j["symbols"].is_object()) bad("symbols: expected an object");
      for (const auto& [name, sj] : j["symbols"].items())
        cfg.symbols.emplace(name, parse_symbol(sj, cfg.space.curve, &cfg.space));
    }

    if (j.contains("expression")) {
      cfg.expression = j["expression"].get<std::string>();
      cfg.expr = parse_expr(cfg.expression, cfg.symbols);
    }

    if (j.contains("sweep")) {
      const json& s = j["sweep"];
      cfg.sweep.mu_samples = s.value("mu_samples", cfg.sweep.mu_samples);
      cfg.sweep.grid_points = s.value("grid_points", cfg.sweep.grid_points);
      cfg.sweep.s_span = s.value("s_span", cfg.sweep.s_span);
      cfg.sweep.tol = s.value("tol", cfg.sweep.tol);
      cfg.sweep.tail_eps = s.value("tail_eps", cfg.sweep.tail_eps);
      if (cfg.sweep.mu_samples < 2 || cfg.sweep.grid_points < 2 || cfg.sweep.tol <= 0.0 ||
          cfg.sweep.s_span <= 0.0)
        bad("sweep: invalid parameters");
    }
    cfg.seed = j.value("seed", 0);
    cfg.dini_pair_budget = j.value("dini_pair_budget", cfg.dini_pair_budget);
  } catch (const Error& e) {
    // invariant violations on loaded values are configuration errors; unmet
    // mathematical preconditions (e.g. weight point off the curve) keep
    // their own code
    if (e.code() == Error::Code::precondition) throw;
    if (e.code() == Error::Code::config || e.code() == Error::Code::parse) throw;
    bad(e.what());
  } catch (const std::exception& e) {
    bad(std::string("config: ") + e.what());
  }
  return cfg;
}

}  // namespace sio
