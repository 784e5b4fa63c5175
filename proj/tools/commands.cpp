#include "commands.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "output.hpp"
#include "report.hpp"
#include "solitonlab/bounds/bound_function.hpp"
#include "solitonlab/bounds/completeness.hpp"
#include "solitonlab/error.hpp"
#include "solitonlab/zoo/example_curve.hpp"
#include "solitonlab/zoo/grim_reaper.hpp"
#include "solitonlab/zoo/soliton_profile.hpp"

namespace solitonlab::cli {

namespace {

bool is_profile(const std::string& member) { return member == "s7" || member == "profile"; }

zoo::SolitonProfile make_profile(const RunConfig& c) {
  zoo::ProfileOptions opt;
  opt.delta = c.delta;
  return zoo::solve_profile_ode(zoo::build_phi(1.0), opt);
}

int grid_or(const RunConfig& c, int fallback, int minimum = 2) {
  const int n = c.grid.value_or(fallback);
  if (n < minimum) throw PreconditionError("--grid must be at least " + std::to_string(minimum));
  return n;
}

void emit(const RunConfig& c, std::ostream& os, const std::vector<Table>& tables, std::size_t csv_index = 0) {
  if (c.format.value_or(Format::csv) == Format::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& t : tables) j.push_back(to_json(t));
    os << (tables.size() == 1 ? j[0] : j).dump(2) << '\n';
  } else {
    write_csv(os, tables.at(csv_index));
  }
}

Table grim_table(int epsilon, double range, int n) {
  const auto g = zoo::grim_reaper(epsilon, 1.0, 2);
  Table t{epsilon < 0 ? "grim-lorentz" : "grim-riemann", {"x1", "u", "W", "H", "H_soliton", "residual"}, {}};
  for (int k = 0; k < n; ++k) {
    const std::vector<double> x{-range + 2.0 * range * k / (n - 1), 0.0};
    const auto p = g.at(x, 2);
    t.rows.push_back({x[0], p.u.value(), p.W.value(), graphs::mean_curvature(g, x),
                      graphs::mean_curvature_soliton(g, x), graphs::soliton_residual(g, x)});
  }
  return t;
}

}  // namespace

int cmd_zoo(const RunConfig& c, std::ostream& os) {
  if (is_profile(c.member)) {
    const auto p = make_profile(c);
    Table t{"profile", {"y", "z", "f", "w", "H", "phi", "K"}, {}};
    for (const auto& r : zoo::profile_table(p, grid_or(c, 201))) t.rows.push_back({r.y, r.z, r.f, r.w, r.H, r.phi, r.K});
    emit(c, os, {t});
    return 0;
  }
  if (c.member == "grim-lorentz" || c.member == "grim-riemann") {
    const bool lorentz = c.member == "grim-lorentz";
    const double range = c.range.value_or(lorentz ? 5.0 : 1.5);
    if (!(range > 0.0)) throw PreconditionError("--range must be positive");
    if (!lorentz && !(range < std::numbers::pi / 2)) {
      throw PreconditionError("--range must stay below pi/2 for the riemannian grim reaper");
    }
    emit(c, os, {grim_table(lorentz ? -1 : 1, range, grid_or(c, 501))});
    return 0;
  }
  throw PreconditionError("unknown --member '" + c.member + "' (expected s7, grim-lorentz or grim-riemann)");
}

int cmd_verify(const RunConfig& c, std::ostream& os) {
  VerifyConfig vc;
  vc.seed = c.seed;
  vc.tol = c.tol;
  if (c.grid) vc.samples = grid_or(c, 100, 1);
  const auto results = run_verify_suite(vc);
  if (c.format.value_or(Format::json) == Format::json) {
    os << report_json(results).dump(2) << '\n';
  } else {
    write_report_csv(os, results);
  }
  for (const auto& r : results) {
    if (!r.pass) std::cerr << "FAILED " << r.check << ": " << r.note << '\n';
  }
  return all_pass(results) ? 0 : 1;
}

int cmd_bounds(const RunConfig& c, std::ostream& os) {
  if (c.g_spec.empty()) throw PreconditionError("bounds: --g <spec> is required");
  const auto G = bounds::parse_bound_spec(c.g_spec);
  const auto& v = G.conditions();
  const double range = c.range.value_or(100.0);
  if (!(range > 0.0)) throw PreconditionError("--range must be positive");
  const int n = grid_or(c, 201);
  Table t{"bound", {"s", "G"}, {}};
  std::optional<bounds::BoundFunction> GM;
  if (c.gm) {
    GM = bounds::build_GM(G);
    t.columns.push_back("GM");
  }
  for (int k = 0; k < n; ++k) {
    const double s = range * k / (n - 1);
    t.rows.push_back({s, G(s)});
    if (GM) t.rows.back().push_back((*GM)(s));
  }
  if (c.format.value_or(Format::csv) == Format::json) {
    nlohmann::json j{{"spec", c.g_spec},
                     {"describe", G.describe()},
                     {"conditions",
                      {{"a", bounds::to_string(v.a)}, {"b", bounds::to_string(v.b)}, {"c", bounds::to_string(v.c)}}},
                     {"table", to_json(t)}};
    if (!v.note.empty()) j["conditions"]["note"] = v.note;
    os << j.dump(2) << '\n';
  } else {
    std::cerr << "conditions: a=" << bounds::to_string(v.a) << " b=" << bounds::to_string(v.b)
              << " c=" << bounds::to_string(v.c) << (v.note.empty() ? "" : " note: " + v.note) << '\n';
    write_csv(os, t);
  }
  return 0;
}

int cmd_growth(const RunConfig& c, std::ostream& os) {
  if (!is_profile(c.member)) throw PreconditionError("growth: only --member s7 has growth tables");
  if (c.table != "w" && c.table != "rM") throw PreconditionError("growth: --table must be w or rM");
  const auto p = make_profile(c);
  Table tw{"growth_w", {"w", "H", "H_over_w"}, {}};
  for (const auto& r : zoo::growth_ratio_r(p, c.wmax, grid_or(c, 20))) tw.rows.push_back({r.w, r.H, r.ratio});
  Table tr{"growth_rM", {"y", "r_M", "H", "H_over_sqrt_r_M"}, {}};
  for (const auto& r : zoo::growth_ratio_rM(p, p.y_max())) tr.rows.push_back({r.y, r.r_M, r.H, r.ratio});
  emit(c, os, {tw, tr}, c.table == "w" ? 0 : 1);
  return 0;
}

int cmd_length(const RunConfig& c, std::ostream& os) {
  if (c.curve == "directrix") {
    if (!(c.S > 0.0)) throw PreconditionError("--S must be positive");
    // 1 - tanh^2 underflows near |s| = 20, so the speed is taken as sech s.
    const int n = grid_or(c, 10, 1);
    Table t{"directrix", {"S", "length", "pi_minus_length"}, {}};
    for (int k = 1; k <= n; ++k) {
      const double S = c.S * k / n;
      const double L = zoo::directrix_length(S);
      t.rows.push_back({S, L, std::numbers::pi - L});
    }
    emit(c, os, {t});
    return 0;
  }
  if (c.curve == "plateau") {
    const auto curve = zoo::build_example_curve();
    const auto plane = chart::ChartMetric::product(chart::ChartMetric::euclidean(1), -1.0);
    const bounds::CurveSample graph{[&curve](double x) { return std::vector<double>{x, curve.value(x)}; },
                                    [&curve](double x) { return std::vector<double>{1.0, curve.derivative(x)}; }};
    const auto breaks = curve.breakpoints();
    Table t{"plateau", {"a", "b", "length"}, {}};
    for (int n = 0; n < 10; ++n) {
      const double a = 5.0 * n;
      t.rows.push_back({a, a + 5.0, bounds::curve_length(plane, graph, a, a + 5.0, breaks)});
    }
    t.rows.push_back({0.0, 50.0, bounds::curve_length(plane, graph, 0.0, 50.0, breaks)});
    emit(c, os, {t});
    return 0;
  }
  throw PreconditionError("unknown --curve '" + c.curve + "' (expected directrix or plateau)");
}

}  // namespace solitonlab::cli
