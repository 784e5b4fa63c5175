#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>

#include "output.hpp"
#include "report.hpp"
#include "solitonlab/bounds/jacobi.hpp"
#include "solitonlab/graphs/checks.hpp"
#include "solitonlab/graphs/lemma_x.hpp"
#include "solitonlab/numerics/random.hpp"
#include "solitonlab/zoo/example_curve.hpp"
#include "solitonlab/zoo/grim_reaper.hpp"
#include "solitonlab/zoo/soliton_profile.hpp"

namespace solitonlab::cli {

namespace {

using graphs::GraphHypersurface;
using numerics::Rng;

struct Sampled {
  std::vector<double> x;
  const GraphHypersurface* g;
};

// Identity checks sample both Lorentzian translators: the grim reaper on
// [-3, 3]^2 and the profile example on [-1, 1] x [-0.9, 0.9].
struct Fixtures {
  GraphHypersurface grim = zoo::grim_reaper(-1, 1.0, 2);
  zoo::SolitonProfile profile = zoo::solve_profile_ode(zoo::build_phi(1.0));
  GraphHypersurface example = zoo::profile_graph(profile);
  double kappa_example = 0.0;  // Sec >= -kappa on the sampled strip

  Fixtures() {
    double kmin = 0.0;
    for (int i = -900; i <= 900; ++i) kmin = std::min(kmin, profile.phi().gauss_curvature(i * 1e-3));
    kappa_example = -kmin;
  }

  std::vector<Sampled> points(Rng& rng, int n, bool include_example = true) const {
    std::vector<Sampled> out;
    for (int i = 0; i < n; ++i) out.push_back({{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)}, &grim});
    if (include_example) {
      for (int i = 0; i < n; ++i) out.push_back({{rng.uniform(-1.0, 1.0), rng.uniform(-0.9, 0.9)}, &example});
    }
    return out;
  }
};

// Per-check stream derived from the run seed, so adding a check never
// shifts the samples of another.
Rng stream(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ull;
  return Rng(seed ^ h);
}

struct Builder {
  CheckResult r;
  Builder(std::string name, std::string ref, double tol) {
    r.check = std::move(name);
    r.paper_ref = std::move(ref);
    r.tolerance = tol;
    r.pass = true;
  }
  void add(double residual, const std::string& where = {}) {
    ++r.samples;
    if (!(residual <= r.max_residual)) r.max_residual = std::isnan(residual) ? INFINITY : residual;
    if (!(residual <= r.tolerance)) fail(where.empty() ? "residual above tolerance" : where);
  }
  void fail(const std::string& why) {
    if (r.pass) r.note = why;
    r.pass = false;
  }
};

std::string at(const std::vector<double>& x) {
  return "at (" + format_number(x[0]) + ", " + format_number(x[1]) + ")";
}

using CheckFn = std::function<CheckResult(const Fixtures&, const VerifyConfig&)>;

double pick(const VerifyConfig& c, double fallback) { return c.tol ? *c.tol : fallback; }

CheckResult height_gradient(const Fixtures& fx, const VerifyConfig& c) {
  Builder b("height_gradient", "|grad h|^2 = eps (1 - H^2/c^2)", pick(c, 1e-6));
  Rng rng = stream(c.seed, b.r.check);
  for (const auto& s : fx.points(rng, c.samples)) b.add(graphs::height_gradient_check(*s.g, s.x).relative(), at(s.x));
  return b.r;
}

CheckResult hessian_height(const Fixtures& fx, const VerifyConfig& c) {
  Builder b("hessian_height", "c hess h(X,X) = eps H g(AX,X)", pick(c, 1e-6));
  Rng rng = stream(c.seed, b.r.check);
  for (const auto& s : fx.points(rng, c.samples)) {
    const auto p = s.g->at(s.x, 3);
    const Eigen::VectorXd X = graphs::sample_unit_vector(p.induced_metric(), rng);
    b.add(graphs::hessian_height_check(p, X).relative(), at(s.x));
  }
  return b.r;
}

CheckResult drift_laplacian_H(const Fixtures& fx, const VerifyConfig& c) {
  Builder b("drift_laplacian_H", "-eps Lap H = c g(grad H, grad u) + (Ric_M(nu_M,nu_M) + |A|^2) H", pick(c, 1e-6));
  Rng rng = stream(c.seed, b.r.check);
  for (const auto& s : fx.points(rng, c.samples)) b.add(graphs::drift_laplacian_H_check(*s.g, s.x).relative(), at(s.x));
  return b.r;
}

CheckResult gauss_equation(const Fixtures& fx, const VerifyConfig& c) {
  Builder b("gauss_equation_ricci",
            "Ric(X,X) = Ric_M(X,X) - eps R_M(X,nu_M,X,nu_M) + H g(AX,X) - eps |AX|^2", pick(c, 1e-6));
  Rng rng = stream(c.seed, b.r.check);
  for (const auto& s : fx.points(rng, c.samples)) {
    const auto p = s.g->at(s.x, 3);
    const Eigen::VectorXd X = graphs::sample_unit_vector(p.induced_metric(), rng);
    b.add(graphs::gauss_equation_ricci_check(p, X).relative(), at(s.x));
  }
  return b.r;
}

CheckResult nu_E_relation(const Fixtures& fx, const VerifyConfig& c) {
  Builder b("nu_E_relation", "|nu|_E^2 = 2 H^2/c^2 - 1 and H^2/c^2 <= |nu|_E^2 < 2 H^2/c^2", pick(c, 1e-6));
  Rng rng = stream(c.seed, b.r.check);
  for (const auto& s : fx.points(rng, c.samples)) {
    const auto rel = graphs::nu_E_relation_check(*s.g, s.x);
    b.add(std::abs(rel.residual) / std::max(1.0, rel.nu_E_sq), at(s.x));
    if (!rel.bounds_hold) b.fail("two-sided bound fails " + at(s.x));
  }
  return b.r;
}

CheckResult bakry_emery(const Fixtures& fx, const VerifyConfig& c) {
  Builder b("bakry_emery", "Ric(X,X) + c hess h(X,X) >= -(n kappa/c^2) G^2 |X|^2 with G = H", pick(c, 1e-8));
  Rng rng = stream(c.seed, b.r.check);
  for (const auto& s : fx.points(rng, c.samples)) {
    const auto p = s.g->at(s.x, 3);
    const Eigen::VectorXd X = graphs::sample_unit_vector(p.induced_metric(), rng);
    const double kappa = s.g == &fx.grim ? 0.0 : fx.kappa_example;
    const double G = p.H.value() * (1.0 + 1e-12);
    b.add(std::max(0.0, -graphs::bakry_emery_check(*s.g, s.x, X, G, kappa).slack), at(s.x));
  }
  return b.r;
}

CheckResult qiu_chen(const Fixtures& fx, const VerifyConfig& c) {
  Builder b("qiu_chen", "-f Lap_ch f + 3|grad f|^2 >= (c^2/n)(1 - f^2)^2, f = -1/sqrt(1 + H^2/c^2)",
            pick(c, 1e-8));
  Rng rng = stream(c.seed, b.r.check);
  for (const auto& s : fx.points(rng, c.samples, false)) {
    b.add(std::max(0.0, -graphs::qiu_chen_inequality_check(*s.g, s.x).slack), at(s.x));
  }
  return b.r;
}

CheckResult lemma_x(const Fixtures&, const VerifyConfig& c) {
  Builder b("lemma_X", "|X|_E <= |nu|_E for unit X orthogonal to nu; |nu|_E^2 - |X|_E^2 = 2 defect",
            pick(c, 1e-9));
  Rng rng = stream(c.seed, b.r.check);
  for (int i = 0; i < c.lemma_pairs; ++i) {
    const int n = 1 + i % 4;
    const auto pair = graphs::sample_lemma_x_pair(n, rng, 0.1 + 4.0 * rng.uniform());
    const auto res = graphs::lemma_X_property(pair.nu, pair.X);
    const double lhs = res.nu_E * res.nu_E - res.X_E * res.X_E;
    b.add(std::abs(lhs - 2.0 * res.defect) / std::max(1.0, res.nu_E * res.nu_E), "pair " + std::to_string(i));
    if (!res.holds) b.fail("|X|_E > |nu|_E for pair " + std::to_string(i));
  }
  return b.r;
}

CheckResult jacobi(const Fixtures&, const VerifyConfig& c) {
  Builder b("jacobi_comparison", "w'' = Gbar^2 w, w(0) = 0, w'(0) = 1; w'/w <= lambda(2) Gbar on [2, 50]",
            pick(c, 1e-9));
  for (const auto& G : {bounds::BoundFunction::constant(1.0), bounds::BoundFunction::affine(1.0, 1.0)}) {
    const auto rep = bounds::jacobi_comparison(G, 50.0);
    b.r.samples += rep.samples.size() - 1;
    b.add(rep.sinh_max_rel_error < 0.0 ? 0.0 : rep.sinh_max_rel_error, "sinh comparison for " + G.describe());
    if (!rep.positivity_ok) b.fail("w, w', w'' not positive for " + G.describe());
    if (!rep.wronskian_ok) b.fail("f'w - w'f < 0 for " + G.describe());
    if (!rep.bound_ok) b.fail("w'/w exceeds lambda(2) Gbar for " + G.describe());
  }
  return b.r;
}

CheckResult plateau_curve(const Fixtures&, const VerifyConfig& c) {
  Builder b("plateau_curve", "u' = 2^{|n|+1}/(2^{|n|+1}+1) at x_n, 1/sqrt(1-u'^2) >= 2^{(|n|-1)/2}, L[0,50] >= 20",
            pick(c, 1e-12));
  const auto rep = zoo::example_curve_checks(zoo::build_example_curve());
  for (const auto& w : rep.witnesses) {
    const double e = std::ldexp(1.0, -(std::abs(w.n) + 1));
    b.add(std::abs(w.slope - 1.0 / (1.0 + e)), "witness n = " + std::to_string(w.n));
    if (!w.ok) b.fail("witness bound fails for n = " + std::to_string(w.n));
  }
  if (!rep.spacelike) b.fail("curve is not spacelike");
  if (!rep.pattern_ok) b.fail("plateau pattern violated");
  if (!(rep.length_0_50 >= 20.0)) b.fail("length over [0, 50] below 20");
  return b.r;
}

CheckResult soliton_equation(const Fixtures& fx, const VerifyConfig& c) {
  Builder b("soliton_equation", "div(grad u / W) = c / W", pick(c, 1e-8));
  const auto riemann = zoo::grim_reaper(1, 1.0, 2);
  for (int k = 0; k < 500; ++k) {
    const std::vector<double> x{-5.0 + 10.0 * k / 499.0, 0.25};
    b.add(std::abs(graphs::soliton_residual(fx.grim, x)), "lorentzian grim reaper " + at(x));
  }
  for (int k = 0; k < 500; ++k) {
    const std::vector<double> x{-1.5 + 3.0 * k / 499.0, 0.25};
    b.add(std::abs(graphs::soliton_residual(riemann, x)), "riemannian grim reaper " + at(x));
  }
  const double Y = 1.0 - 1e-3;
  for (int k = 0; k < 200; ++k) {
    const std::vector<double> x{0.0, -Y + 2.0 * Y * k / 199.0};
    b.add(std::abs(graphs::soliton_residual(fx.example, x)), "profile example " + at(x));
  }
  return b.r;
}

CheckResult directrix(const Fixtures& fx, const VerifyConfig& c) {
  Builder b("directrix_length", "length of (s, 0, ln cosh s) over [-20, 20] = pi", pick(c, 1e-6));
  (void)fx;
  b.add(std::abs(zoo::directrix_length(20.0) - std::numbers::pi));
  return b.r;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const VerifyConfig& config) {
  if (config.tol && !(*config.tol > 0.0)) throw PreconditionError("verify: tolerance must be positive");
  const Fixtures fx;
  const std::vector<std::pair<std::string, CheckFn>> checks{
      {"height_gradient", height_gradient}, {"hessian_height", hessian_height},
      {"drift_laplacian_H", drift_laplacian_H}, {"gauss_equation_ricci", gauss_equation},
      {"nu_E_relation", nu_E_relation}, {"bakry_emery", bakry_emery},
      {"qiu_chen", qiu_chen}, {"lemma_X", lemma_x},
      {"jacobi_comparison", jacobi}, {"plateau_curve", plateau_curve},
      {"soliton_equation", soliton_equation}, {"directrix_length", directrix}};
  std::vector<CheckResult> out;
  for (const auto& [name, run] : checks) {
    try {
      out.push_back(run(fx, config));
    } catch (const std::exception& e) {
      // A throwing check is a failed check, reported under its own name.
      CheckResult r;
      r.check = name;
      r.note = e.what();
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.check < b.check; });
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

nlohmann::json report_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j{{"check", r.check},
                     {"paper_ref", r.paper_ref},
                     {"samples", r.samples},
                     {"max_residual", std::isfinite(r.max_residual) ? nlohmann::json(r.max_residual) : nullptr},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass}};
    if (!r.note.empty()) j["note"] = r.note;
    checks.push_back(std::move(j));
  }
  return {{"checks", std::move(checks)}, {"pass", all_pass(results)}};
}

void write_report_csv(std::ostream& os, const std::vector<CheckResult>& results) {
  os << "check,paper_ref,samples,max_residual,tolerance,pass,note\r\n";
  for (const auto& r : results) {
    os << csv_field(r.check) << ',' << csv_field(r.paper_ref) << ',' << r.samples << ','
       << format_number(r.max_residual) << ',' << format_number(r.tolerance) << ',' << (r.pass ? "true" : "false")
       << ',' << csv_field(r.note) << "\r\n";
  }
}

}  // namespace solitonlab::cli
