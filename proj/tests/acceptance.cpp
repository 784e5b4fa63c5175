// Acceptance runner: one PASS/FAIL line per criterion. With an argument N
// only criterion N runs and the exit status reflects it; without arguments
// all twelve run.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "solitonlab/bounds/bound_function.hpp"
#include "solitonlab/bounds/completeness.hpp"
#include "solitonlab/bounds/jacobi.hpp"
#include "solitonlab/chart/geometry.hpp"
#include "solitonlab/graphs/checks.hpp"
#include "solitonlab/graphs/lemma_x.hpp"
#include "solitonlab/numerics/divergence.hpp"
#include "solitonlab/numerics/grid_path.hpp"
#include "solitonlab/numerics/random.hpp"
#include "solitonlab/zoo/example_curve.hpp"
#include "solitonlab/zoo/grim_reaper.hpp"
#include "solitonlab/zoo/soliton_profile.hpp"

namespace sl = solitonlab;
using sl::numerics::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const sl::zoo::SolitonProfile& profile() {
  static const sl::zoo::SolitonProfile p = sl::zoo::solve_profile_ode(sl::zoo::build_phi(1.0));
  return p;
}

// Grim reaper residuals of the translator equation.
Outcome criterion1() {
  Outcome o;
  const auto lor = sl::zoo::grim_reaper(-1);
  const auto rie = sl::zoo::grim_reaper(1);
  double ml = 0.0, mr = 0.0;
  for (int k = 0; k < 500; ++k) {
    const std::vector<double> xl{-5.0 + 10.0 * k / 499.0, 0.7};
    const std::vector<double> xr{-1.5 + 3.0 * k / 499.0, 0.7};
    ml = std::max(ml, std::abs(sl::graphs::soliton_residual(lor, xl)));
    mr = std::max(mr, std::abs(sl::graphs::soliton_residual(rie, xr)));
  }
  o.detail << "max residual lorentzian " << fmt(ml) << ", riemannian " << fmt(mr) << " (< 1e-10)";
  o.require(ml < 1e-10, "lorentzian residual");
  o.require(mr < 1e-10, "riemannian residual");
  return o;
}

// Directrix of the Lorentzian grim reaper has length pi.
Outcome criterion2() {
  Outcome o;
  const double L = sl::zoo::directrix_length(20.0);
  // Independent route: the induced metric on [-10, 10] plus the closed-form
  // tails 2 (pi/2 - gd(10)) = 4 atan(e^{-10}).
  const auto g = sl::zoo::grim_reaper(-1);
  const sl::bounds::CurveSample line{[](double s) { return std::vector<double>{s, 0.0}; },
                                     [](double) { return std::vector<double>{1.0, 0.0}; }};
  const double core = sl::bounds::curve_length(g, line, -10.0, 10.0, {}, 1e-10);
  const double tails = 4.0 * std::atan(std::exp(-10.0)) - 4.0 * std::atan(std::exp(-20.0));
  o.detail << "L[-20,20] = " << fmt(L) << ", |L - pi| = " << fmt(std::abs(L - std::numbers::pi))
           << ", induced-metric route gap " << fmt(std::abs(core + tails - L));
  o.require(std::abs(L - std::numbers::pi) < 1e-6, "length differs from pi");
  o.require(std::abs(core + tails - L) < 1e-8, "induced metric disagrees with sech quadrature");
  return o;
}

// Profile ODE: monotone, odd, bounded, and consistent with the graph equation.
Outcome criterion3() {
  Outcome o;
  const auto& p = profile();
  const double Y = p.y_max();
  double prev = -2.0, odd = 0.0, zmax = 0.0;
  bool increasing = true;
  for (int k = 0; k <= 4000; ++k) {
    const double y = -Y + 2.0 * Y * k / 4000.0;
    const double z = p.z(y);
    increasing = increasing && z > prev;
    prev = z;
    zmax = std::max(zmax, std::abs(z));
    odd = std::max(odd, std::abs(z + p.z(-y)));
  }
  const double z4 = p.z(1.0 - 1e-4);
  const auto g = sl::zoo::profile_graph(p);
  double res = 0.0;
  const double R = 1.0 - 1e-3;
  for (int k = 0; k < 200; ++k) {
    const std::vector<double> x{0.0, -R + 2.0 * R * k / 199.0};
    res = std::max(res, std::abs(sl::graphs::soliton_residual(g, x)));
  }
  o.detail << "increasing " << (increasing ? "yes" : "no") << ", max|z| " << fmt(zmax) << ", odd defect "
           << fmt(odd) << ", z(1-1e-4) = " << fmt(z4) << ", max residual " << fmt(res);
  o.require(increasing, "z not strictly increasing");
  o.require(zmax < 1.0, "|z| reaches 1");
  o.require(odd < 1e-9, "z not odd");
  o.require(z4 > 0.9, "z(1-1e-4) <= 0.9");
  o.require(res < 1e-8, "graph equation residual");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto rows = sl::zoo::growth_ratio_r(profile(), 100.0);
  const auto& last = rows.back();
  o.detail << "H/w at w = " << fmt(last.w) << " is " << fmt(last.ratio) << " (in [0.475, 0.525])";
  o.require(std::abs(last.w - 100.0) < 1e-9, "last row is not w = 100");
  o.require(last.ratio >= 0.475 && last.ratio <= 0.525, "ratio out of band");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto rows = sl::zoo::growth_ratio_rM(profile(), 1.0 - 1e-6);
  const auto& last = rows.back();
  o.detail << "H/sqrt(r_M) at y = " << fmt(last.y) << " (r_M = " << fmt(last.r_M) << ") is " << fmt(last.ratio)
           << " (in [0.9, 1.1])";
  o.require(std::abs(last.y - (1.0 - 1e-6)) < 1e-12, "last row is not y = 1 - 1e-6");
  o.require(last.ratio >= 0.9 && last.ratio <= 1.1, "ratio out of band");
  return o;
}

struct SamplePoint {
  std::vector<double> x;
  const sl::graphs::GraphHypersurface* g;
};

std::vector<SamplePoint> sample_points(Rng& rng, const sl::graphs::GraphHypersurface& grim,
                                       const sl::graphs::GraphHypersurface& example, int n) {
  std::vector<SamplePoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back({{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)}, &grim});
  for (int i = 0; i < n; ++i) pts.push_back({{rng.uniform(-1.0, 1.0), rng.uniform(-0.9, 0.9)}, &example});
  return pts;
}

// Identity suites on the grim reaper and the profile example.
Outcome criterion6() {
  Outcome o;
  const auto grim = sl::zoo::grim_reaper(-1);
  const auto example = sl::zoo::profile_graph(profile());
  Rng rng(6);
  double hg = 0.0, hh = 0.0, dl = 0.0, ge = 0.0, ne = 0.0;
  bool bounds_ok = true;
  for (const auto& s : sample_points(rng, grim, example, 100)) {
    const auto p = s.g->at(s.x, 4);
    const Eigen::VectorXd X = sl::graphs::sample_unit_vector(p.induced_metric(), rng);
    hg = std::max(hg, sl::graphs::height_gradient_check(*s.g, s.x).relative());
    hh = std::max(hh, sl::graphs::hessian_height_check(p, X).relative());
    dl = std::max(dl, sl::graphs::drift_laplacian_H_check(*s.g, s.x).relative());
    ge = std::max(ge, sl::graphs::gauss_equation_ricci_check(p, X).relative());
    const auto nr = sl::graphs::nu_E_relation_check(*s.g, s.x);
    ne = std::max(ne, std::abs(nr.residual) / std::max(1.0, nr.nu_E_sq));
    bounds_ok = bounds_ok && nr.bounds_hold;
  }
  o.detail << "200 samples; max relative residuals: |grad h|^2 " << fmt(hg) << ", hess h " << fmt(hh)
           << ", drift Lap H " << fmt(dl) << ", Gauss trace " << fmt(ge) << ", |nu|_E relation " << fmt(ne);
  for (double r : {hg, hh, dl, ge, ne}) o.require(r < 1e-6, "residual " + fmt(r));
  o.require(bounds_ok, "H^2/c^2 <= |nu|_E^2 < 2 H^2/c^2");
  return o;
}

// Inequality suites.
Outcome criterion7() {
  Outcome o;
  Rng rng(7);
  int lemma_fail = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto pair = sl::graphs::sample_lemma_x_pair(1 + i % 4, rng, 0.1 + 4.0 * rng.uniform());
    if (!sl::graphs::lemma_X_property(pair.nu, pair.X).holds) ++lemma_fail;
  }

  const auto grim = sl::zoo::grim_reaper(-1);
  const auto example = sl::zoo::profile_graph(profile());
  double kmin = 0.0;
  for (int i = -900; i <= 900; ++i) kmin = std::min(kmin, profile().phi().gauss_curvature(i * 1e-3));
  const double kappa = -kmin;
  double be = INFINITY;
  for (const auto& s : sample_points(rng, grim, example, 50)) {
    const auto p = s.g->at(s.x, 3);
    const Eigen::VectorXd X = sl::graphs::sample_unit_vector(p.induced_metric(), rng);
    const double G = p.H.value() * (1.0 + 1e-12);
    be = std::min(be, sl::graphs::bakry_emery_check(*s.g, s.x, X, G, s.g == &grim ? 0.0 : kappa).slack);
  }
  double qc = INFINITY;
  for (int i = 0; i < 100; ++i) {
    const std::vector<double> x{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    qc = std::min(qc, sl::graphs::qiu_chen_inequality_check(grim, x).slack);
  }

  const auto one = sl::bounds::jacobi_comparison(sl::bounds::BoundFunction::constant(1.0), 50.0);
  const auto lin = sl::bounds::jacobi_comparison(sl::bounds::BoundFunction::affine(1.0, 1.0), 50.0);
  o.detail << "lemma failures " << lemma_fail << "/10000, min Bakry-Emery slack " << fmt(be) << " (kappa "
           << fmt(kappa) << "), min Qiu-Chen slack " << fmt(qc) << ", lambda(2) " << fmt(one.lambda2) << "/"
           << fmt(lin.lambda2) << ", max bound ratio " << fmt(one.max_bound_ratio) << "/"
           << fmt(lin.max_bound_ratio) << ", sinh error " << fmt(one.sinh_max_rel_error);
  o.require(lemma_fail == 0, "|X|_E <= |nu|_E");
  o.require(be >= -1e-8, "Bakry-Emery slack");
  o.require(qc >= -1e-8, "Qiu-Chen slack");
  for (const auto* r : {&one, &lin}) {
    o.require(r->positivity_ok, "w, w', w'' > 0");
    o.require(r->bound_ok, "w'/w <= lambda(2) Gbar on [2, 50]");
    o.require(r->wronskian_ok, "f'w - w'f >= 0");
  }
  o.require(one.sinh_max_rel_error >= 0.0 && one.sinh_max_rel_error < 1e-9, "sinh match");
  return o;
}

// Bounds machinery.
Outcome criterion8() {
  Outcome o;
  using sl::bounds::BoundFunction;
  using sl::bounds::Verdict;
  const auto GM = sl::bounds::build_GM(BoundFunction::affine(1.0, 1.0));
  double gm_err = 0.0;
  for (int k = 0; k <= 200; ++k) {
    const double s = 0.5 * k;
    gm_err = std::max(gm_err, std::abs(GM(s) - (std::log1p(s) + 1.0)));
  }

  const std::vector<BoundFunction> family{BoundFunction::constant(1.0), BoundFunction::affine(1.0, 1.0),
                                          BoundFunction::log_affine(2.0, 1.0), BoundFunction::power(0.5, 1.0),
                                          BoundFunction::r_logk(1.0, 1.0, 1.0)};
  bool smooth_ok = true;
  for (const auto& G0 : family) {
    const auto G = sl::bounds::polygonal_smooth(G0);
    bool ok = G(0.0) > 0.0;
    for (int i = 0; i <= 50000 && ok; ++i) {
      const double r = i * 1e-3;
      ok = G.derivative(r) >= 0.0 && G(r) >= G0(r);
    }
    const auto probe = sl::numerics::divergence_probe([&G](double r) { return 1.0 / G(r); }, 0.0);
    ok = ok && probe.verdict == sl::numerics::DivergenceVerdict::divergent;
    if (!ok) {
      smooth_ok = false;
      o.detail << " smoothing of " << G0.describe() << " fails;";
    }
  }

  struct Case {
    BoundFunction G;
    Verdict a, b, c;
  };
  const Verdict H = Verdict::holds, F = Verdict::fails, N = Verdict::not_applicable;
  std::vector<Case> cases{
      {BoundFunction::affine(1.0, 1.0), H, H, H},      {BoundFunction::affine(0.0, 2.0), H, H, H},
      {BoundFunction::affine(-1.0, 1.0), F, N, F},     {BoundFunction::log_affine(1.0, 1.0), H, H, H},
      {BoundFunction::power(0.5, 1.0), H, H, H},       {BoundFunction::power(1.0, 1.0), H, H, H},
      {BoundFunction::power(2.0, 1.0), H, F, H},       {BoundFunction::power(-1.0, 1.0), H, H, F},
      {BoundFunction::r_logk(1.0, 1.0, 0.5), H, H, H}, {BoundFunction::r_logk(1.0, 1.0, 1.0), H, H, H},
      {BoundFunction::r_logk(1.0, 1.0, 2.0), H, F, H}, {BoundFunction::sampled({0, 1, 2, 3}, {1, 2, 3, 4}), H, H, H},
  };
  int agree = 0;
  bool note_ok = false;
  for (const auto& cs : cases) {
    const auto v = sl::bounds::classify_conditions(cs.G);
    if (v.a == cs.a && v.b == cs.b && v.c == cs.c) {
      ++agree;
    } else {
      o.detail << " misclassified " << cs.G.describe() << ";";
    }
    if (cs.G.kind() == sl::bounds::BoundKind::r_logk && cs.b == F) note_ok = !v.note.empty();
  }
  o.detail << " G^M error " << fmt(gm_err) << ", smoothing family " << (smooth_ok ? "ok" : "fails")
           << ", classifier " << agree << "/12, k > 1 note " << (note_ok ? "present" : "missing");
  o.require(gm_err < 1e-9, "G^M = ln(s+1)+1");
  o.require(smooth_ok, "polygonal smoothing");
  o.require(agree == 12, "classifier verdicts");
  o.require(note_ok, "k > 1 discrepancy note");
  return o;
}

// Distance ordering r_G <= r <= r_M <= r_E on the profile example.
Outcome criterion9() {
  Outcome o;
  const auto& p = profile();
  const auto& phi = p.phi();
  // The metrics depend on y only; cache along the lattice.
  struct Row {
    double inv_phi2, fp2;
  };
  auto row = [&](double y) {
    const double ph = phi.value(y);
    const double fp = p.z(y) / ph;
    return Row{1.0 / (ph * ph), fp * fp};
  };
  auto make = [&](int sign) {
    return sl::numerics::PlanarMetric([row, sign](double, double y) {
      const Row r = row(y);
      Eigen::Matrix2d g;
      g << r.inv_phi2, 0.0, 0.0, r.inv_phi2 + sign * r.fp2;
      return g;
    });
  };
  const auto g_r = make(-1), g_M = make(0), g_E = make(1);
  const sl::numerics::Box2 box{-1.2, 1.2, -0.9, 0.9};
  const auto G = sl::bounds::BoundFunction::affine(1.0, 1.0);
  const std::vector<sl::numerics::Point2> qs{{0.3, 0.1},  {-0.5, 0.4}, {0.8, -0.2}, {0.1, 0.7},  {-0.9, -0.6},
                                             {0.6, 0.6},  {-0.2, -0.8}, {1.0, 0.0},  {0.0, 0.55}, {-0.7, 0.2}};
  const int res = 120;
  int ok = 0;
  double worst = 0.0;
  for (const auto& q : qs) {
    const double r = sl::numerics::grid_shortest_path(g_r, box, res, {0.0, 0.0}, q);
    const double rM = sl::numerics::grid_shortest_path(g_M, box, res, {0.0, 0.0}, q);
    const double rE = sl::numerics::grid_shortest_path(g_E, box, res, {0.0, 0.0}, q);
    const double rG = sl::bounds::r_G_distance(G, rM);
    const double t = 1.03;
    const bool good = rG <= t * r && r <= t * rM && rM <= t * rE;
    worst = std::max({worst, rG / r, r / rM, rM / rE});
    if (good) {
      ++ok;
    } else {
      o.detail << " pair (" << q[0] << "," << q[1] << "): " << fmt(rG) << " " << fmt(r) << " " << fmt(rM) << " "
               << fmt(rE) << ";";
    }
  }
  o.detail << " " << ok << "/10 pairs ordered, worst consecutive ratio " << fmt(worst) << " (<= 1.03)";
  o.require(ok == 10, "ordering");
  return o;
}

// The plateau curve: spacelike, witnesses, linear length growth.
Outcome criterion10() {
  Outcome o;
  const auto curve = sl::zoo::build_example_curve(-10, 10);
  const auto rep = sl::zoo::example_curve_checks(curve);
  int wit_ok = 0;
  for (const auto& w : rep.witnesses) wit_ok += w.ok && std::abs(w.n) <= 10;
  const auto plane = sl::chart::ChartMetric::product(sl::chart::ChartMetric::euclidean(1), -1.0);
  const sl::bounds::CurveSample graph{[&](double x) { return std::vector<double>{x, curve.value(x)}; },
                                      [&](double x) { return std::vector<double>{1.0, curve.derivative(x)}; }};
  const auto breaks = curve.breakpoints();
  const double L = sl::bounds::curve_length(plane, graph, 0.0, 50.0, breaks);
  o.detail << "max |u'| " << fmt(rep.max_slope) << ", witnesses " << wit_ok << "/21, L[0,50] = " << fmt(L)
           << " (reference " << fmt(rep.length_0_50) << ")";
  o.require(rep.spacelike, "spacelike");
  o.require(rep.pattern_ok, "plateau pattern");
  o.require(wit_ok == 21, "witness bounds");
  o.require(L >= 20.0 && std::abs(L - rep.length_0_50) < 1e-8, "length over [0, 50]");
  return o;
}

// Gauss curvature of phi^{-2}(dx^2 + dy^2) against the stated closed form.
Outcome criterion11() {
  Outcome o;
  const auto& phi = profile().phi();
  const auto metric = sl::zoo::profile_base_metric(phi);
  double rel = 0.0, chart_gap = 0.0;
  for (int k = 1; k <= 49; ++k) {
    const double y = 0.5 + 0.01 * k;
    const double K = phi.gauss_curvature(y);
    const double stated = -std::pow(1.0 - y, -4.0);
    rel = std::max(rel, std::abs(K - stated) / std::abs(stated));
    const std::vector<double> x{0.0, y};
    const double Kc = sl::chart::sectional(metric, x, Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1));
    chart_gap = std::max(chart_gap, std::abs(Kc - K));
  }
  double kmin = INFINITY;
  for (int k = 0; k <= 9900; ++k) kmin = std::min(kmin, phi.gauss_curvature(k * 1e-4));
  o.detail << "max relative gap to -(1-|y|)^-4 on (1/2, 0.99]: " << fmt(rel) << "; min K on [0, 0.99] = " << fmt(kmin)
           << "; chart curvature agrees with phi phi'' - phi'^2 to " << fmt(chart_gap)
           << ". For phi = 1 - |y| the metric has K = phi phi'' - phi'^2 = -1, so the stated form cannot hold";
  o.require(rel < 1e-8, "K = -(1-|y|)^-4");
  o.require(kmin < -1e7, "min K < -1e7");
  return o;
}

int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// CLI determinism and exit-code contract.
Outcome criterion12() {
  Outcome o;
  const std::string cli = SOLITONLAB_CLI;
  const std::string dir = SOLITONLAB_SCRATCH;
  const std::string a = dir + "/verify_a.json", b = dir + "/verify_b.json";
  const int ea = run("\"" + cli + "\" verify --seed 7 --out \"" + a + "\" 2>/dev/null");
  const int eb = run("\"" + cli + "\" verify --seed 7 --seed 7 --out \"" + b + "\" 2>/dev/null");
  const std::string ra = slurp(a), rb = slurp(b);
  const int tight = run("\"" + cli + "\" verify --tol 1e-15 --out \"" + dir + "/verify_tight.json\" 2>/dev/null");
  const int bad = run("\"" + cli + "\" bounds --g nonsense:1 >/dev/null 2>&1");
  const std::string ca = dir + "/zoo_a.csv", cb = dir + "/zoo_b.csv";
  run("\"" + cli + "\" zoo --member s7 --grid 51 --out \"" + ca + "\" 2>/dev/null");
  run("\"" + cli + "\" zoo --member s7 --grid 51 --out \"" + cb + "\" 2>/dev/null");
  o.detail << "exit codes default " << ea << "/" << eb << ", over-tight " << tight << ", bad spec " << bad
           << "; reports " << (ra == rb && !ra.empty() ? "byte-identical" : "differ") << " (" << ra.size()
           << " bytes)";
  o.require(ea == 0 && eb == 0, "default verify exits 0");
  o.require(!ra.empty() && ra == rb, "byte-identical reports");
  o.require(ra.find("\"pass\": false") == std::string::npos, "report lists a failure");
  o.require(tight == 1, "over-tight tolerance exits 1");
  o.require(bad != 0, "unparsable spec exits nonzero");
  o.require(slurp(ca) == slurp(cb) && !slurp(ca).empty(), "zoo dump deterministic");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3,  criterion4,
                                                       criterion5, criterion6, criterion7,  criterion8,
                                                       criterion9, criterion10, criterion11, criterion12};
  int first = 1, last = 12;
  if (argc > 1) {
    first = last = std::atoi(argv[1]);
    if (first < 1 || first > 12) {
      std::cerr << "usage: acceptance [1-12]\n";
      return 2;
    }
  }
  bool all = true;
  for (int i = first; i <= last; ++i) {
    Outcome o;
    try {
      o = criteria[i - 1]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << "criterion " << i << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
