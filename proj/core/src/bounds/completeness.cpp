#include "solitonlab/bounds/completeness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "solitonlab/error.hpp"
#include "solitonlab/numerics/quadrature.hpp"

namespace solitonlab::bounds {

const char* to_string(DistanceKind k) {
  switch (k) {
    case DistanceKind::extrinsic_E:
      return "r_E";
    case DistanceKind::base_M:
      return "r_M";
    case DistanceKind::intrinsic:
      return "r";
  }
  return "unknown";
}

const char* to_string(BoundQuantity q) { return q == BoundQuantity::normal ? "normal" : "mean_curvature"; }

double curve_length(const chart::ChartMetric& g, const CurveSample& curve, double a, double b,
                    std::span<const double> breakpoints, double tol) {
  if (!curve.point || !curve.tangent) throw PreconditionError("curve_length: curve needs point and tangent");
  if (a > b) throw PreconditionError("curve_length: a must not exceed b");
  const auto n = static_cast<Eigen::Index>(g.dimension());
  auto speed = [&](double t) {
    const auto p = curve.point(t);
    const auto v = curve.tangent(t);
    if (static_cast<Eigen::Index>(p.size()) != n || static_cast<Eigen::Index>(v.size()) != n) {
      throw PreconditionError("curve_length: curve dimension does not match the metric");
    }
    const Eigen::Map<const Eigen::VectorXd> V(v.data(), n);
    const double q = V.dot(g.at(p) * V);
    if (!(q > 0.0)) {
      throw DomainError("curve_length: tangent is not spacelike at t = " + std::to_string(t));
    }
    return std::sqrt(q);
  };
  std::vector<double> cuts{a};
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(b);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) total += numerics::quad_adaptive(speed, cuts[i], cuts[i + 1], tol);
  }
  return total;
}

double curve_length(const graphs::GraphHypersurface& g, const CurveSample& curve, double a, double b,
                    std::span<const double> breakpoints, double tol) {
  return curve_length(graphs::induced_metric(g), curve, a, b, breakpoints, tol);
}

CompletenessVerdict completeness_verdict(const graphs::GraphHypersurface& g, const BoundFunction& G,
                                         std::span<const CompletenessSample> samples, DistanceKind which,
                                         BoundQuantity quantity) {
  if (g.epsilon() != -1) throw PreconditionError("completeness_verdict: only Lorentzian graphs are supported");
  const auto& cv = G.conditions();
  if (cv.a != Verdict::holds) throw PreconditionError("completeness_verdict: G must be positive");
  if (which != DistanceKind::intrinsic && cv.b != Verdict::holds) {
    throw PreconditionError("completeness_verdict: G must satisfy (b) for extrinsic bounds");
  }
  if (which == DistanceKind::base_M && cv.c != Verdict::holds) {
    // The base-distance criterion carries monotonicity as an extra hypothesis.
    throw PreconditionError("completeness_verdict: the r_M bound requires nondecreasing G");
  }

  CompletenessVerdict out;
  for (const auto& s : samples) {
    if (!(s.distance >= 0.0)) throw PreconditionError("completeness_verdict: distances must be non-negative");
    const graphs::UnitNormal nu = graphs::unit_normal(g, s.x);
    const Eigen::MatrixXd gM = g.space().base().at(s.x);
    const double nuM_sq = nu.nu_M.dot(gM * nu.nu_M);
    double q = 0.0;
    double bound = G(s.distance);
    if (quantity == BoundQuantity::mean_curvature) {
      q = graphs::mean_curvature(g, s.x);
      bound *= g.c();
    } else {
      q = which == DistanceKind::base_M ? std::sqrt(nuM_sq) : std::sqrt(nuM_sq + nu.nu_R * nu.nu_R);
    }
    ++out.samples;
    out.max_ratio = std::max(out.max_ratio, q / bound);
    if (q > bound) out.violations.push_back({s.x, s.distance, q, bound});
  }
  out.consistent = out.violations.empty();
  return out;
}

}  // namespace solitonlab::bounds
