#pragma once

// Curve lengths and sampled completeness verdicts for spacelike graphs.
//
// completeness_verdict is a falsifier, not a prover: a sampled violation
// refutes a bound, but "consistent" only means that no sampled point
// violated it. It never certifies a completeness hypothesis.

#include <functional>
#include <span>
#include <vector>

#include "solitonlab/bounds/bound_function.hpp"
#include "solitonlab/chart/chart_metric.hpp"
#include "solitonlab/graphs/graph.hpp"

namespace solitonlab::bounds {

// A parametrized curve in a chart, with its velocity.
struct CurveSample {
  std::function<std::vector<double>(double)> point;
  std::function<std::vector<double>(double)> tangent;
};

// int_a^b |gamma'| in g. Throws DomainError where the tangent is not
// spacelike. Optional breakpoints split the quadrature at kinks of the curve.
double curve_length(const chart::ChartMetric& g, const CurveSample& curve, double a, double b,
                    std::span<const double> breakpoints = {}, double tol = 1e-11);
// Length in the induced metric of the graph.
double curve_length(const graphs::GraphHypersurface& g, const CurveSample& curve, double a, double b,
                    std::span<const double> breakpoints = {}, double tol = 1e-11);

// Which distance the samples carry:
//   extrinsic_E  distance in g_M + dt^2 (needs (a), (b)),
//   base_M       distance in M (needs (a), (b) and the extra monotonicity (c)),
//   intrinsic    distance in the induced metric (needs (a)).
enum class DistanceKind { extrinsic_E, base_M, intrinsic };

// normal: |nu|_E <= G(d), or |nu_M| <= G(d) for base_M distances.
// mean_curvature: H <= c G(d), which controls |nu|_E through
// H^2/c^2 <= |nu|_E^2 < 2 H^2/c^2.
enum class BoundQuantity { normal, mean_curvature };

struct CompletenessSample {
  std::vector<double> x;  // base point
  double distance;        // caller-supplied distance from the origin
};

struct CompletenessViolation {
  std::vector<double> x;
  double distance;
  double quantity;
  double bound;
};

struct CompletenessVerdict {
  bool consistent = true;
  std::vector<CompletenessViolation> violations;
  std::size_t samples = 0;
  double max_ratio = 0.0;  // max quantity / bound
};

// Lorentzian graphs only.
CompletenessVerdict completeness_verdict(const graphs::GraphHypersurface& g, const BoundFunction& G,
                                         std::span<const CompletenessSample> samples, DistanceKind which,
                                         BoundQuantity quantity = BoundQuantity::normal);

const char* to_string(DistanceKind k);
const char* to_string(BoundQuantity q);

}  // namespace solitonlab::bounds
