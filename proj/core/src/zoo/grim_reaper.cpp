#include "solitonlab/zoo/grim_reaper.hpp"

#include <cmath>

#include "solitonlab/error.hpp"
#include "solitonlab/numerics/quadrature.hpp"

namespace solitonlab::zoo {

using numerics::Jet;

graphs::GraphHypersurface grim_reaper(int epsilon, double c, int n) {
  if (epsilon != 1 && epsilon != -1) throw PreconditionError("grim_reaper: epsilon must be +1 or -1");
  if (!(c > 0.0)) throw PreconditionError("grim_reaper: c must be positive");
  chart::ScalarField u;
  if (epsilon < 0) {
    u = chart::ScalarField([c](std::span<const Jet> x) { return numerics::log(numerics::cosh(c * x[0])) / c; });
  } else {
    u = chart::ScalarField([c](std::span<const Jet> x) {
      const Jet cs = numerics::cos(c * x[0]);
      if (!(cs.value() > 0.0)) throw DomainError("grim_reaper: |x_1| must stay below pi / (2c)");
      return -numerics::log(cs) / c;
    });
  }
  return graphs::GraphHypersurface(graphs::ProductSpace(chart::ChartMetric::euclidean(n), epsilon), u, c, true);
}

double directrix_length(double S) {
  if (S < 0.0) throw PreconditionError("directrix_length: S must be non-negative");
  if (S == 0.0) return 0.0;
  // |alpha'|^2 = 1 - tanh^2 s in the induced metric.
  auto speed = [](double s) { return 1.0 / std::cosh(s); };
  return 2.0 * numerics::quad_adaptive(speed, 0.0, S, 1e-13);
}

}  // namespace solitonlab::zoo
