#include <algorithm>
#include <cmath>
#include <string>

#include "impl.hpp"
#include "solitonlab/bounds/bound_function.hpp"
#include "solitonlab/error.hpp"

namespace solitonlab::bounds {

namespace {

struct Composed final : BoundFunction::Impl {
  BoundFunction G;
  explicit Composed(BoundFunction g) : G(std::move(g)) {}
  double inner(double s) const { return integral_of_reciprocal(G, s); }
  BoundKind kind() const override { return BoundKind::composed_GM; }
  std::string describe() const override { return "GM(" + G.describe() + ")"; }
  double value(double s) const override {
    if (!(s >= 0.0)) throw DomainError("G^M: s is negative");
    return G(inner(s));
  }
  double derivative(double s) const override {
    if (!(s >= 0.0)) throw DomainError("G^M: s is negative");
    return G.derivative(inner(s)) / G(s);
  }
};

// Polygon P through (k, G0(k + 1)) with every interior corner k >= 1
// replaced on [k - h, k + h] by the quadratic tangent to both segments.
struct Polygonal final : BoundFunction::Impl {
  BoundFunction G0;
  double h;
  Polygonal(BoundFunction g, double h_) : G0(std::move(g)), h(h_) {}

  double node(double k) const { return G0(k + 1.0); }
  double slope(double k) const { return node(k + 1.0) - node(k); }
  double polygon(double x) const {
    const double k = std::floor(x);
    return node(k) + slope(k) * (x - k);
  }

  BoundKind kind() const override { return BoundKind::smoothed; }
  std::string describe() const override { return "smooth(" + G0.describe() + ", h=" + format_number(h) + ")"; }
  double value(double x) const override {
    if (!(x >= 0.0)) throw DomainError("polygonal_smooth: r is negative");
    const double k = std::round(x);
    if (k < 1.0 || std::abs(x - k) >= h) return polygon(x);
    const double sl = slope(k - 1.0), sr = slope(k);
    const double t = x - k + h;
    return polygon(k - h) + sl * t + (sr - sl) * t * t / (4.0 * h);
  }
  double derivative(double x) const override {
    if (!(x >= 0.0)) throw DomainError("polygonal_smooth: r is negative");
    const double k = std::round(x);
    if (k < 1.0 || std::abs(x - k) >= h) return slope(std::floor(x));
    const double sl = slope(k - 1.0), sr = slope(k);
    return sl + (sr - sl) * (x - k + h) / (2.0 * h);
  }
};

}  // namespace

BoundFunction build_GM(const BoundFunction& G) {
  if (!G.conditions().all_hold()) {
    throw PreconditionError("build_GM: G must satisfy (a), (b) and (c); got " + G.describe());
  }
  if (G(0.0) < 1.0) {
    // Below 1 the inner integral can exceed s and G^M <= G is lost.
    throw PreconditionError("build_GM: G(0) >= 1 is required for G^M <= G");
  }
  auto impl = std::make_shared<Composed>(G);
  double prev = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double s = 0.5 * i;
    const double v = impl->value(s);
    const double g = G(s);
    if (!(v > 0.0) || v > g * (1.0 + 1e-12) || (i > 0 && v < prev * (1.0 - 1e-12))) {
      throw NumericalError("build_GM: postcondition failed at s = " + format_number(s));
    }
    prev = v;
  }
  // (b): G(R(s)) <= G(s) makes 1/G^M dominate 1/G.
  impl->verdicts.a = impl->verdicts.b = impl->verdicts.c = Verdict::holds;
  return BoundFunction(impl);
}

BoundFunction polygonal_smooth(const BoundFunction& G0, double h, double check_range) {
  if (!G0.conditions().all_hold()) {
    throw PreconditionError("polygonal_smooth: G0 must satisfy (a), (b) and (c); got " + G0.describe());
  }
  if (!(h > 0.0 && h < 0.5)) throw PreconditionError("polygonal_smooth: h must lie in (0, 1/2)");
  if (!(check_range > 0.0)) throw PreconditionError("polygonal_smooth: check_range must be positive");
  auto impl = std::make_shared<Polygonal>(G0, h);
  const auto n = static_cast<long>(std::ceil(check_range * 1000.0));
  double prev = 0.0;
  for (long i = 0; i <= n; ++i) {
    const double x = i * 1e-3;
    const double v = impl->value(x);
    const double g0 = G0(x);
    const double p = impl->polygon(x);
    const double slack = 1e-12 * std::max(1.0, std::abs(v));
    if (v < g0 - slack || v > 2.0 * p + slack || (i > 0 && v < prev - slack) || impl->derivative(x) < -slack) {
      throw NumericalError("polygonal_smooth: postcondition failed at r = " + format_number(x));
    }
    prev = v;
  }
  // (i) G(0) = G0(1) > 0, (ii) slopes are increments of G0,
  // (iii) G <= 2 P with P(r) <= G0(r + 2) and 1/G0 not integrable.
  impl->verdicts.a = impl->verdicts.b = impl->verdicts.c = Verdict::holds;
  return BoundFunction(impl);
}

}  // namespace solitonlab::bounds
