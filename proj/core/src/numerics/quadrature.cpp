#include "solitonlab/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace solitonlab::numerics {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel make_panel(const ScalarFunction& f, double a, double b) {
  double err = 0.0;
  const double v = gauss_kronrod15(f, a, b, &err);
  return {a, b, v, err};
}

}  // namespace

double gauss_kronrod15(const ScalarFunction& f, double a, double b, double* error) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) {
    throw NumericalError("gauss_kronrod15: non-finite integrand on [" + std::to_string(a) + ", " +
                         std::to_string(b) + "]");
  }
  if (error != nullptr) *error = std::abs(kronrod - gauss);
  return kronrod;
}

QuadResult integrate_adaptive(const ScalarFunction& f, double a, double b, const QuadOptions& opt) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  if (a > b) {
    out = integrate_adaptive(f, b, a, opt);
    out.value = -out.value;
    return out;
  }
  std::priority_queue<Panel> heap;
  Panel first = make_panel(f, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
  while (total_err > target() && heap.size() < opt.max_panels) {
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // cannot split further
    heap.pop();
    Panel left = make_panel(f, worst.a, mid);
    Panel right = make_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to remove drift from the incremental updates.
  double sum = 0.0, err = 0.0;
  out.panels = heap.size();
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  for (const Panel& p : panels) {
    sum += p.value;
    err += p.error;
  }
  out.value = sum;
  out.error = err;
  out.converged = err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(sum));
  return out;
}

double quad_adaptive(const ScalarFunction& f, double a, double b, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("quad_adaptive: tolerance must be positive");
  if (a > b) throw PreconditionError("quad_adaptive: requires a <= b");
  QuadOptions opt;
  opt.abs_tol = tol;
  const QuadResult r = integrate_adaptive(f, a, b, opt);
  if (!r.converged) {
    throw QuadratureError("quad_adaptive: no convergence on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "] within the panel budget",
                          r.value, r.error);
  }
  return r.value;
}

std::vector<double> cumulative_integral(const ScalarFunction& f, const std::vector<double>& nodes,
                                        double tol) {
  std::vector<double> out(nodes.size(), 0.0);
  const double per_panel = tol / std::max<std::size_t>(nodes.size(), 1);
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    if (nodes[k] < nodes[k - 1]) throw PreconditionError("cumulative_integral: nodes must increase");
    out[k] = out[k - 1] + quad_adaptive(f, nodes[k - 1], nodes[k], per_panel);
  }
  return out;
}

}  // namespace solitonlab::numerics
