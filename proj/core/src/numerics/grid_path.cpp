#include "solitonlab/numerics/grid_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace solitonlab::numerics {

namespace {

struct Sym2 {
  double xx, xy, yy;
};

Sym2 checked_metric(const PlanarMetric& metric, double x, double y) {
  const Eigen::Matrix2d g = metric(x, y);
  const Sym2 s{g(0, 0), 0.5 * (g(0, 1) + g(1, 0)), g(1, 1)};
  const double det = s.xx * s.yy - s.xy * s.xy;
  if (!std::isfinite(det) || !(s.xx > 0.0) || !(det > 0.0)) {
    throw PreconditionError("grid_shortest_path: metric not positive definite at (" + std::to_string(x) + ", " +
                            std::to_string(y) + ")");
  }
  return s;
}

double chord(const Sym2& g, double dx, double dy) {
  return std::sqrt(g.xx * dx * dx + 2.0 * g.xy * dx * dy + g.yy * dy * dy);
}

}  // namespace

double grid_shortest_path(const PlanarMetric& metric, const Box2& box, int resolution, const Point2& p,
                          const Point2& q, GridStencil stencil) {
  if (resolution < 2) throw PreconditionError("grid_shortest_path: resolution must be at least 2");
  if (!(box.x_max > box.x_min) || !(box.y_max > box.y_min)) {
    throw PreconditionError("grid_shortest_path: empty box");
  }
  auto inside = [&](const Point2& a) {
    return a[0] >= box.x_min && a[0] <= box.x_max && a[1] >= box.y_min && a[1] <= box.y_max;
  };
  if (!inside(p) || !inside(q)) throw PreconditionError("grid_shortest_path: endpoint outside the box");

  const int n = resolution;
  const int stride = n + 1;
  const double hx = (box.x_max - box.x_min) / n;
  const double hy = (box.y_max - box.y_min) / n;

  // Metric on the half-step lattice, which holds every chord midpoint.
  const int hstride = 2 * n + 1;
  std::vector<Sym2> half(static_cast<std::size_t>(hstride) * hstride);
  for (int j = 0; j < hstride; ++j) {
    for (int i = 0; i < hstride; ++i) {
      half[static_cast<std::size_t>(j) * hstride + i] =
          checked_metric(metric, box.x_min + 0.5 * i * hx, box.y_min + 0.5 * j * hy);
    }
  }

  std::vector<std::pair<int, int>> moves = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  if (stencil == GridStencil::sixteen) {
    for (int a : {-1, 1}) {
      for (int b : {-2, 2}) {
        moves.emplace_back(a, b);
        moves.emplace_back(b, a);
      }
    }
  }

  const std::size_t grid_nodes = static_cast<std::size_t>(stride) * stride;
  const std::size_t src = grid_nodes;
  const std::size_t dst = grid_nodes + 1;

  auto cell_of = [&](const Point2& a) {
    const int ci = std::clamp(static_cast<int>(std::floor((a[0] - box.x_min) / hx)), 0, n - 1);
    const int cj = std::clamp(static_cast<int>(std::floor((a[1] - box.y_min) / hy)), 0, n - 1);
    return std::pair<int, int>{ci, cj};
  };
  auto corner_links = [&](const Point2& a) {
    std::vector<std::pair<std::size_t, double>> links;
    const auto [ci, cj] = cell_of(a);
    for (int dj = 0; dj <= 1; ++dj) {
      for (int di = 0; di <= 1; ++di) {
        const double cx = box.x_min + (ci + di) * hx;
        const double cy = box.y_min + (cj + dj) * hy;
        const Sym2 g = checked_metric(metric, 0.5 * (a[0] + cx), 0.5 * (a[1] + cy));
        links.emplace_back(static_cast<std::size_t>(cj + dj) * stride + (ci + di), chord(g, cx - a[0], cy - a[1]));
      }
    }
    return links;
  };
  const auto src_links = corner_links(p);
  const auto dst_links = corner_links(q);

  std::vector<double> dist(grid_nodes + 2, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = 0.0;
  heap.emplace(0.0, src);

  auto relax = [&](std::size_t to, double d) {
    if (d < dist[to]) {
      dist[to] = d;
      heap.emplace(d, to);
    }
  };

  if (cell_of(p) == cell_of(q)) {
    const Sym2 g = checked_metric(metric, 0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1]));
    relax(dst, chord(g, q[0] - p[0], q[1] - p[1]));
  }

  while (!heap.empty()) {
    const auto [d, node] = heap.top();
    heap.pop();
    if (d > dist[node]) continue;
    if (node == dst) break;
    if (node == src) {
      for (const auto& [to, w] : src_links) relax(to, d + w);
      continue;
    }
    const int i = static_cast<int>(node % stride);
    const int j = static_cast<int>(node / stride);
    for (const auto& [di, dj] : moves) {
      const int ii = i + di;
      const int jj = j + dj;
      if (ii < 0 || ii > n || jj < 0 || jj > n) continue;
      const Sym2& g = half[static_cast<std::size_t>(2 * j + dj) * hstride + (2 * i + di)];
      relax(static_cast<std::size_t>(jj) * stride + ii, d + chord(g, di * hx, dj * hy));
    }
    for (const auto& [corner, w] : dst_links) {
      if (corner == node) relax(dst, d + w);
    }
  }
  return dist[dst];
}

RichardsonEstimate grid_shortest_path_richardson(const PlanarMetric& metric, const Box2& box, int resolution,
                                                 const Point2& p, const Point2& q, GridStencil stencil) {
  RichardsonEstimate r;
  r.coarse = grid_shortest_path(metric, box, resolution, p, q, stencil);
  r.fine = grid_shortest_path(metric, box, 2 * resolution, p, q, stencil);
  r.extrapolated = 2.0 * r.fine - r.coarse;
  return r;
}

}  // namespace solitonlab::numerics
