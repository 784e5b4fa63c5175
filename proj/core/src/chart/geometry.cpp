#include "solitonlab/chart/geometry.hpp"

#include <cmath>
#include <string>

#include "solitonlab/error.hpp"

namespace solitonlab::chart {

namespace {

numerics::MultiIndex unit(int i) {
  numerics::MultiIndex e{0, 0, 0};
  e[i] = 1;
  return e;
}

numerics::MultiIndex pair_index(int i, int j) {
  numerics::MultiIndex e{0, 0, 0};
  e[i] += 1;
  e[j] += 1;
  return e;
}

void require_order(const Jet& f, int needed, const char* what) {
  if (f.order() < needed) {
    throw PreconditionError(std::string(what) + ": insufficient jet order (have " + std::to_string(f.order()) +
                            ", need " + std::to_string(needed) + ")");
  }
}

}  // namespace

LocalGeometry::LocalGeometry(const ChartMetric& metric, std::span<const double> x, int order)
    : g_(metric.components_at(x, order)) {
  build();
}

LocalGeometry::LocalGeometry(JetMatrix g) : g_(std::move(g)) { build(); }

void LocalGeometry::build() {
  const int n = g_.size();
  ginv_ = inverse(g_);
  if (g_.order() < 1) return;
  std::vector<Jet> dg(static_cast<std::size_t>(n * n * n));  // (l, i, j) -> d_l g_ij
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dg[(l * n + i) * n + j] = g_(i, j).partial(l);
  auto d = [&](int l, int i, int j) -> const Jet& { return dg[(l * n + i) * n + j]; };
  gamma_.resize(static_cast<std::size_t>(n * n * n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Jet acc = d(0, 0, 0) * 0.0;
        for (int l = 0; l < n; ++l) acc += ginv_(k, l) * (d(i, j, l) + d(j, i, l) - d(l, i, j));
        acc *= 0.5;
        gamma_[(k * n + i) * n + j] = acc;
        gamma_[(k * n + j) * n + i] = acc;
      }
    }
  }
}

const Jet& LocalGeometry::christoffel_jet(int k, int i, int j) const {
  if (gamma_.empty()) throw PreconditionError("christoffel: insufficient jet order (metric needs order >= 1)");
  const int n = dimension();
  return gamma_[static_cast<std::size_t>((k * n + i) * n + j)];
}

Tensor3 LocalGeometry::christoffel() const {
  const int n = dimension();
  Tensor3 t{n, std::vector<double>(static_cast<std::size_t>(n * n * n))};
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.v[(k * n + i) * n + j] = christoffel_jet(k, i, j).value();
  return t;
}

Tensor4 LocalGeometry::riemann() const {
  if (order() < 2) throw PreconditionError("riemann: insufficient jet order (metric needs order >= 2)");
  const int n = dimension();
  const Tensor3 G = christoffel();
  auto dG = [&](int m, int l, int j, int k) { return christoffel_jet(l, j, k).derivative(unit(m)); };
  // Usual-convention components R^l_ijk, R(d_i, d_j) d_k = R^l_ijk d_l.
  std::vector<double> up(static_cast<std::size_t>(n * n * n * n), 0.0);
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          double r = dG(i, l, j, k) - dG(j, l, i, k);
          for (int m = 0; m < n; ++m) r += G(l, i, m) * G(m, j, k) - G(l, j, m) * G(m, i, k);
          up[((l * n + i) * n + j) * n + k] = r;
        }
      }
    }
  }
  const Eigen::MatrixXd g = g_.values();
  Tensor4 t{n, std::vector<double>(static_cast<std::size_t>(n * n * n * n), 0.0)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m = 0; m < n; ++m) s += g(l, m) * up[((m * n + i) * n + j) * n + k];
          t.v[((i * n + j) * n + k) * n + l] = -s;
        }
      }
    }
  }
  return t;
}

Eigen::MatrixXd LocalGeometry::ricci() const {
  const int n = dimension();
  const Tensor4 R = riemann();
  const Eigen::MatrixXd ginv = ginv_.values();
  // Ric_jk = R^i_ijk (usual) = -g^{il} R_{ijkl} (this convention, lowered).
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) ric(j, k) -= ginv(i, l) * R(i, j, k, l);
  return ric;
}

double LocalGeometry::sectional(const Eigen::VectorXd& v, const Eigen::VectorXd& w) const {
  const int n = dimension();
  if (v.size() != n || w.size() != n) throw PreconditionError("sectional: vector dimension mismatch");
  const Eigen::MatrixXd g = g_.values();
  const double vv = v.dot(g * v), ww = w.dot(g * w), vw = v.dot(g * w);
  const double area = vv * ww - vw * vw;
  if (!(std::abs(area) > 1e-14 * std::abs(vv * ww)) || vv * ww == 0.0) {
    throw PreconditionError("sectional: degenerate plane");
  }
  const Tensor4 R = riemann();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += R(i, j, k, l) * v(i) * w(j) * v(k) * w(l);
  return s / area;
}

Eigen::MatrixXd LocalGeometry::hessian(const Jet& f) const {
  require_order(f, 2, "hessian");
  const int n = dimension();
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = f.derivative(pair_index(i, j));
      for (int k = 0; k < n; ++k) v -= christoffel_jet(k, i, j).value() * f.derivative(unit(k));
      h(i, j) = v;
    }
  }
  return h;
}

JetMatrix LocalGeometry::hessian_jets(const Jet& f) const {
  require_order(f, 2, "hessian");
  const int n = dimension();
  std::vector<Jet> df;
  for (int k = 0; k < n; ++k) df.push_back(f.partial(k));
  JetMatrix h(n, f.nvars(), f.order() - 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Jet v = df[i].partial(j);
      for (int k = 0; k < n; ++k) v -= christoffel_jet(k, i, j) * df[k];
      h(i, j) = v;
    }
  }
  return h;
}

Eigen::VectorXd LocalGeometry::gradient(const Jet& f) const {
  require_order(f, 1, "gradient");
  const int n = dimension();
  Eigen::VectorXd df(n);
  for (int k = 0; k < n; ++k) df(k) = f.derivative(unit(k));
  return ginv_.values() * df;
}

double LocalGeometry::inner(const Jet& f, const Jet& h) const {
  require_order(f, 1, "inner");
  require_order(h, 1, "inner");
  const int n = dimension();
  Eigen::VectorXd df(n), dh(n);
  for (int k = 0; k < n; ++k) {
    df(k) = f.derivative(unit(k));
    dh(k) = h.derivative(unit(k));
  }
  return df.dot(ginv_.values() * dh);
}

double LocalGeometry::laplacian(const Jet& f) const {
  return (ginv_.values().cwiseProduct(hessian(f))).sum();
}

double LocalGeometry::laplacian_divergence(const Jet& f) const {
  require_order(f, 2, "laplacian");
  if (order() < 1) throw PreconditionError("laplacian: insufficient metric jet order");
  const int n = dimension();
  Jet det = determinant(g_);
  if (det.value() < 0.0) det = -det;
  const Jet vol = numerics::sqrt(det);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    Jet flux = vol * 0.0;
    for (int j = 0; j < n; ++j) flux += ginv_(i, j) * f.partial(j);
    flux = vol * flux;
    acc += flux.derivative(unit(i));
  }
  return acc / vol.value();
}

double LocalGeometry::drift_laplacian(const Jet& f, const Jet& h) const { return laplacian(f) - inner(h, f); }

Tensor3 christoffel(const ChartMetric& m, std::span<const double> x) { return LocalGeometry(m, x, 1).christoffel(); }
Tensor4 riemann(const ChartMetric& m, std::span<const double> x) { return LocalGeometry(m, x, 2).riemann(); }
Eigen::MatrixXd ricci(const ChartMetric& m, std::span<const double> x) { return LocalGeometry(m, x, 2).ricci(); }

double sectional(const ChartMetric& m, std::span<const double> x, const Eigen::VectorXd& v,
                 const Eigen::VectorXd& w) {
  return LocalGeometry(m, x, 2).sectional(v, w);
}

Eigen::MatrixXd hessian(const ChartMetric& m, const ScalarField& f, std::span<const double> x) {
  return LocalGeometry(m, x, 2).hessian(f.at(x, 2));
}

double laplacian(const ChartMetric& m, const ScalarField& f, std::span<const double> x) {
  return LocalGeometry(m, x, 2).laplacian(f.at(x, 2));
}

double laplacian_divergence(const ChartMetric& m, const ScalarField& f, std::span<const double> x) {
  return LocalGeometry(m, x, 2).laplacian_divergence(f.at(x, 2));
}

double drift_laplacian(const ChartMetric& m, const ScalarField& f, const ScalarField& h,
                       std::span<const double> x) {
  return LocalGeometry(m, x, 2).drift_laplacian(f.at(x, 2), h.at(x, 2));
}

double gauss_curvature_conformal(double phi, double dphi, double ddphi) {
  if (!(phi > 0.0)) throw DomainError("gauss_curvature_conformal: phi must be positive");
  return phi * ddphi - dphi * dphi;
}

}  // namespace solitonlab::chart
