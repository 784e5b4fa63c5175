#include "solitonlab/graphs/lemma_x.hpp"

#include <algorithm>
#include <cmath>

#include "solitonlab/error.hpp"

namespace solitonlab::graphs {

namespace {

double minkowski(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const Eigen::Index n = a.size() - 1;
  return a.head(n).dot(b.head(n)) - a(n) * b(n);
}

}  // namespace

LemmaXResult lemma_X_property(const Eigen::VectorXd& nu, const Eigen::VectorXd& X, double tol) {
  if (nu.size() != X.size() || nu.size() < 2) throw PreconditionError("lemma_X_property: dimension mismatch");
  const double scale = std::max(1.0, nu.squaredNorm());
  if (std::abs(minkowski(nu, nu) + 1.0) > tol * scale) {
    throw PreconditionError("lemma_X_property: nu is not a unit timelike vector");
  }
  if (std::abs(minkowski(X, X) - 1.0) > tol * std::max(1.0, X.squaredNorm())) {
    throw PreconditionError("lemma_X_property: X is not a unit spacelike vector");
  }
  if (std::abs(minkowski(X, nu)) > tol * std::sqrt(scale * std::max(1.0, X.squaredNorm()))) {
    throw PreconditionError("lemma_X_property: X is not orthogonal to nu");
  }
  const Eigen::Index n = nu.size() - 1;
  const Eigen::VectorXd vm = nu.head(n);
  const Eigen::VectorXd xm = X.head(n);
  LemmaXResult r;
  r.X_E = X.norm();
  r.nu_E = nu.norm();
  const double cross = vm.dot(xm);
  r.defect = std::max(0.0, vm.squaredNorm() * xm.squaredNorm() - cross * cross);
  r.holds = r.X_E <= r.nu_E * (1.0 + 1e-12);
  return r;
}

LemmaXPair sample_lemma_x_pair(int n, numerics::Rng& rng, double boost) {
  if (n < 1) throw PreconditionError("sample_lemma_x_pair: n must be positive");
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = boost * rng.normal();
  LemmaXPair p;
  p.nu.resize(n + 1);
  p.nu.head(n) = v;
  p.nu(n) = std::sqrt(1.0 + v.squaredNorm());
  Eigen::VectorXd X(n + 1);
  double norm2 = 0.0;
  while (norm2 < 1e-8) {
    Eigen::VectorXd y(n + 1);
    for (int i = 0; i <= n; ++i) y(i) = rng.normal();
    X = y + minkowski(y, p.nu) * p.nu;
    norm2 = minkowski(X, X);
  }
  p.X = X / std::sqrt(norm2);
  return p;
}

}  // namespace solitonlab::graphs
