#include "solitonlab/chart/jet_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "solitonlab/error.hpp"

namespace solitonlab::chart {

JetMatrix::JetMatrix(int n, int nvars, int order) : n_(n) {
  if (n < 1 || n > 4) throw PreconditionError("JetMatrix: size must be 1..4");
  a_.assign(static_cast<std::size_t>(n * n), Jet(nvars, order, 0.0));
}

int JetMatrix::order() const {
  int k = numerics::kMaxJetOrder;
  for (const Jet& j : a_) k = std::min(k, j.order());
  return k;
}

Eigen::MatrixXd JetMatrix::values() const {
  Eigen::MatrixXd v(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) v(i, j) = (*this)(i, j).value();
  return v;
}

namespace {

// Minor obtained by deleting row r and column c.
JetMatrix minor_of(const JetMatrix& m, int r, int c) {
  const int n = m.size();
  JetMatrix out(n - 1, m(0, 0).nvars(), m.order());
  for (int i = 0, ii = 0; i < n; ++i) {
    if (i == r) continue;
    for (int j = 0, jj = 0; j < n; ++j) {
      if (j == c) continue;
      out(ii, jj) = m(i, j);
      ++jj;
    }
    ++ii;
  }
  return out;
}

}  // namespace

Jet determinant(const JetMatrix& m) {
  const int n = m.size();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Jet det = m(0, 0) * 0.0;
  for (int c = 0; c < n; ++c) {
    Jet term = m(0, c) * determinant(minor_of(m, 0, c));
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

JetMatrix inverse(const JetMatrix& m) {
  const int n = m.size();
  const Jet det = determinant(m);
  const double scale = std::max(1.0, m.values().cwiseAbs().maxCoeff());
  if (std::abs(det.value()) <= 1e-14 * std::pow(scale, n)) {
    throw DomainError("inverse(JetMatrix): singular matrix");
  }
  const Jet inv_det = numerics::reciprocal(det);
  JetMatrix out(n, m(0, 0).nvars(), m.order());
  if (n == 1) {
    out(0, 0) = inv_det;
    return out;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Jet cof = determinant(minor_of(m, j, i)) * inv_det;
      out(i, j) = (i + j) % 2 == 0 ? cof : -cof;
    }
  }
  return out;
}

}  // namespace solitonlab::chart
