#pragma once

#include <vector>

#include <Eigen/Core>

#include "solitonlab/numerics/jet.hpp"

namespace solitonlab::chart {

using numerics::Jet;

// Small square matrix (n <= 4) of jets sharing one variable count.
class JetMatrix {
 public:
  JetMatrix() = default;
  JetMatrix(int n, int nvars, int order);

  int size() const { return n_; }
  Jet& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Jet& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  int order() const;
  Eigen::MatrixXd values() const;

 private:
  int n_ = 0;
  std::vector<Jet> a_;
};

Jet determinant(const JetMatrix& m);

// Inverse through the adjugate; throws DomainError when det vanishes at the
// base point.
JetMatrix inverse(const JetMatrix& m);

}  // namespace solitonlab::chart
