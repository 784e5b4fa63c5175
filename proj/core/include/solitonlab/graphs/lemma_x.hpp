#pragma once

// Euclidean comparison of a timelike unit normal and a unit tangent vector
// orthogonal to it, in Minkowski space R^n x R with metric dx^2 - dt^2.
// The last component of every vector is the time component.

#include <Eigen/Core>

#include "solitonlab/numerics/random.hpp"

namespace solitonlab::graphs {

struct LemmaXResult {
  double X_E = 0.0;   // Euclidean length of X
  double nu_E = 0.0;  // Euclidean length of nu
  // |nu_M|^2 |X_M|^2 - (nu_M . X_M)^2; zero iff d_t, nu, X span a 2-plane.
  // |nu|_E^2 - |X|_E^2 equals twice this quantity.
  double defect = 0.0;
  bool holds = false;  // |X|_E <= |nu|_E
};

// Throws PreconditionError unless gbar(nu,nu) = -1, gbar(X,X) = 1 and
// gbar(X,nu) = 0 to within tol.
LemmaXResult lemma_X_property(const Eigen::VectorXd& nu, const Eigen::VectorXd& X, double tol = 1e-9);

struct LemmaXPair {
  Eigen::VectorXd nu;
  Eigen::VectorXd X;
};

// nu = (v, sqrt(1 + |v|^2)) with Gaussian v of scale `boost`; X is a random
// vector projected to nu's orthogonal complement and normalized.
LemmaXPair sample_lemma_x_pair(int n, numerics::Rng& rng, double boost = 1.0);

}  // namespace solitonlab::graphs
