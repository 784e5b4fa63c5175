#pragma once

#include "solitonlab/graphs/graph.hpp"

namespace solitonlab::zoo {

// Grim reaper translator over Euclidean R^n, depending on x_1 only:
//   eps = -1:  u = (1/c) ln cosh(c x_1), entire, H = c cosh(c x_1)
//   eps = +1:  u = -(1/c) ln cos(c x_1) on |x_1| < pi / (2c)
graphs::GraphHypersurface grim_reaper(int epsilon, double c = 1.0, int n = 2);

// Length of the directrix s -> (s, 0, ln cosh s) on [-S, S] in the induced
// metric, i.e. the integral of sech; tends to pi.
double directrix_length(double S);

}  // namespace solitonlab::zoo
