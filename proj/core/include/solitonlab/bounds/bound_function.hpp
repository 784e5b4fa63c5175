#pragma once

// Growth functions G on [0, inf) and the three conditions a primary bound
// must meet:
//   (a) G > 0,  (b) int_0^inf dr / G(r) = inf,  (c) G nondecreasing.

#include <memory>
#include <string>
#include <vector>

namespace solitonlab::bounds {

enum class Verdict { holds, fails, inconclusive, not_applicable };
const char* to_string(Verdict v);

enum class BoundKind { affine, log_affine, power, r_logk, sampled, composed_GM, smoothed, scaled };
const char* to_string(BoundKind k);

struct ConditionVerdicts {
  Verdict a = Verdict::inconclusive;  // positivity
  Verdict b = Verdict::inconclusive;  // divergence of int 1/G
  Verdict c = Verdict::inconclusive;  // nondecreasing
  std::string note;                   // e.g. a documented discrepancy
  bool all_hold() const { return a == Verdict::holds && b == Verdict::holds && c == Verdict::holds; }
};

class BoundFunction {
 public:
  struct Impl;

  // A r + B.
  static BoundFunction affine(double A, double B);
  static BoundFunction constant(double B) { return affine(0.0, B); }
  // A ln(1 + r) + B.
  static BoundFunction log_affine(double A, double B);
  // scale (1 + r)^p.
  static BoundFunction power(double p, double scale = 1.0);
  // A r ln^k(1 + r) + B.
  static BoundFunction r_logk(double A, double B, double k);
  // Linear interpolation through (r_i, G_i), r strictly increasing; constant
  // below r_0 and extended linearly beyond the last node along the last
  // segment.
  static BoundFunction sampled(std::vector<double> r, std::vector<double> G);

  BoundKind kind() const;
  std::string describe() const;
  double operator()(double r) const;
  double derivative(double r) const;

  // Closed forms are classified analytically; sampled tables by scan for
  // (a), (c) and by the divergence probe for (b). Composites carry the
  // verdicts established when they were built.
  const ConditionVerdicts& conditions() const;

  // C G for C > 0.
  BoundFunction scaled(double C) const;

  explicit BoundFunction(std::shared_ptr<const Impl> impl);

 private:
  std::shared_ptr<const Impl> impl_;
};

ConditionVerdicts classify_conditions(const BoundFunction& G);

// int_0^s dr / G(r).
double integral_of_reciprocal(const BoundFunction& G, double s, double tol = 1e-12);

// G^M(s) = G(int_0^s dr / G). Requires (a)(b)(c) and G(0) >= 1, which makes
// int_0^s 1/G <= s and hence G^M <= G. The postconditions (G^M <= G,
// monotone, positive) are checked on a sample of [0, 100].
BoundFunction build_GM(const BoundFunction& G);

// C^1 dominating smoothing of a primary bound G0: the polygon through
// (k, G0(k + 1)), k = 0, 1, ..., with every interior corner replaced on
// [k - h, k + h] by the quadratic joining both segments tangentially.
// Postconditions G >= G0 and G <= 2 P (P the polygon) are checked on a
// 1e-3 grid of [0, check_range].
BoundFunction polygonal_smooth(const BoundFunction& G0, double h = 0.1, double check_range = 50.0);

// r_G = int_0^{r_M} dr / G(r); requires (a)(b)(c).
double r_G_distance(const BoundFunction& G, double r_M_value);

// Parses affine:A,B | power:p,s | rlogk:A,B,k | logaffine:A,B | csv:<path>.
BoundFunction parse_bound_spec(const std::string& spec);

}  // namespace solitonlab::bounds
