#pragma once

// Truncated multivariate Taylor expansions ("jets").
//
// A Jet of order K in n <= 3 variables stores the Taylor coefficients
// c_alpha of a smooth function around a base point, for every multi-index
// |alpha| <= K. Arithmetic and the elementary functions propagate the
// coefficients exactly up to the truncation order, so partial derivatives
// of any order <= K come out at machine precision instead of through
// finite differences.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace solitonlab::numerics {

inline constexpr int kMaxJetVars = 3;
inline constexpr int kMaxJetOrder = 8;

using MultiIndex = std::array<int, kMaxJetVars>;

class MonomialTable;

class Jet {
 public:
  // Constant 0 in one variable, order 0.
  Jet();
  Jet(int nvars, int order, double value = 0.0);

  // The coordinate function x_index expanded at `value`.
  static Jet variable(int nvars, int order, int index, double value);

  int nvars() const;
  int order() const;
  std::size_t size() const { return coeffs_.size(); }

  double value() const { return coeffs_[0]; }
  double coefficient(const MultiIndex& alpha) const;
  void set_coefficient(const MultiIndex& alpha, double c);
  std::span<const double> coefficients() const { return coeffs_; }
  MultiIndex exponents(std::size_t k) const;

  // d^alpha f at the base point, i.e. alpha! * c_alpha.
  double derivative(const MultiIndex& alpha) const;

  // Partial derivative with respect to `var`; the result has order - 1.
  Jet partial(int var) const;

  // Antiderivative in the single variable of a univariate jet, with zero
  // constant term; the result has order + 1 (capped at kMaxJetOrder).
  Jet antiderivative() const;

  Jet truncated(int order) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& other);
  Jet& operator-=(const Jet& other);
  Jet& operator*=(const Jet& other);
  Jet& operator/=(const Jet& other);
  Jet& operator+=(double s);
  Jet& operator-=(double s);
  Jet& operator*=(double s);
  Jet& operator/=(double s);

 private:
  Jet(const MonomialTable* table);
  void match(Jet& other_copy);

  const MonomialTable* table_;
  std::vector<double> coeffs_;

  friend Jet multiply(const Jet& a, const Jet& b);
  friend Jet compose(std::span<const double> taylor, const Jet& a);
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, double s);
Jet operator+(double s, Jet a);
Jet operator-(Jet a, double s);
Jet operator-(double s, const Jet& a);
Jet operator*(Jet a, double s);
Jet operator*(double s, Jet a);
Jet operator/(Jet a, double s);
Jet operator/(double s, const Jet& a);

// f(a) where taylor[k] = f^(k)(a0) / k! at a0 = a.value(). Coefficients
// beyond a.order() are ignored; missing ones are treated as zero.
Jet compose(std::span<const double> taylor, const Jet& a);

Jet square(const Jet& a);
Jet reciprocal(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet pow(const Jet& a, double p);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet tanh(const Jet& a);

// Coordinate jets x_i = point[i] + dx_i, one per entry of `point`.
std::vector<Jet> coordinate_jets(std::span<const double> point, int order);

}  // namespace solitonlab::numerics
