#include "solitonlab/numerics/jet.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "solitonlab/error.hpp"

namespace solitonlab::numerics {

class MonomialTable {
 public:
  struct Product {
    int lhs;
    int rhs;
    int out;
  };
  struct PartialTerm {
    int src;
    int dst;
    double factor;
  };

  MonomialTable(int nvars, int order) : nvars_(nvars), order_(order) {
    const int side = order + 1;
    lookup_.assign(static_cast<std::size_t>(side * side * side), -1);
    for (int deg = 0; deg <= order; ++deg) {
      // Lexicographic within a degree, first variable most significant.
      for (int a = deg; a >= 0; --a) {
        for (int b = deg - a; b >= 0; --b) {
          const int c = deg - a - b;
          if ((nvars < 2 && b > 0) || (nvars < 3 && c > 0)) continue;
          MultiIndex e{a, b, c};
          lookup_[key(e)] = static_cast<int>(exps_.size());
          exps_.push_back(e);
          degree_.push_back(deg);
        }
      }
    }
    const int n = static_cast<int>(exps_.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (degree_[i] + degree_[j] > order) continue;
        MultiIndex e{exps_[i][0] + exps_[j][0], exps_[i][1] + exps_[j][1],
                     exps_[i][2] + exps_[j][2]};
        products_.push_back({i, j, lookup_[key(e)]});
      }
    }
  }

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  std::size_t size() const { return exps_.size(); }
  const MultiIndex& exponents(std::size_t k) const { return exps_[k]; }
  int degree(std::size_t k) const { return degree_[k]; }
  const std::vector<Product>& products() const { return products_; }

  int index(const MultiIndex& e) const {
    int deg = 0;
    for (int v = 0; v < kMaxJetVars; ++v) {
      if (e[v] < 0) return -1;
      deg += e[v];
    }
    if (deg > order_) return -1;
    return lookup_[key(e)];
  }

  // Terms of d/dx_var mapping into the table of order - 1.
  const std::vector<PartialTerm>& partial_terms(int var) const { return partials_[var]; }

  void build_partials(const MonomialTable* lower) {
    if (lower == nullptr) return;
    for (int v = 0; v < nvars_; ++v) {
      for (std::size_t k = 0; k < exps_.size(); ++k) {
        MultiIndex e = exps_[k];
        if (e[v] == 0) continue;
        const double factor = e[v];
        e[v] -= 1;
        partials_[v].push_back({static_cast<int>(k), lower->index(e), factor});
      }
    }
  }

 private:
  std::size_t key(const MultiIndex& e) const {
    const int side = order_ + 1;
    return static_cast<std::size_t>((e[0] * side + e[1]) * side + e[2]);
  }

  int nvars_;
  int order_;
  std::vector<MultiIndex> exps_;
  std::vector<int> degree_;
  std::vector<int> lookup_;
  std::vector<Product> products_;
  std::array<std::vector<PartialTerm>, kMaxJetVars> partials_;
};

namespace {

struct TableSet {
  std::array<std::array<std::unique_ptr<MonomialTable>, kMaxJetOrder + 1>, kMaxJetVars> tables;

  TableSet() {
    for (int n = 1; n <= kMaxJetVars; ++n) {
      for (int k = 0; k <= kMaxJetOrder; ++k) {
        tables[n - 1][k] = std::make_unique<MonomialTable>(n, k);
      }
      for (int k = 1; k <= kMaxJetOrder; ++k) {
        tables[n - 1][k]->build_partials(tables[n - 1][k - 1].get());
      }
    }
  }
};

const MonomialTable* table_for(int nvars, int order) {
  static const TableSet set;
  if (nvars < 1 || nvars > kMaxJetVars) {
    throw PreconditionError("Jet: number of variables must be 1.." + std::to_string(kMaxJetVars));
  }
  if (order < 0 || order > kMaxJetOrder) {
    throw PreconditionError("Jet: order must be 0.." + std::to_string(kMaxJetOrder));
  }
  return set.tables[nvars - 1][order].get();
}

}  // namespace

Jet::Jet() : Jet(1, 0, 0.0) {}

Jet::Jet(int nvars, int order, double value) : Jet(table_for(nvars, order)) { coeffs_[0] = value; }

Jet::Jet(const MonomialTable* table) : table_(table), coeffs_(table->size(), 0.0) {}

Jet Jet::variable(int nvars, int order, int index, double value) {
  if (index < 0 || index >= nvars) throw PreconditionError("Jet::variable: index out of range");
  Jet j(nvars, order, value);
  if (order >= 1) {
    MultiIndex e{0, 0, 0};
    e[index] = 1;
    j.set_coefficient(e, 1.0);
  }
  return j;
}

int Jet::nvars() const { return table_->nvars(); }
int Jet::order() const { return table_->order(); }

MultiIndex Jet::exponents(std::size_t k) const { return table_->exponents(k); }

double Jet::coefficient(const MultiIndex& alpha) const {
  const int k = table_->index(alpha);
  return k < 0 ? 0.0 : coeffs_[k];
}

void Jet::set_coefficient(const MultiIndex& alpha, double c) {
  const int k = table_->index(alpha);
  if (k < 0) throw PreconditionError("Jet::set_coefficient: multi-index beyond truncation order");
  coeffs_[k] = c;
}

double Jet::derivative(const MultiIndex& alpha) const {
  double factorial = 1.0;
  for (int v = 0; v < kMaxJetVars; ++v) {
    for (int i = 2; i <= alpha[v]; ++i) factorial *= i;
  }
  int deg = alpha[0] + alpha[1] + alpha[2];
  if (deg > order()) {
    throw PreconditionError("Jet::derivative: requested order " + std::to_string(deg) +
                            " exceeds jet order " + std::to_string(order()));
  }
  return factorial * coefficient(alpha);
}

Jet Jet::partial(int var) const {
  if (order() == 0) throw PreconditionError("Jet::partial: cannot differentiate an order-0 jet");
  if (var < 0 || var >= nvars()) throw PreconditionError("Jet::partial: variable out of range");
  Jet out(table_for(nvars(), order() - 1));
  for (const auto& t : table_->partial_terms(var)) out.coeffs_[t.dst] += t.factor * coeffs_[t.src];
  return out;
}

Jet Jet::antiderivative() const {
  if (nvars() != 1) throw PreconditionError("Jet::antiderivative: univariate jets only");
  const int k_out = std::min(order() + 1, kMaxJetOrder);
  Jet out(1, k_out, 0.0);
  for (int k = 0; k + 1 <= k_out && k <= order(); ++k) out.coeffs_[k + 1] = coeffs_[k] / (k + 1);
  return out;
}

Jet Jet::truncated(int new_order) const {
  if (new_order >= order()) return *this;
  Jet out(table_for(nvars(), new_order));
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

void Jet::match(Jet& other) {
  if (other.nvars() != nvars()) {
    throw PreconditionError("Jet: mixing jets with different numbers of variables");
  }
  if (other.order() < order()) {
    *this = truncated(other.order());
  } else if (other.order() > order()) {
    other = other.truncated(order());
  }
}

Jet Jet::operator-() const {
  Jet out = *this;
  for (double& c : out.coeffs_) c = -c;
  return out;
}

Jet& Jet::operator+=(const Jet& other) {
  Jet rhs = other;
  match(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& other) {
  Jet rhs = other;
  match(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& other) { return *this = multiply(*this, other); }
Jet& Jet::operator/=(const Jet& other) { return *this = multiply(*this, reciprocal(other)); }

Jet& Jet::operator+=(double s) {
  coeffs_[0] += s;
  return *this;
}
Jet& Jet::operator-=(double s) {
  coeffs_[0] -= s;
  return *this;
}
Jet& Jet::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}
Jet& Jet::operator/=(double s) {
  for (double& c : coeffs_) c /= s;
  return *this;
}

Jet multiply(const Jet& a_in, const Jet& b_in) {
  Jet a = a_in;
  Jet b = b_in;
  a.match(b);
  Jet out(a.table_);
  for (const auto& p : a.table_->products()) out.coeffs_[p.out] += a.coeffs_[p.lhs] * b.coeffs_[p.rhs];
  return out;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(const Jet& a, const Jet& b) { return multiply(a, b); }
Jet operator/(const Jet& a, const Jet& b) { return multiply(a, reciprocal(b)); }
Jet operator+(Jet a, double s) { return a += s; }
Jet operator+(double s, Jet a) { return a += s; }
Jet operator-(Jet a, double s) { return a -= s; }
Jet operator-(double s, const Jet& a) { return (-a) += s; }
Jet operator*(Jet a, double s) { return a *= s; }
Jet operator*(double s, Jet a) { return a *= s; }
Jet operator/(Jet a, double s) { return a /= s; }
Jet operator/(double s, const Jet& a) { return reciprocal(a) *= s; }

Jet compose(std::span<const double> taylor, const Jet& a) {
  const int order = a.order();
  auto coeff = [&](int k) { return k < static_cast<int>(taylor.size()) ? taylor[k] : 0.0; };
  Jet delta = a;
  delta.coeffs_[0] = 0.0;
  Jet out(a.table_);
  out.coeffs_[0] = coeff(order);
  for (int k = order - 1; k >= 0; --k) {
    out = multiply(out, delta);
    out.coeffs_[0] += coeff(k);
  }
  return out;
}

namespace {

std::vector<double> series_exp(double x, int order) {
  std::vector<double> t(order + 1);
  double e = std::exp(x);
  double fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= k;
    t[k] = e / fact;
  }
  return t;
}

std::vector<double> series_pow(double x, double p, int order) {
  std::vector<double> t(order + 1, 0.0);
  const bool integral = std::floor(p) == p && p >= 0.0;
  if (x <= 0.0 && !integral) {
    throw DomainError("pow(Jet): base " + std::to_string(x) + " must be positive for exponent " +
                      std::to_string(p));
  }
  double binom = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) binom *= (p - (k - 1)) / k;
    if (integral && k > p) break;
    t[k] = binom * std::pow(x, p - k);
  }
  return t;
}

}  // namespace

Jet square(const Jet& a) { return multiply(a, a); }

Jet reciprocal(const Jet& a) {
  const double x = a.value();
  if (x == 0.0) throw DomainError("reciprocal(Jet): division by a jet with zero value");
  std::vector<double> t(a.order() + 1);
  double inv = 1.0 / x;
  double pw = inv;
  for (int k = 0; k <= a.order(); ++k) {
    t[k] = (k % 2 == 0 ? 1.0 : -1.0) * pw;
    pw *= inv;
  }
  return compose(t, a);
}

Jet exp(const Jet& a) { return compose(series_exp(a.value(), a.order()), a); }

Jet log(const Jet& a) {
  const double x = a.value();
  if (x <= 0.0) throw DomainError("log(Jet): non-positive argument " + std::to_string(x));
  std::vector<double> t(a.order() + 1);
  t[0] = std::log(x);
  double pw = 1.0;
  for (int k = 1; k <= a.order(); ++k) {
    pw /= x;
    t[k] = (k % 2 == 1 ? 1.0 : -1.0) * pw / k;
  }
  return compose(t, a);
}

Jet sqrt(const Jet& a) {
  if (a.value() <= 0.0) throw DomainError("sqrt(Jet): non-positive argument " + std::to_string(a.value()));
  return compose(series_pow(a.value(), 0.5, a.order()), a);
}

Jet pow(const Jet& a, double p) { return compose(series_pow(a.value(), p, a.order()), a); }

Jet sin(const Jet& a) {
  const double s = std::sin(a.value());
  const double c = std::cos(a.value());
  const double cycle[4] = {s, c, -s, -c};
  std::vector<double> t(a.order() + 1);
  double fact = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fact *= k;
    t[k] = cycle[k % 4] / fact;
  }
  return compose(t, a);
}

Jet cos(const Jet& a) {
  const double s = std::sin(a.value());
  const double c = std::cos(a.value());
  const double cycle[4] = {c, -s, -c, s};
  std::vector<double> t(a.order() + 1);
  double fact = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fact *= k;
    t[k] = cycle[k % 4] / fact;
  }
  return compose(t, a);
}

Jet sinh(const Jet& a) {
  const double s = std::sinh(a.value());
  const double c = std::cosh(a.value());
  std::vector<double> t(a.order() + 1);
  double fact = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fact *= k;
    t[k] = (k % 2 == 0 ? s : c) / fact;
  }
  return compose(t, a);
}

Jet cosh(const Jet& a) {
  const double s = std::sinh(a.value());
  const double c = std::cosh(a.value());
  std::vector<double> t(a.order() + 1);
  double fact = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fact *= k;
    t[k] = (k % 2 == 0 ? c : s) / fact;
  }
  return compose(t, a);
}

Jet tanh(const Jet& a) {
  // T' = 1 - T^2 solved coefficient by coefficient.
  const int order = a.order();
  std::vector<double> t(order + 1, 0.0);
  t[0] = std::tanh(a.value());
  for (int k = 0; k < order; ++k) {
    double sq = 0.0;
    for (int i = 0; i <= k; ++i) sq += t[i] * t[k - i];
    t[k + 1] = ((k == 0 ? 1.0 : 0.0) - sq) / (k + 1);
  }
  return compose(t, a);
}

std::vector<Jet> coordinate_jets(std::span<const double> point, int order) {
  const int n = static_cast<int>(point.size());
  std::vector<Jet> xs;
  xs.reserve(point.size());
  for (int i = 0; i < n; ++i) xs.push_back(Jet::variable(n, order, i, point[i]));
  return xs;
}

}  // namespace solitonlab::numerics
