#include "solitonlab/bounds/bound_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "impl.hpp"
#include "solitonlab/error.hpp"
#include "solitonlab/numerics/divergence.hpp"
#include "solitonlab/numerics/quadrature.hpp"

namespace solitonlab::bounds {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "inconclusive";
}

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::affine:
      return "affine";
    case BoundKind::log_affine:
      return "logaffine";
    case BoundKind::power:
      return "power";
    case BoundKind::r_logk:
      return "rlogk";
    case BoundKind::sampled:
      return "sampled";
    case BoundKind::composed_GM:
      return "GM";
    case BoundKind::smoothed:
      return "smoothed";
    case BoundKind::scaled:
      return "scaled";
  }
  return "unknown";
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

namespace {

void check_r(double r) {
  if (!(r >= 0.0)) throw DomainError("BoundFunction: r = " + std::to_string(r) + " is negative");
}

Verdict flag(bool b) { return b ? Verdict::holds : Verdict::fails; }

struct Affine final : BoundFunction::Impl {
  double A, B;
  Affine(double a, double b) : A(a), B(b) {
    const bool pos = B > 0.0 && A >= 0.0;
    verdicts.a = flag(pos);
    verdicts.b = pos ? Verdict::holds : Verdict::not_applicable;
    verdicts.c = flag(A >= 0.0);
  }
  BoundKind kind() const override { return BoundKind::affine; }
  std::string describe() const override { return "affine:" + format_number(A) + "," + format_number(B); }
  double value(double r) const override { return check_r(r), A * r + B; }
  double derivative(double r) const override { return check_r(r), A; }
};

struct LogAffine final : BoundFunction::Impl {
  double A, B;
  LogAffine(double a, double b) : A(a), B(b) {
    const bool pos = B > 0.0 && A >= 0.0;
    verdicts.a = flag(pos);
    verdicts.b = pos ? Verdict::holds : Verdict::not_applicable;
    verdicts.c = flag(A >= 0.0);
  }
  BoundKind kind() const override { return BoundKind::log_affine; }
  std::string describe() const override { return "logaffine:" + format_number(A) + "," + format_number(B); }
  double value(double r) const override { return check_r(r), A * std::log1p(r) + B; }
  double derivative(double r) const override { return check_r(r), A / (1.0 + r); }
};

struct Power final : BoundFunction::Impl {
  double p, s;
  Power(double p_, double s_) : p(p_), s(s_) {
    verdicts.a = flag(s > 0.0);
    // int (1+r)^{-p} diverges iff p <= 1.
    verdicts.b = s > 0.0 ? flag(p <= 1.0) : Verdict::not_applicable;
    verdicts.c = flag(s > 0.0 && p >= 0.0);
  }
  BoundKind kind() const override { return BoundKind::power; }
  std::string describe() const override { return "power:" + format_number(p) + "," + format_number(s); }
  double value(double r) const override { return check_r(r), s * std::pow(1.0 + r, p); }
  double derivative(double r) const override { return check_r(r), s * p * std::pow(1.0 + r, p - 1.0); }
};

struct RLogK final : BoundFunction::Impl {
  double A, B, k;
  RLogK(double a, double b, double k_) : A(a), B(b), k(k_) {
    if (!(k >= 0.0)) throw PreconditionError("rlogk: k must be non-negative");
    const bool pos = B > 0.0 && A >= 0.0;
    verdicts.a = flag(pos);
    verdicts.c = flag(A >= 0.0);
    if (!pos) {
      verdicts.b = Verdict::not_applicable;
    } else if (A == 0.0) {
      verdicts.b = Verdict::holds;
    } else {
      // With u = ln(1+r) the tail behaves like int du / u^k.
      verdicts.b = flag(k <= 1.0);
      if (k > 1.0) {
        verdicts.note =
            "A r ln^k(1+r) + B is often quoted as admissible for every k > 0, but int dr/G converges when k > 1 "
            "(substitute u = ln(1+r)); condition (b) fails";
      }
    }
  }
  BoundKind kind() const override { return BoundKind::r_logk; }
  std::string describe() const override {
    return "rlogk:" + format_number(A) + "," + format_number(B) + "," + format_number(k);
  }
  double value(double r) const override {
    check_r(r);
    return r == 0.0 ? B : A * r * std::pow(std::log1p(r), k) + B;
  }
  double derivative(double r) const override {
    check_r(r);
    if (r == 0.0) return k == 0.0 ? A : 0.0;
    const double L = std::log1p(r);
    return A * (std::pow(L, k) + r * k * std::pow(L, k - 1.0) / (1.0 + r));
  }
};

struct Sampled final : BoundFunction::Impl {
  std::vector<double> r, G;
  Sampled(std::vector<double> r_, std::vector<double> G_) : r(std::move(r_)), G(std::move(G_)) {
    if (r.size() != G.size() || r.size() < 2) {
      throw PreconditionError("sampled bound: need at least two (r, G) pairs of equal length");
    }
    for (std::size_t i = 1; i < r.size(); ++i) {
      if (!(r[i] > r[i - 1])) throw PreconditionError("sampled bound: nodes must be strictly increasing");
    }
    if (r.front() < 0.0) throw PreconditionError("sampled bound: nodes must be non-negative");
    const double last_slope = slope(r.size() - 2);
    const bool pos = *std::min_element(G.begin(), G.end()) > 0.0 && last_slope >= 0.0;
    verdicts.a = flag(pos);
    bool mono = true;
    for (std::size_t i = 1; i < G.size(); ++i) mono = mono && G[i] >= G[i - 1];
    verdicts.c = flag(mono);
    if (!pos) {
      verdicts.b = Verdict::not_applicable;
    } else {
      const auto trace = numerics::divergence_probe([this](double t) { return 1.0 / value(t); }, 0.0);
      verdicts.b = trace.verdict == numerics::DivergenceVerdict::divergent    ? Verdict::holds
                   : trace.verdict == numerics::DivergenceVerdict::convergent ? Verdict::fails
                                                                               : Verdict::inconclusive;
      verdicts.note = std::string("condition (b) decided numerically (") + numerics::to_string(trace.verdict) + ")";
    }
  }
  double slope(std::size_t i) const { return (G[i + 1] - G[i]) / (r[i + 1] - r[i]); }
  std::size_t segment(double x) const {
    auto it = std::upper_bound(r.begin(), r.end(), x);
    std::size_t i = it == r.begin() ? 0 : static_cast<std::size_t>(it - r.begin()) - 1;
    return std::min(i, r.size() - 2);
  }
  BoundKind kind() const override { return BoundKind::sampled; }
  std::string describe() const override { return "sampled:" + std::to_string(r.size()) + " nodes"; }
  double value(double x) const override {
    check_r(x);
    if (x <= r.front()) return G.front();
    const std::size_t i = segment(x);
    return G[i] + slope(i) * (x - r[i]);
  }
  double derivative(double x) const override {
    check_r(x);
    if (x < r.front()) return 0.0;
    return slope(segment(x));
  }
};

struct Scaled final : BoundFunction::Impl {
  BoundFunction base;
  double C;
  Scaled(BoundFunction b, double c) : base(std::move(b)), C(c) {
    verdicts = base.conditions();
    if (!(C > 0.0)) throw PreconditionError("scaled bound: factor must be positive");
  }
  BoundKind kind() const override { return BoundKind::scaled; }
  std::string describe() const override { return format_number(C) + "*(" + base.describe() + ")"; }
  double value(double r) const override { return C * base(r); }
  double derivative(double r) const override { return C * base.derivative(r); }
};

}  // namespace

BoundFunction::BoundFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

BoundFunction BoundFunction::affine(double A, double B) { return BoundFunction(std::make_shared<Affine>(A, B)); }
BoundFunction BoundFunction::log_affine(double A, double B) {
  return BoundFunction(std::make_shared<LogAffine>(A, B));
}
BoundFunction BoundFunction::power(double p, double scale) {
  return BoundFunction(std::make_shared<Power>(p, scale));
}
BoundFunction BoundFunction::r_logk(double A, double B, double k) {
  return BoundFunction(std::make_shared<RLogK>(A, B, k));
}
BoundFunction BoundFunction::sampled(std::vector<double> r, std::vector<double> G) {
  return BoundFunction(std::make_shared<Sampled>(std::move(r), std::move(G)));
}

BoundKind BoundFunction::kind() const { return impl_->kind(); }
std::string BoundFunction::describe() const { return impl_->describe(); }
double BoundFunction::operator()(double r) const { return impl_->value(r); }
double BoundFunction::derivative(double r) const { return impl_->derivative(r); }
const ConditionVerdicts& BoundFunction::conditions() const { return impl_->verdicts; }

BoundFunction BoundFunction::scaled(double C) const { return BoundFunction(std::make_shared<Scaled>(*this, C)); }

ConditionVerdicts classify_conditions(const BoundFunction& G) { return G.conditions(); }

double integral_of_reciprocal(const BoundFunction& G, double s, double tol) {
  if (s < 0.0) throw PreconditionError("integral_of_reciprocal: s must be non-negative");
  auto inv = [&G](double r) {
    const double v = G(r);
    if (!(v > 0.0)) throw DomainError("integral_of_reciprocal: G is not positive at r = " + std::to_string(r));
    return 1.0 / v;
  };
  // Decade panels keep the adaptive partition small for large s.
  double total = 0.0;
  double a = 0.0;
  double b = std::min(s, 1.0);
  while (a < s) {
    numerics::QuadOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    opt.max_panels = 20000;
    const auto r = numerics::integrate_adaptive(inv, a, b, opt);
    if (!r.converged) {
      throw numerics::QuadratureError("integral_of_reciprocal: no convergence", total + r.value, r.error);
    }
    total += r.value;
    a = b;
    b = std::min(s, 10.0 * b);
  }
  return total;
}

double r_G_distance(const BoundFunction& G, double r_M_value) {
  if (!G.conditions().all_hold()) {
    throw PreconditionError("r_G_distance: G must satisfy (a), (b) and (c)");
  }
  if (r_M_value < 0.0) throw PreconditionError("r_G_distance: distance must be non-negative");
  return integral_of_reciprocal(G, r_M_value);
}

BoundFunction parse_bound_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw PreconditionError("bound spec '" + spec + "': expected <family>:<args>");
  const std::string family = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  if (family == "csv") {
    std::ifstream in(args);
    if (!in) throw PreconditionError("bound spec: cannot open '" + args + "'");
    std::vector<double> r, G;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ls(line);
      double a = 0.0, b = 0.0;
      if (!(ls >> a >> b)) {
        if (r.empty()) continue;  // header
        throw PreconditionError("bound spec: malformed line '" + line + "' in " + args);
      }
      r.push_back(a);
      G.push_back(b);
    }
    return BoundFunction::sampled(std::move(r), std::move(G));
  }
  std::vector<double> v;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw PreconditionError("bound spec '" + spec + "': '" + item + "' is not a number");
    }
    v.push_back(x);
  }
  auto want = [&](std::size_t n) {
    if (v.size() != n) {
      throw PreconditionError("bound spec '" + spec + "': expected " + std::to_string(n) + " parameters");
    }
  };
  if (family == "affine") {
    want(2);
    return BoundFunction::affine(v[0], v[1]);
  }
  if (family == "logaffine") {
    want(2);
    return BoundFunction::log_affine(v[0], v[1]);
  }
  if (family == "power") {
    want(2);
    return BoundFunction::power(v[0], v[1]);
  }
  if (family == "rlogk") {
    want(3);
    return BoundFunction::r_logk(v[0], v[1], v[2]);
  }
  throw PreconditionError("bound spec '" + spec + "': unknown family '" + family + "'");
}

}  // namespace solitonlab::bounds
