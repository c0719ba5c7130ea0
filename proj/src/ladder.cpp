#include "alfvac/ladder.hpp"

#include <cmath>

#include "alfvac/classical.hpp"
#include "alfvac/sturm.hpp"

namespace alfvac {

namespace {

const Polynomial& one_minus_x2() {
  static const Polynomial w({Rational(1), Rational(0), Rational(-1)});
  return w;
}

void check_indices(int ell, int n_x) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  if (n_x < 0) throw out_of_scope_error("negative n_x is outside the ladder construction");
  if (n_x > ell) throw std::invalid_argument("n_x exceeds ell");
}

// Value, first and second derivative carried together.
struct Jet {
  long double v = 0, d1 = 0, d2 = 0;
};

Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2 * a.d1 * b.d1 + a.v * b.d2};
}

Jet power(const Jet& a, long double e) {
  if (e == 0) return {1, 0, 0};
  long double f0 = std::pow(a.v, e);
  long double f1 = e * std::pow(a.v, e - 1);
  long double f2 = e * (e - 1) * std::pow(a.v, e - 2);
  return {f0, f1 * a.d1, f2 * a.d1 * a.d1 + f1 * a.d2};
}

// Raise one step from `state`, folding a rational square root of the
// running c_squared into g first.
LadderALF raise(const LadderALF& state) {
  const int n = state.nodes + 1;
  LadderALF prev = state;
  if (auto root = prev.c_squared.exact_sqrt(); root && *root != Rational(1)) {
    prev.g.poly /= *root;
    prev.c_squared = Rational(1);
  }
  Rational c = norm_constant(prev.ell, n, prev);
  LadderALF next;
  next.ell = prev.ell;
  next.nodes = n;
  next.g = apply_raising(RaisingOperator(prev.ell, n), prev.g);
  next.c_squared = prev.c_squared * c;
  next.constants = prev.constants;
  next.constants.push_back(std::move(c));
  return next;
}

}  // namespace

Rational LadderALF::constant_product() const {
  Rational p(1);
  for (const auto& c : constants) p *= c;
  return p;
}

std::optional<Polynomial> LadderALF::normalized_poly() const {
  auto root = c_squared.exact_sqrt();
  if (!root) return std::nullopt;
  return g.poly / *root;
}

double LadderALF::operator()(double x) const {
  return hp_eval(g, x) / std::sqrt(c_squared.to_double());
}

RaisingOperator::RaisingOperator(int ell_, int step_) : ell(ell_), step(step_) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  if (step < 1 || step > ell) throw std::invalid_argument("raising step must satisfy 1 <= n <= ell");
}

LadderALF ground(int ell) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  const auto l = static_cast<unsigned>(ell);
  Rational lead = Rational::factorial(2 * l) / (Rational(2).pow(l) * Rational::factorial(l));
  return {ell, 0, {Polynomial::constant(lead), l}, Rational(1), {}};
}

HalfPowerFunction apply_raising(const RaisingOperator& op, const HalfPowerFunction& f) {
  if (f.half_power == 0) throw std::invalid_argument("raising needs half power >= 1");
  const long weight = static_cast<long>(f.half_power) + op.coefficient();
  Polynomial p = -(one_minus_x2() * f.poly.derivative()) + Polynomial::x() * f.poly * Rational(weight);
  return {std::move(p), f.half_power - 1};
}

HalfPowerFunction apply_lowering_ground(int ell, const HalfPowerFunction& f) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  if (f.half_power == 0) throw std::invalid_argument("lowering needs half power >= 1");
  const long weight = static_cast<long>(ell) - static_cast<long>(f.half_power);
  Polynomial p = one_minus_x2() * f.poly.derivative() + Polynomial::x() * f.poly * Rational(weight);
  return {std::move(p), f.half_power - 1};
}

Rational norm_constant(int ell, int n, const LadderALF& prev) {
  if (ell < 0 || n < 1 || n > ell) throw std::invalid_argument("norm_constant needs 1 <= n <= ell");
  if (prev.ell != ell || prev.nodes != n - 1)
    throw std::invalid_argument("norm_constant needs the (n-1)-node function of the same ell");
  HalfPowerFunction raised = apply_raising(RaisingOperator(ell, n), prev.g);
  Rational prefactor = Rational(2 * ell + 1) * Rational::factorial(static_cast<unsigned>(n)) /
                       (Rational(2) * Rational::factorial(static_cast<unsigned>(2 * ell - n)));
  return prefactor * hp_inner_product(raised, raised) / prev.c_squared;
}

std::vector<LadderALF> build_mode(int ell) {
  check_indices(ell, 0);
  std::vector<LadderALF> mode;
  mode.reserve(static_cast<std::size_t>(ell) + 1);
  mode.push_back(ground(ell));
  for (int n = 1; n <= ell; ++n) mode.push_back(raise(mode.back()));
  return mode;
}

LadderALF build(int ell, int n_x) {
  check_indices(ell, n_x);
  LadderALF f = ground(ell);
  for (int n = 1; n <= n_x; ++n) f = raise(f);
  return f;
}

double ModifiedALF::operator()(double x) const {
  return hp_eval(g, x) / std::sqrt(c_squared.to_double());
}

ModifiedALF modified(int ell, int m) {
  if (ell < 0 || m < 0 || m > ell) throw std::invalid_argument("modified needs 0 <= m <= ell");
  auto p = classical::rodrigues_alf(ell, m);
  const auto l = static_cast<unsigned>(ell);
  const auto mm = static_cast<unsigned>(m);
  // 1 / [(2l+1)(l-m)! / (2(l+m)!)]
  Rational c_squared = Rational(2) * Rational::factorial(l + mm) /
                       (Rational(2 * ell + 1) * Rational::factorial(l - mm));
  return {ell, m, std::move(p.form), std::move(c_squared)};
}

int node_count(const LadderALF& f) {
  return count_roots_in_open_interval(f.g.poly, Rational(-1), Rational(1));
}

Polynomial ode_residual(int ell, const HalfPowerFunction& f) {
  const long m = f.half_power;
  const long l = ell;
  const Polynomial& p = f.poly;
  Polynomial d1 = p.derivative();
  Polynomial d2 = d1.derivative();
  return one_minus_x2() * d2 - Polynomial::x() * d1 * Rational(2 * (m + 1)) +
         p * Rational(l * (l + 1) - m * (m + 1));
}

Polynomial ode_residual(const LadderALF& f) { return ode_residual(f.ell, f.g); }

double ode_residual_numeric(int ell, int nodes, const HalfPowerFunction& f, const Rational& x) {
  const Rational norm2 = hp_inner_product(f, f);
  if (norm2.is_zero()) return 0.0;
  const long double scale = 1.0L / std::sqrt(static_cast<long double>(norm2.to_double()));
  const Polynomial d1 = f.poly.derivative();
  const long double xv = x.to_double();
  Jet p{static_cast<long double>(f.poly(x).to_double()), static_cast<long double>(d1(x).to_double()),
        static_cast<long double>(d1.derivative()(x).to_double())};
  Jet w{1.0L - xv * xv, -2.0L * xv, -2.0L};
  Jet fx = p * power(w, f.half_power / 2.0L);
  fx = {fx.v * scale, fx.d1 * scale, fx.d2 * scale};
  // -d/dx[(1-x^2) f'] - [l(l+1) - (l - n_x)^2 / (1-x^2)] f
  const long double l = ell;
  const long double m = ell - nodes;
  long double lhs = -(w.v * fx.d2 + w.d1 * fx.d1) - (l * (l + 1) - m * m / w.v) * fx.v;
  return static_cast<double>(lhs);
}

ClassicalComparison compare_with_classical(int ell, int n_x) {
  LadderALF f = build(ell, n_x);
  auto ref = classical::rodrigues_alf(ell, ell - n_x);
  if (f.g.half_power != ref.form.half_power)
    throw std::logic_error("ladder and classical half powers differ");
  auto ratio = proportionality(f.g.poly, ref.form.poly);
  if (!ratio) throw std::logic_error("ladder polynomial is not proportional to the classical one");
  ClassicalComparison out;
  out.ratio = *ratio;
  out.c_squared = f.c_squared;
  out.sign = ratio->sign();
  out.squared_match = (*ratio) * (*ratio) == f.c_squared;
  return out;
}

}  // namespace alfvac
