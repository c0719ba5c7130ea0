#include "alfvac/half_power.hpp"

#include <cmath>
#include <stdexcept>

namespace alfvac {

namespace {

// Row M(0..amax, s), each entry by the recurrence in s.
std::vector<Rational> moment_row(unsigned amax, unsigned s) {
  std::vector<Rational> row;
  row.reserve(amax + 1);
  for (unsigned a = 0; a <= amax; ++a) row.push_back(moment_integral(a, s));
  return row;
}

void check_domain(double x) {
  if (!(std::fabs(x) <= 1.0)) throw std::domain_error("half-power function evaluated outside [-1, 1]");
}

}  // namespace

Rational moment_integral(unsigned a, unsigned s) {
  // M(a,0) = 2/(2a+1); M(a,s) = 2s/(2a+2s+1) M(a,s-1)
  Rational m(2, 2 * static_cast<long>(a) + 1);
  for (unsigned k = 1; k <= s; ++k)
    m *= Rational(2 * static_cast<long>(k), 2 * static_cast<long>(a) + 2 * static_cast<long>(k) + 1);
  return m;
}

Rational hp_inner_product(const HalfPowerFunction& f, const HalfPowerFunction& g) {
  if ((f.half_power + g.half_power) % 2 != 0)
    throw std::invalid_argument("inner product with odd combined half power is not polynomial");
  const unsigned s = (f.half_power + g.half_power) / 2;
  Polynomial product = f.poly * g.poly;
  if (product.is_zero()) return Rational(0);
  const auto& c = product.coefficients();
  auto row = moment_row(static_cast<unsigned>(product.degree()) / 2, s);
  Rational total;
  for (std::size_t k = 0; k < c.size(); k += 2) total += c[k] * row[k / 2];
  return total;
}

double hp_eval(const HalfPowerFunction& f, double x) {
  check_domain(x);
  return NumericHalfPower(f)(x);
}

NumericHalfPower::NumericHalfPower(const HalfPowerFunction& f, double scale)
    : coeffs_(f.poly.to_doubles()), half_power_(f.half_power) {
  for (auto& c : coeffs_) c *= scale;
}

double NumericHalfPower::operator()(double x) const {
  check_domain(x);
  double p = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) p = p * x + *it;
  if (half_power_ == 0) return p;
  const double root = std::sqrt(1.0 - x * x);
  double w = 1.0;
  for (unsigned k = 0; k < half_power_; ++k) w *= root;
  return p * w;
}

}  // namespace alfvac
