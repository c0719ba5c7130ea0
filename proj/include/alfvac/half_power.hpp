#ifndef ALFVAC_HALF_POWER_HPP
#define ALFVAC_HALF_POWER_HPP

#include <vector>

#include "alfvac/polynomial.hpp"

namespace alfvac {

/// The function x -> poly(x) * (1 - x^2)^(half_power / 2) on [-1, 1].
///
/// No factor of (1 - x^2) is ever moved between `poly` and `half_power`, so
/// two instances compare equal only when both parts match.
struct HalfPowerFunction {
  Polynomial poly;
  unsigned half_power = 0;

  bool is_zero() const { return poly.is_zero(); }
  friend bool operator==(const HalfPowerFunction&, const HalfPowerFunction&) = default;
};

/// M(a, s) = integral over [-1, 1] of x^(2a) (1 - x^2)^s.
Rational moment_integral(unsigned a, unsigned s);

/// Exact integral over [-1, 1] of f * g. The combined half power must be
/// even; throws std::invalid_argument otherwise.
Rational hp_inner_product(const HalfPowerFunction& f, const HalfPowerFunction& g);

/// Floating-point value at |x| <= 1; throws std::domain_error outside.
double hp_eval(const HalfPowerFunction& f, double x);

/// Double-precision snapshot of a HalfPowerFunction for repeated sampling.
class NumericHalfPower {
public:
  NumericHalfPower() = default;
  explicit NumericHalfPower(const HalfPowerFunction& f, double scale = 1.0);

  double operator()(double x) const;
  unsigned half_power() const { return half_power_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

private:
  std::vector<double> coeffs_;
  unsigned half_power_ = 0;
};

}  // namespace alfvac

#endif
