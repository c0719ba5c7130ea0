#ifndef ALFVAC_POLYNOMIAL_HPP
#define ALFVAC_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "alfvac/rational.hpp"

namespace alfvac {

/// Dense univariate polynomial over the rationals. Coefficient k multiplies
/// x^k; the highest stored coefficient is never zero, so the zero polynomial
/// has no coefficients and degree -1.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned power);
  static Polynomial x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_canonical() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  /// Highest-degree coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  /// Horner evaluation with the coefficients rounded to double.
  double evaluate(double x) const;
  std::vector<double> to_doubles() const;

  Polynomial derivative() const;
  Polynomial pow(unsigned exponent) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial& operator/=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Human-readable form such as "9x^2 - 3".
  std::string str(char variable = 'x') const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial poly_derivative(const Polynomial& p);

/// Euclidean division over Q: returns (quotient, remainder) with
/// deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// If q = c * p for a rational c, returns c. Both must be nonzero.
std::optional<Rational> proportionality(const Polynomial& q, const Polynomial& p);

}  // namespace alfvac

#endif
