#include "alfvac/classical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace alfvac::classical {

ClassicalALF rodrigues_alf(int ell, int m) {
  if (ell < 0 || m < 0 || m > ell) throw std::invalid_argument("rodrigues_alf needs 0 <= m <= ell");
  Polynomial base = Polynomial({Rational(-1), Rational(0), Rational(1)}).pow(static_cast<unsigned>(ell));
  for (int k = 0; k < ell + m; ++k) base = base.derivative();
  Rational scale = Rational(1) / (Rational(2).pow(static_cast<unsigned>(ell)) *
                                  Rational::factorial(static_cast<unsigned>(ell)));
  if (m % 2 == 1) scale = -scale;
  return {ell, m, {base * scale, static_cast<unsigned>(m)}};
}

Polynomial legendre_poly(int ell) {
  if (ell < 0) throw std::invalid_argument("legendre_poly needs ell >= 0");
  return rodrigues_alf(ell, 0).form.poly;
}

double alf_float(int ell, int m, double x) {
  if (ell < 0 || m < 0 || m > ell) throw std::invalid_argument("alf_float needs 0 <= m <= ell");
  if (!(std::fabs(x) <= 1.0)) throw std::domain_error("alf_float needs |x| <= 1");
  const double root = std::sqrt((1.0 - x) * (1.0 + x));
  double pmm = 1.0;
  double odd = 1.0;
  for (int k = 1; k <= m; ++k) {
    pmm *= -odd * root;
    odd += 2.0;
  }
  if (ell == m) return pmm;
  double pm1 = x * (2.0 * m + 1.0) * pmm;
  if (ell == m + 1) return pm1;
  double pll = 0.0;
  for (int l = m + 2; l <= ell; ++l) {
    pll = ((2.0 * l - 1.0) * x * pm1 - (l + m - 1.0) * pmm) / (l - m);
    pmm = pm1;
    pm1 = pll;
  }
  return pll;
}

double oscillator_wavefunction(int n, double u) {
  if (n < 0 || n > 10) throw std::invalid_argument("oscillator_wavefunction needs 0 <= n <= 10");
  const double psi0 = std::exp(-0.5 * u * u) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n == 0) return psi0;
  double prev = psi0;
  double cur = std::numbers::sqrt2 * u * psi0;
  for (int k = 2; k <= n; ++k) {
    double next = std::sqrt(2.0 / k) * u * cur - std::sqrt((k - 1.0) / k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace alfvac::classical
