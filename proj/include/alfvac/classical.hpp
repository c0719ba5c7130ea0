#ifndef ALFVAC_CLASSICAL_HPP
#define ALFVAC_CLASSICAL_HPP

#include "alfvac/half_power.hpp"

namespace alfvac::classical {

/// P_l^m in half-power form, Condon-Shortley phase included.
struct ClassicalALF {
  int ell = 0;
  int m = 0;
  HalfPowerFunction form;  // form.half_power == m
};

/// Exact P_l^m from the Rodrigues formula,
/// (-1)^m (1-x^2)^(m/2) d^(l+m)/dx^(l+m) (x^2-1)^l / (2^l l!).
/// Built from polynomial algebra only; never touches the ladder construction.
ClassicalALF rodrigues_alf(int ell, int m);

/// Legendre polynomial P_l.
Polynomial legendre_poly(int ell);

/// P_l^m(x) in double precision by the diagonal-then-upward recurrence.
double alf_float(int ell, int m, double x);

/// Normalized Hermite function psi_n(u), 0 <= n <= 10, u in oscillator units.
double oscillator_wavefunction(int n, double u);

}  // namespace alfvac::classical

#endif
