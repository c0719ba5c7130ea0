#ifndef ALFVAC_LADDER_HPP
#define ALFVAC_LADDER_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "alfvac/half_power.hpp"

namespace alfvac {

/// Raised for negative node numbers, which the construction does not cover.
class out_of_scope_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The ALF with `nodes` zeros in (-1, 1) for degree `ell`, held as
/// g / sqrt(c_squared) so no square root is ever taken.
///
/// `constants` lists the normalization constants C_l^j of every raising
/// step j = 1..nodes. Whenever the running c_squared is an exact rational
/// square it is folded into g before the next step, so after a full build
/// g is the raising operator applied to the normalized previous function
/// and c_squared is the last constant (or a product of constants when a
/// square root was not rational).
struct LadderALF {
  int ell = 0;
  int nodes = 0;
  HalfPowerFunction g;
  Rational c_squared{1};
  std::vector<Rational> constants;

  /// Classical order m = ell - nodes.
  int order() const { return ell - nodes; }
  /// Product of every constant applied so far.
  Rational constant_product() const;
  /// g / sqrt(c_squared) as an exact polynomial factor, when the root is rational.
  std::optional<Polynomial> normalized_poly() const;
  double operator()(double x) const;
};

/// The raising operator -sqrt(1-x^2) d/dx + (ell + 1 - step) x / sqrt(1-x^2).
struct RaisingOperator {
  int ell = 0;
  int step = 1;

  RaisingOperator(int ell, int step);
  int coefficient() const { return ell + 1 - step; }
};

/// Nodeless ALF: (2l)!/(2^l l!) (1 - x^2)^(l/2).
LadderALF ground(int ell);

/// Action of the raising operator on (p, s): (-(1-x^2) p' + (s + c) x p, s - 1).
HalfPowerFunction apply_raising(const RaisingOperator& op, const HalfPowerFunction& f);

/// Action of sqrt(1-x^2) d/dx + l x / sqrt(1-x^2) on (p, s):
/// ((1-x^2) p' + (l - s) x p, s - 1). Annihilates the ground function.
HalfPowerFunction apply_lowering_ground(int ell, const HalfPowerFunction& f);

/// C_l^n = (2l+1) n! / (2 (2l-n)!) * integral of [A+_{l n} P_l^{n-1}]^2,
/// where prev holds P_l^{n-1}.
Rational norm_constant(int ell, int n, const LadderALF& prev);

/// P_l^{n_x} by successive raising of the ground function.
LadderALF build(int ell, int n_x);

/// Every member of the l-mode, nodes = 0..ell, from one raising chain.
std::vector<LadderALF> build_mode(int ell);

/// Unit-norm F_l^m = sqrt((2l+1)(l-m)!/(2(l+m)!)) P_l^m, anchored on the
/// Rodrigues P_l^m. Represented as g / sqrt(c_squared).
struct ModifiedALF {
  int ell = 0;
  int m = 0;
  HalfPowerFunction g;
  Rational c_squared{1};

  double operator()(double x) const;
};

ModifiedALF modified(int ell, int m);

/// Distinct zeros of the represented function strictly inside (-1, 1).
int node_count(const LadderALF& f);

/// (1-x^2) p'' - 2(m+1) x p' + [l(l+1) - m(m+1)] p for f = p (1-x^2)^(m/2).
/// Zero exactly when f solves the associated Legendre equation of degree ell.
Polynomial ode_residual(int ell, const HalfPowerFunction& f);
Polynomial ode_residual(const LadderALF& f);

/// Left side of the associated Legendre equation for the unit-norm
/// rescaling of f, evaluated directly (no reduction) at an interior x.
double ode_residual_numeric(int ell, int nodes, const HalfPowerFunction& f, const Rational& x);

/// Relation of build(ell, n_x) to the Rodrigues P_l^{l-n_x}.
struct ClassicalComparison {
  Rational ratio;      // g.poly = ratio * (classical polynomial factor)
  Rational c_squared;  // build's c_squared
  int sign = 0;        // sign of the ladder function relative to the classical one
  bool squared_match = false;  // ratio^2 == c_squared, i.e. equal up to sign
};

/// Throws std::logic_error if the two polynomial factors are not proportional.
ClassicalComparison compare_with_classical(int ell, int n_x);

}  // namespace alfvac

#endif
