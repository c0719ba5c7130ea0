#ifndef ALFVAC_STURM_HPP
#define ALFVAC_STURM_HPP

#include <vector>

#include "alfvac/polynomial.hpp"

namespace alfvac {

/// Sturm chain p, p', -rem(p, p'), ... of a nonzero polynomial. Each member
/// is rescaled by a positive rational to keep coefficients small; signs are
/// unaffected.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Sign changes of the chain evaluated at x, zeros skipped.
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

/// Number of distinct real roots of p strictly inside (lo, hi).
/// Throws std::invalid_argument for the zero polynomial or lo >= hi.
int count_roots_in_open_interval(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace alfvac

#endif
