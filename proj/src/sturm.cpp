#include "alfvac/sturm.hpp"

#include <stdexcept>

namespace alfvac {

namespace {

Polynomial positive_normalized(Polynomial p) {
  if (p.is_zero()) return p;
  return p / p.leading().abs();
}

// Divide out (x - root) exactly; root must be a zero of p.
Polynomial deflate(const Polynomial& p, const Rational& root) {
  Polynomial linear({-root, Rational(1)});
  return divmod(p, linear).first;
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  std::vector<Polynomial> chain;
  chain.push_back(positive_normalized(p));
  Polynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(positive_normalized(d));
  while (true) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    Polynomial r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(positive_normalized(-r));
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_roots_in_open_interval(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("root count needs lo < hi");
  // Square-free part, then remove endpoint roots so both ends are regular.
  Polynomial q = p.degree() > 0 ? divmod(p, gcd(p, p.derivative())).first : p;
  if (q(lo).is_zero()) q = deflate(q, lo);
  if (q(hi).is_zero()) q = deflate(q, hi);
  auto chain = sturm_sequence(q);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace alfvac
