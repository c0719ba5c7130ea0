#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "alfvac/half_power.hpp"
#include "alfvac/sturm.hpp"

using namespace alfvac;

namespace {

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

Rational binomial(unsigned n, unsigned k) {
  return Rational::factorial(n) / (Rational::factorial(k) * Rational::factorial(n - k));
}

// Independent route: expand (1-x^2)^s binomially and integrate monomials.
Rational moment_by_expansion(unsigned a, unsigned s) {
  Rational total;
  for (unsigned k = 0; k <= s; ++k) {
    Rational term = binomial(s, k) * Rational(2, 2 * static_cast<long>(a + k) + 1);
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

Rational random_rational(std::mt19937& rng, int span = 9, int den_max = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rational(num(rng), den(rng));
}

// Sign changes of p on the grid lo + k (hi-lo)/n, k = 0..n, zeros skipped.
int grid_sign_changes(const Polynomial& p, const Rational& lo, const Rational& hi, int n) {
  int changes = 0, last = 0;
  for (int k = 0; k <= n; ++k) {
    Rational x = lo + (hi - lo) * Rational(k, n);
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

TEST_CASE("rational canonical form and exact square root") {
  Rational q(6, -8);
  CHECK(q == Rational(-3, 4));
  CHECK(q.is_canonical());
  CHECK(Rational::parse("-12/16") == Rational(-3, 4));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK(Rational(36).exact_sqrt() == Rational(6));
  CHECK(Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK_FALSE(Rational(2).exact_sqrt().has_value());
  CHECK_FALSE(Rational(-4).exact_sqrt().has_value());
  CHECK(Rational::factorial(10) == Rational(3628800));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("poly_derivative examples") {
  CHECK(poly_derivative(poly({1})).is_zero());
  CHECK(poly_derivative(poly({0, 0, 1})) == poly({0, 2}));
  CHECK(poly_derivative(poly({-3, 0, 9})) == poly({0, 18}));
}

TEST_CASE("polynomial arithmetic stays canonical") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> a, b;
    for (int k = 0; k < 6; ++k) a.push_back(random_rational(rng));
    for (int k = 0; k < 4; ++k) b.push_back(random_rational(rng));
    Polynomial p(a), q(b);
    for (const auto& r : {p + q, p - q, p * q, p - p, p.derivative(), p / Rational(7, 3)}) {
      CHECK(r.is_canonical());
      CHECK(Polynomial(r.coefficients()) == r);
    }
    if (!q.is_zero()) {
      auto [quot, rem] = divmod(p, q);
      CHECK(quot * q + rem == p);
      CHECK(rem.degree() < q.degree());
      CHECK(rem.is_canonical());
    }
  }
}

TEST_CASE("polynomial rendering") {
  CHECK(poly({-3, 0, 9}).str() == "9x^2 - 3");
  CHECK(poly({Rational(-1, 2), 0, Rational(3, 2)}).str() == "3/2x^2 - 1/2");
  CHECK(poly({0, 1}).str() == "x");
  CHECK(poly({0, -1}).str() == "-x");
  CHECK(Polynomial().str() == "0");
}

TEST_CASE("moment_integral examples") {
  CHECK(moment_integral(0, 0) == Rational(2));
  CHECK(moment_integral(1, 0) == Rational(2, 3));
  // x^2 - x^4 integrates to 2/3 - 2/5
  CHECK(moment_integral(1, 1) == Rational(4, 15));
}

TEST_CASE("moment recurrence matches binomial expansion") {
  for (unsigned a = 0; a <= 20; ++a)
    for (unsigned s = 0; s <= 20; ++s) {
      Rational m = moment_integral(a, s);
      CHECK(m == moment_by_expansion(a, s));
      CHECK(m.is_canonical());
      if (s >= 1)
        CHECK(m == Rational(2 * static_cast<long>(s), 2 * static_cast<long>(a + s) + 1) *
                       moment_integral(a, s - 1));
    }
}

TEST_CASE("hp_inner_product examples") {
  HalfPowerFunction one{poly({1}), 0};
  HalfPowerFunction x{poly({0, 1}), 0};
  HalfPowerFunction p2{poly({Rational(-1, 2), 0, Rational(3, 2)}), 0};
  CHECK(hp_inner_product(one, one) == Rational(2));
  CHECK(hp_inner_product(x, x) == Rational(2, 3));
  // 9/4 * 2/5 - 3/2 * 2/3 + 1/4 * 2
  CHECK(hp_inner_product(p2, p2) == Rational(2, 5));

  HalfPowerFunction half{poly({1}), 1};
  CHECK_THROWS_AS(hp_inner_product(half, one), std::invalid_argument);
  CHECK(hp_inner_product(half, half) == Rational(4, 3));
}

TEST_CASE("odd times even integrates to exactly zero") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> even(7), odd(7);
    for (int k = 0; k < 7; ++k) (k % 2 == 0 ? even : odd)[k] = random_rational(rng);
    unsigned s = static_cast<unsigned>(trial % 4);
    HalfPowerFunction f{Polynomial(even), s};
    HalfPowerFunction g{Polynomial(odd), s + 2 * static_cast<unsigned>(trial % 3)};
    CHECK(hp_inner_product(f, g).is_zero());
  }
}

TEST_CASE("hp_eval examples and domain") {
  HalfPowerFunction w{poly({1}), 2};
  CHECK(hp_eval(w, 0.0) == 1.0);
  CHECK(hp_eval(w, 1.0) == 0.0);
  CHECK(hp_eval(w, -1.0) == 0.0);
  CHECK(hp_eval({poly({0, 2}), 0}, 0.5) == 1.0);
  CHECK(hp_eval({poly({1}), 1}, 0.6) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(hp_eval(w, 1.0000001), std::domain_error);
  CHECK_THROWS_AS(hp_eval(w, -2.0), std::domain_error);
}

TEST_CASE("count_roots_in_open_interval examples") {
  CHECK(count_roots_in_open_interval(poly({Rational(-1, 4), 0, 1}), -1, 1) == 2);
  CHECK(count_roots_in_open_interval(poly({1}), -1, 1) == 0);
  CHECK(count_roots_in_open_interval(poly({-3, 0, 9}), -1, 1) == 2);
  // oracle for the last one: sign changes on a fine rational grid
  CHECK(grid_sign_changes(poly({-3, 0, 9}), -1, 1, 200) == 2);
  CHECK_THROWS_AS(count_roots_in_open_interval(Polynomial(), -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_roots_in_open_interval(poly({1}), 1, -1), std::invalid_argument);
}

TEST_CASE("root counting excludes endpoints and ignores multiplicity") {
  // (x-1)^2 (x+1) x^3
  Polynomial p = poly({-1, 1}).pow(2) * poly({1, 1}) * poly({0, 1}).pow(3);
  CHECK(count_roots_in_open_interval(p, -1, 1) == 1);
  CHECK(count_roots_in_open_interval(p, -2, 2) == 3);
  CHECK(count_roots_in_open_interval(p, 0, 1) == 0);
}

TEST_CASE("root count agrees with roots known by construction") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> nroots(0, 5);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<int> quad(0, 1);
  for (int trial = 0; trial < 150; ++trial) {
    Polynomial p = Polynomial::constant(random_rational(rng, 5, 3));
    if (p.is_zero()) p = Polynomial::constant(1);
    std::set<Rational> roots;
    int degree = 0;
    const int k = nroots(rng);
    for (int i = 0; i < k && degree < 8; ++i) {
      Rational r = random_rational(rng, 7, 4) / Rational(4);
      int e = std::min(mult(rng), 8 - degree);
      p = p * poly({-r, 1}).pow(static_cast<unsigned>(e));
      roots.insert(r);
      degree += e;
    }
    if (degree <= 6 && quad(rng)) {
      // x^2 + c with c > 0 adds no real roots
      p = p * poly({Rational(1, 1 + trial % 5), 0, 1});
    }
    Rational lo(-1), hi(1);
    int expected = static_cast<int>(
        std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return lo < r && r < hi; }));
    CHECK(count_roots_in_open_interval(p, lo, hi) == expected);
  }
}

TEST_CASE("root count bounds grid sign changes for random polynomials") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = random_rational(rng);
    if (c.back().is_zero()) c.back() = Rational(1);
    Polynomial p(c);
    Polynomial sqfree = divmod(p, gcd(p, p.derivative())).first;
    int sturm = count_roots_in_open_interval(p, -1, 1);
    int grid = grid_sign_changes(sqfree, -1, 1, 400);
    CHECK(grid <= sturm);
    // Roots a grid misses come in pairs inside one cell.
    CHECK((sturm - grid) % 2 == 0);
    if (grid < sturm) {
      // Refine by bisection: a tenfold finer grid must expose the rest.
      CHECK(grid_sign_changes(sqfree, -1, 1, 4000) == sturm);
    }
  }
}
