#include <doctest.h>

#include <cmath>

#include "alfvac/classical.hpp"
#include "alfvac/ladder.hpp"
#include "alfvac/sturm.hpp"

using namespace alfvac;

namespace {

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

double f_value(const HalfPowerFunction& f, double x) { return hp_eval(f, x); }

// Direct operator action: -sqrt(1-x^2) f' + c x f / sqrt(1-x^2), f' by central differences.
double raising_by_sampling(int c, const HalfPowerFunction& f, double x) {
  const double h = 1e-6;
  double df = (f_value(f, x + h) - f_value(f, x - h)) / (2 * h);
  double root = std::sqrt(1 - x * x);
  return -root * df + c * x * f_value(f, x) / root;
}

double lowering_by_sampling(int ell, const HalfPowerFunction& f, double x) {
  const double h = 1e-6;
  double df = (f_value(f, x + h) - f_value(f, x - h)) / (2 * h);
  double root = std::sqrt(1 - x * x);
  return root * df + ell * x * f_value(f, x) / root;
}

const double kSamples[] = {-0.9, -0.55, -0.2, 0.1, 0.35, 0.7, 0.85};

}  // namespace

TEST_CASE("ground examples") {
  auto g0 = ground(0);
  CHECK(g0.g == HalfPowerFunction{poly({1}), 0});
  CHECK(g0.c_squared == Rational(1));
  CHECK(ground(1).g == HalfPowerFunction{poly({1}), 1});
  CHECK(ground(2).g == HalfPowerFunction{poly({3}), 2});
  CHECK(ground(3).g == HalfPowerFunction{poly({15}), 3});
  CHECK_THROWS_AS(ground(-1), std::invalid_argument);
}

TEST_CASE("apply_raising examples against direct operator sampling") {
  struct Case {
    int ell, step;
    HalfPowerFunction in, out;
  };
  const Case cases[] = {
      {1, 1, {poly({1}), 1}, {poly({0, 2}), 0}},
      {2, 1, {poly({3}), 2}, {poly({0, 12}), 1}},
      {2, 2, {poly({0, 3}), 1}, {poly({-3, 0, 9}), 0}},
  };
  for (const auto& c : cases) {
    RaisingOperator op(c.ell, c.step);
    auto out = apply_raising(op, c.in);
    CHECK(out == c.out);
    for (double x : kSamples)
      CHECK(hp_eval(out, x) ==
            doctest::Approx(raising_by_sampling(op.coefficient(), c.in, x)).epsilon(1e-7));
  }
}

TEST_CASE("apply_raising preconditions") {
  CHECK_THROWS_AS(apply_raising(RaisingOperator(2, 1), {poly({1}), 0}), std::invalid_argument);
  CHECK_THROWS_AS(RaisingOperator(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(RaisingOperator(2, 3), std::invalid_argument);
}

TEST_CASE("apply_lowering_ground examples") {
  CHECK(apply_lowering_ground(1, ground(1).g).is_zero());
  CHECK(apply_lowering_ground(5, ground(5).g).is_zero());
  HalfPowerFunction f{poly({0, 3}), 1};
  auto out = apply_lowering_ground(2, f);
  CHECK(out == HalfPowerFunction{poly({3}), 0});
  for (double x : kSamples)
    CHECK(hp_eval(out, x) == doctest::Approx(lowering_by_sampling(2, f, x)).epsilon(1e-7));
  CHECK_THROWS_AS(apply_lowering_ground(0, ground(0).g), std::invalid_argument);
}

TEST_CASE("annihilation of every ground function up to ell 50") {
  for (int ell = 1; ell <= 50; ++ell) {
    auto out = apply_lowering_ground(ell, ground(ell).g);
    CHECK(out.is_zero());
    CHECK(out.half_power == static_cast<unsigned>(ell - 1));
  }
}

TEST_CASE("norm_constant examples") {
  // (3/2) * integral (2x)^2 = (3/2)(8/3)
  CHECK(norm_constant(1, 1, build(1, 0)) == Rational(4));
  // (5/12) * integral (12x)^2 (1-x^2)
  CHECK(norm_constant(2, 1, build(2, 0)) == Rational(16));
  // (5/2) * integral (9x^2-3)^2 = (5/2)(72/5)
  CHECK(norm_constant(2, 2, build(2, 1)) == Rational(36));
  CHECK_THROWS_AS(norm_constant(2, 3, build(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(norm_constant(2, 2, build(2, 0)), std::invalid_argument);
}

TEST_CASE("build examples") {
  auto p22 = build(2, 2);
  CHECK(p22.g == HalfPowerFunction{poly({-3, 0, 9}), 0});
  CHECK(p22.c_squared == Rational(36));
  CHECK(p22.constants == std::vector<Rational>{16, 36});
  REQUIRE(p22.normalized_poly().has_value());
  CHECK(*p22.normalized_poly() == poly({Rational(-1, 2), 0, Rational(3, 2)}));
  CHECK(p22(0.5) == doctest::Approx(-0.125).epsilon(1e-15));

  for (int ell = 0; ell <= 6; ++ell) {
    auto b = build(ell, 0);
    auto g = ground(ell);
    CHECK(b.g == g.g);
    CHECK(b.c_squared == Rational(1));
    CHECK(b.constants.empty());
  }

  auto p11 = build(1, 1);
  CHECK(p11.g == HalfPowerFunction{poly({0, 2}), 0});
  CHECK(p11.c_squared == Rational(4));
}

TEST_CASE("build rejects bad indices") {
  CHECK_THROWS_WITH_AS(build(1, 2), "n_x exceeds ell", std::invalid_argument);
  CHECK_THROWS_AS(build(3, -1), out_of_scope_error);
  CHECK_THROWS_AS(build(-1, 0), std::invalid_argument);
}

TEST_CASE("build_mode matches independent builds") {
  for (int ell = 0; ell <= 8; ++ell) {
    auto mode = build_mode(ell);
    REQUIRE(mode.size() == static_cast<std::size_t>(ell + 1));
    for (int n = 0; n <= ell; ++n) {
      auto b = build(ell, n);
      CHECK(mode[n].g == b.g);
      CHECK(mode[n].c_squared == b.c_squared);
      CHECK(mode[n].nodes == n);
    }
  }
}

TEST_CASE("ladder closure: each step lowers s by one and raises the degree by one") {
  for (int ell = 0; ell <= 25; ++ell) {
    auto mode = build_mode(ell);
    for (int n = 0; n <= ell; ++n) {
      CHECK(mode[n].g.half_power == static_cast<unsigned>(ell - n));
      CHECK(mode[n].g.poly.degree() == n);
      CHECK(mode[n].g.poly.leading().sign() > 0);
      CHECK(mode[n].c_squared.sign() > 0);
    }
  }
}

TEST_CASE("normalization constants are positive rational squares") {
  for (int ell = 1; ell <= 25; ++ell) {
    auto top = build(ell, ell);
    REQUIRE(top.constants.size() == static_cast<std::size_t>(ell));
    for (const auto& c : top.constants) {
      CHECK(c.sign() > 0);
      CHECK(c.is_perfect_square());
    }
  }
}

TEST_CASE("modified ALF examples") {
  auto f00 = modified(0, 0);
  CHECK(hp_inner_product(f00.g, f00.g) == f00.c_squared);
  CHECK(f00(0.3) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));

  auto f10 = modified(1, 0);
  CHECK(f10.c_squared == Rational(2, 3));
  CHECK(hp_inner_product(f10.g, f10.g) / f10.c_squared == Rational(1));
  CHECK(f10(0.4) == doctest::Approx(std::sqrt(1.5) * 0.4).epsilon(1e-15));

  CHECK(hp_inner_product(modified(2, 1).g, modified(3, 1).g).is_zero());
  CHECK_THROWS_AS(modified(2, 3), std::invalid_argument);
}

TEST_CASE("orthonormality of modified ALFs in squared form") {
  for (int m = 0; m <= 12; ++m)
    for (int l1 = m; l1 <= 12; ++l1) {
      auto f = modified(l1, m);
      for (int l2 = l1; l2 <= 12; ++l2) {
        auto g = modified(l2, m);
        Rational ip = hp_inner_product(f.g, g.g);
        if (l1 == l2)
          CHECK(ip * ip == f.c_squared * g.c_squared);
        else
          CHECK(ip.is_zero());
      }
    }
}

TEST_CASE("node_count examples and node law") {
  CHECK(node_count(build(3, 0)) == 0);
  CHECK(node_count(build(3, 2)) == 2);
  CHECK(node_count(build(1, 1)) == 1);
  for (int ell = 0; ell <= 20; ++ell) {
    auto mode = build_mode(ell);
    for (int n = 0; n <= ell; ++n) CHECK(node_count(mode[n]) == n);
  }
}

TEST_CASE("ode_residual examples") {
  CHECK(ode_residual(build(1, 1)).is_zero());
  CHECK(ode_residual(build(2, 2)).is_zero());
  for (int ell = 0; ell <= 10; ++ell) CHECK(ode_residual(ground(ell)).is_zero());
  // A function that is not an ALF leaves a nonzero residual.
  CHECK_FALSE(ode_residual(2, {poly({0, 1}), 0}).is_zero());
  CHECK(std::fabs(ode_residual_numeric(2, 2, {poly({0, 1}), 0}, Rational(1, 3))) > 1e-3);
}

TEST_CASE("ODE satisfied exactly and by direct evaluation up to ell 15") {
  for (int ell = 0; ell <= 15; ++ell) {
    auto mode = build_mode(ell);
    for (int n = 0; n <= ell; ++n) {
      CHECK(ode_residual(mode[n]).is_zero());
      for (int k = 1; k <= 11; ++k) {
        double r = ode_residual_numeric(ell, n, mode[n].g, Rational(k - 6, 6));
        CHECK(std::fabs(r) < 1e-9);
      }
    }
  }
}

TEST_CASE("compare_with_classical examples") {
  auto c11 = compare_with_classical(1, 1);
  CHECK(c11.sign == 1);
  CHECK(c11.ratio == Rational(2));
  CHECK(c11.squared_match);

  auto c21 = compare_with_classical(2, 1);
  CHECK(c21.sign == -1);
  CHECK(c21.squared_match);

  auto c22 = compare_with_classical(2, 2);
  CHECK(c22.sign == 1);
  CHECK(c22.squared_match);
  CHECK(c22.ratio == Rational(6));
}

TEST_CASE("Legendre coincidence up to ell 25") {
  for (int ell = 0; ell <= 25; ++ell) {
    auto top = build(ell, ell);
    auto p = classical::legendre_poly(ell);
    CHECK(top.g.poly * top.g.poly == p * p * top.c_squared);
    REQUIRE(top.normalized_poly().has_value());
    CHECK(*top.normalized_poly() == p);
  }
}
