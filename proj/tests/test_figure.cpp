#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "alfvac/figure.hpp"

using namespace alfvac::figure;

TEST_CASE("panel names") {
  CHECK(parse_panel("oscillator")->kind == Panel::Kind::oscillator);
  CHECK(parse_panel("mode-3")->ell == 3);
  CHECK_FALSE(parse_panel("mode-5").has_value());
  CHECK_FALSE(parse_panel("mode-").has_value());
  CHECK_FALSE(parse_panel("mode-1x").has_value());
  CHECK_FALSE(parse_panel("wave").has_value());
}

TEST_CASE("mode-0 is the constant 1/sqrt(2)") {
  auto t = sample_panel(*parse_panel("mode-0"), 3);
  REQUIRE(t.columns.size() == 2);
  CHECK(t.header == std::vector<std::string>{"x", "F_0^0"});
  CHECK(t.columns[0] == std::vector<double>{-1.0, 0.0, 1.0});
  for (double v : t.columns[1]) CHECK(v == doctest::Approx(0.70710678118654752).epsilon(1e-15));
}

TEST_CASE("mode panels show 0..l sign changes") {
  for (int ell = 0; ell <= kMaxModePanel; ++ell) {
    auto t = sample_panel({Panel::Kind::mode, ell}, 201);
    REQUIRE(t.columns.size() == static_cast<std::size_t>(ell + 2));
    for (int c = 1; c <= ell + 1; ++c) CHECK(sign_changes(t.columns[c]) == c - 1);
  }
}

TEST_CASE("oscillator panel") {
  auto t = sample_panel({Panel::Kind::oscillator, 0}, 201);
  REQUIRE(t.columns.size() == 6);
  CHECK(t.columns[0].front() == -5.0);
  CHECK(t.columns[0].back() == 5.0);
  for (int n = 0; n < 5; ++n) CHECK(sign_changes(t.columns[n + 1]) == n);
  CHECK_THROWS_AS(sample_panel({Panel::Kind::oscillator, 0}, 1), std::invalid_argument);
}

TEST_CASE("CSV round trip keeps every bit") {
  auto t = sample_panel({Panel::Kind::mode, 3}, 57);
  auto back = parse_csv(to_csv(t));
  CHECK(back.header == t.header);
  CHECK(back.columns == t.columns);
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK_THROWS_AS(parse_csv("a,b\n1,2,3\n"), std::invalid_argument);
}
