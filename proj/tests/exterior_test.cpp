#include <doctest.h>

#include "weil/exterior.hpp"
#include "weil/oracle.hpp"
#include "weil/random.hpp"
#include "weil/ring_ops.hpp"

using namespace weil;

namespace {
const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};
}  // namespace

TEST_SUITE("exterior") {
  TEST_CASE("boundary shuffle of a tangent") {
    const auto s = shuffle_boundary(microcube::from_rational(1, {{3}, {5}}), 0);
    CHECK(s.degree() == 0);
    const std::string eps = s.scalars().generators().back();
    CHECK(s.at(0, 0) == parse_element(s.scalars(), "3 + 5*" + eps));
  }

  TEST_CASE("boundary shuffle of a square") {
    const auto sq = microcube::from_rational(2, {{1}, {2}, {3}, {4}});
    const auto s0 = shuffle_boundary(sq, 0);
    const std::string eps = s0.scalars().generators().back();
    CHECK(s0.at(0, 0) == parse_element(s0.scalars(), "1 + 2*" + eps));
    CHECK(s0.at(1, 0) == parse_element(s0.scalars(), "3 + 4*" + eps));
    const auto s1 = shuffle_boundary(sq, 1);
    CHECK(s1.at(0, 0) == parse_element(s1.scalars(), "1 + 3*" + eps));
    CHECK(s1.at(1, 0) == parse_element(s1.scalars(), "2 + 4*" + eps));
  }

  TEST_CASE("d of a function is its differential") {
    // f = x^2: df(gamma) = 2 p c1.
    const auto df = exterior_derivative(function_form(smooth_map::parse(1, {"x^2"})));
    CHECK(df.n == 1);
    CHECK(integrate(microcube::from_rational(1, {{3}, {7}}), df) == std::vector<rational>{42});
    const auto dg = exterior_derivative(function_form(smooth_map::parse(2, {"x^2*y - 3*y"})));
    // Df(1,2).(1,1) = 4 + (1 - 3).
    CHECK(integrate(microcube::from_rational(1, {{1, 2}, {1, 1}}), dg) == std::vector<rational>{2});
  }

  TEST_CASE("d(x dy) is dx^dy") {
    const auto d = exterior_derivative(from_classical(classical_field::make(1, 2, {{{1}, parse_expr("x", xy)}})));
    const auto area = from_classical(classical_field::make(2, 2, {{{0, 1}, expr(1)}}));
    sampler rng(8);
    const auto flipped = from_classical(classical_field::make(2, 2, {{{0, 1}, expr(-1)}}));
    for (int t = 0; t < 20; ++t) {
      const auto c = random_microcube(rng, 2, 2);
      CHECK(d(c) == area(c));
      if (!area(c)[0].is_zero()) CHECK(d(c) != flipped(c));
    }
  }

  TEST_CASE("d(y dx) is -dx^dy and constant forms are closed") {
    const auto d = exterior_derivative(from_classical(classical_field::make(1, 2, {{{0}, parse_expr("y", xy)}})));
    const auto c = microcube::from_rational(2, {{0, 0}, {1, 2}, {3, 4}, {0, 0}});
    CHECK(integrate(c, d) == std::vector<rational>{2});
    const auto dc = exterior_derivative(from_classical(classical_field::make(1, 2, {{{0}, expr(3)}, {{1}, expr(-1)}})));
    CHECK(integrate(c, dc) == std::vector<rational>{0});
  }

  TEST_CASE("dd = 0") {
    const auto w = from_classical(classical_field::make(1, 3, {{{0}, parse_expr("x*y*z", xyz)}}));
    const auto dd = exterior_derivative(exterior_derivative(w));
    sampler rng(2);
    for (int t = 0; t < 5; ++t) CHECK(integrate(random_microcube(rng, 3, 3), dd) == std::vector<rational>{0});
  }

  TEST_CASE("partial integrals are homogeneous") {
    const auto w = from_classical(classical_field::make(1, 2, {{{1}, parse_expr("x^2", xy)}}));
    sampler rng(4);
    const auto c = random_microcube(rng, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        auto base = integral_i(w, c, i);
        for (auto& x : base) x *= rational(3);
        CHECK(integral_i(w, scale_direction(c, j, 3), i) == base);
      }
  }
}
