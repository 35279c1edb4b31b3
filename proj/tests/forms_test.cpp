#include <doctest.h>

#include "weil/forms.hpp"
#include "weil/random.hpp"

using namespace weil;

namespace {
const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};
}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("x dy on a microsquare") {
    const auto w = from_classical(classical_field::make(1, 2, {{{1}, parse_expr("x", xy)}}));
    CHECK(w.state == differential_form::status::by_construction);
    CHECK(integrate(microcube::from_rational(1, {{2, 3}, {1, 1}}), w) == std::vector<rational>{2});
    CHECK(integrate(microcube::from_rational(1, {{-1, 0}, {7, make_rational(1, 3)}}), w) == std::vector<rational>{make_rational(-1, 3)});
  }

  TEST_CASE("dx^dy is the determinant of the first-order part") {
    const auto area = from_classical(classical_field::make(2, 2, {{{0, 1}, expr(1)}}));
    // c1 = (1,2), c2 = (3,4): 1*4 - 2*3.
    const auto c = microcube::from_rational(2, {{0, 0}, {1, 2}, {3, 4}, {5, 6}});
    CHECK(integrate(c, area) == std::vector<rational>{-2});
  }

  TEST_CASE("directions scale and permute") {
    const auto c = microcube::from_rational(2, {{1}, {2}, {3}, {4}});
    CHECK(scale_direction(c, 0, 5) == microcube::from_rational(2, {{1}, {10}, {3}, {20}}));
    CHECK(permute_directions(c, {1, 0}) == microcube::from_rational(2, {{1}, {3}, {2}, {4}}));
    CHECK(c.to_string() == "{c0=(1), c1=(2), c2=(3), c12=(4)}");
  }

  TEST_CASE("classical forms validate") {
    sampler rng(11);
    const auto f = classical_field::make(2, 3, {{{0, 2}, parse_expr("x*y - z^2", xyz)}, {{1, 2}, parse_expr("3", xyz)}});
    const report r = validate_form(from_classical(f), 20, 4);
    CHECK(r.all_passed());
    CHECK(r.entries().size() == 2 + 1);  // two directions, one transposition
  }

  TEST_CASE("base-point dependence breaks homogeneity") {
    differential_form base;
    base.n = 1, base.m = 1, base.name = "base";
    base.body = [](const microcube& c) { return std::vector<element>{c.base()[0]}; };
    const report r = validate_form(base, 5, 1);
    REQUIRE_FALSE(r.all_passed());
    CHECK(r.first_failure()->id == "homogeneity.1");
    CHECK(r.first_failure()->witness.has_value());
  }

  TEST_CASE("a symmetric product is not alternating") {
    differential_form sym;
    sym.n = 2, sym.m = 1, sym.name = "sym";
    sym.body = [](const microcube& c) { return std::vector<element>{c.first_order(0)[0] * c.first_order(1)[0]}; };
    const report r = validate_form(sym, 5, 1);
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->id.starts_with("alternation"));
  }

  TEST_CASE("0-forms are vacuously valid") {
    const report r = validate_form(function_form(smooth_map::parse(1, {"x^2"})), 5, 1);
    CHECK(r.all_passed());
    CHECK(r.entries().size() == 1);
  }

  TEST_CASE("classical coefficient tuples") {
    const auto f = classical_field::make(2, 2, {{{1, 0}, parse_expr("x", xy)}});
    CHECK(f.to_string() == "(-x) dx^dy");
    CHECK_THROWS_AS(classical_field::make(2, 2, {{{0, 1}, expr(1)}, {{1, 0}, expr(1)}}), condition_violated);
    CHECK_THROWS_AS(classical_field::make(2, 2, {{{0, 0}, expr(1)}}), condition_violated);
    CHECK_NOTHROW(classical_field::make(2, 2, {{{0, 1}, expr(1)}, {{1, 0}, expr(-1)}}));
  }

  TEST_CASE("evaluation checks degree and dimension") {
    const auto w = from_classical(classical_field::make(1, 2, {{{0}, expr(1)}}));
    CHECK_THROWS_AS(w(microcube::from_rational(2, {{0, 0}, {1, 1}, {1, 1}, {1, 1}})), dimension_mismatch);
    CHECK_THROWS_AS(w(microcube::from_rational(1, {{0}, {1}})), dimension_mismatch);
  }

  TEST_CASE("curried families") {
    const auto w = from_classical(classical_field::make(1, 2, {{{0}, parse_expr("y", xy)}}));
    parametrized_body phi = [w](const microcube& c, const rational& t) {
      auto v = w(c);
      for (auto& x : v) x *= t;
      return v;
    };
    const auto slices = curry_factorize(phi, 1, 2, 1, {2, -1}, 5, 3);
    REQUIRE(slices.size() == 2);
    const auto c = microcube::from_rational(1, {{1, 3}, {2, 5}});
    CHECK(integrate(c, slices[0]) == std::vector<rational>{12});
    CHECK(integrate(c, slices[1]) == std::vector<rational>{-6});
    parametrized_body bad = [](const microcube& c, const rational&) { return std::vector<element>{c.base()[0]}; };
    CHECK_THROWS_AS(curry_factorize(bad, 1, 1, 1, {1}, 5, 3), condition_violated);
  }
}
