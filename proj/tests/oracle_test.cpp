#include <doctest.h>

#include "weil/oracle.hpp"

using namespace weil;

namespace {
const std::vector<std::string> xyz{"x", "y", "z"};
expr p(const std::string& s) { return parse_expr(s, xyz); }
// Equality of polynomial expressions through a common normal form.
bool same(const expr& a, const expr& b) {
  return classical_field::make(0, 3, {{{}, a}}) == classical_field::make(0, 3, {{{}, b}});
}
}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("partial derivatives") {
    CHECK(same(oracle::partial(p("x^2*y"), 0), p("2*x*y")));
    CHECK(same(oracle::partial(p("x^2*y"), 1), p("x^2")));
    CHECK(same(oracle::partial(p("x^2*y"), 2), p("0")));
    CHECK(same(oracle::partial(p("(x + y)^3"), 0), p("3*x^2 + 6*x*y + 3*y^2")));
    CHECK(same(oracle::partial(p("-x*z + 1/2"), 2), p("-x")));
    CHECK(to_string(oracle::partial(p("sin(x)"), 0), xyz).find("cos") != std::string::npos);
    CHECK_THROWS_AS(oracle::partial(p("log(x)"), 0), inexact_primitive);
  }

  TEST_CASE("classical d of 1-forms") {
    // d(x dy) = dx^dy, d(y dx) = -dx^dy.
    CHECK(oracle::classical_d(classical_field::make(1, 2, {{{1}, p("x")}})).to_string() == "(1) dx^dy");
    CHECK(oracle::classical_d(classical_field::make(1, 2, {{{0}, p("y")}})).to_string() == "(-1) dx^dy");
    // d(xyz dx) = -xz dx^dy - xy dx^dz.
    const auto d = oracle::classical_d(classical_field::make(1, 3, {{{0}, p("x*y*z")}}));
    CHECK(d == classical_field::make(2, 3, {{{0, 1}, p("-x*z")}, {{0, 2}, p("-x*y")}}));
  }

  TEST_CASE("classical d of a 2-form and of a function") {
    // d(z dx^dy + x*y^2 dy^dz) = (1 + y^2) dx^dy^dz.
    const auto d = oracle::classical_d(classical_field::make(2, 3, {{{0, 1}, p("z")}, {{1, 2}, p("x*y^2")}}));
    CHECK(d == classical_field::make(3, 3, {{{0, 1, 2}, p("1 + y^2")}}));
    const auto df = oracle::classical_d(classical_field::make(0, 3, {{{}, p("x^2*z")}}));
    CHECK(df == classical_field::make(1, 3, {{{0}, p("2*x*z")}, {{2}, p("x^2")}}));
  }

  TEST_CASE("dd vanishes classically") {
    const auto f = classical_field::make(1, 3, {{{0}, p("x*y^2*z")}, {{1}, p("z^3 - x")}, {{2}, p("y")}});
    CHECK(oracle::classical_d(oracle::classical_d(f)).coefficients().empty());
  }
}
