#include <doctest.h>

#include <cmath>

#include "weil/duality.hpp"
#include "weil/prolongation.hpp"
#include "weil/ring_ops.hpp"

using namespace weil;

namespace {
const algebra d = space_D().algebra_of();
wpoint point(const algebra& a, std::vector<std::string> coords) {
  std::vector<element> es;
  for (const auto& c : coords) es.push_back(parse_element(a, c));
  return wpoint(a, es);
}
}  // namespace

TEST_SUITE("prolongation") {
  TEST_CASE("dual numbers give derivatives") {
    // x^2 at a + bX is a^2 + 2abX.
    CHECK(prolong(smooth_map::parse(1, {"x^2"}), point(d, {"3 + 5*X"})) == point(d, {"9 + 30*X"}));
    const auto f = smooth_map::parse(2, {"x*y", "x^2 - y/2"});
    CHECK(prolong(f, point(d, {"1 + 2*X", "3"})) == point(d, {"3 + 6*X", "-1/2 + 4*X"}));
  }

  TEST_CASE("truncated line gives the second order jet") {
    const algebra x3({"X"}, {monomial{3}});
    CHECK(prolong(smooth_map::parse(1, {"x^3"}), point(x3, {"2 + X"})) == point(x3, {"8 + 12*X + 6*X^2"}));
  }

  TEST_CASE("functoriality on an example") {
    const auto f = smooth_map::parse(2, {"x + y^2", "x*y"});
    const auto g = smooth_map::parse(2, {"x*y - 1", "y^3"});
    const algebra d2 = space_D2().algebra_of();
    const auto p = point(d2, {"1 + X", "2 - Y"});
    CHECK(prolong(compose(g, f), p) == prolong(g, prolong(f, p)));
    CHECK(prolong(smooth_map::identity(2), p) == p);
  }

  TEST_CASE("base point and constant points") {
    const auto f = smooth_map::parse(2, {"x*y + 1"});
    const auto p = point(d, {"2 + X", "5 - 3*X"});
    CHECK(tau(p) == std::vector<rational>{2, 5});
    CHECK(tau(prolong(f, p)) == f(tau(p)));
    CHECK(prolong(f, iota(d, {2, 5})) == iota(d, {11}));
  }

  TEST_CASE("free families instantiate") {
    const algebra zx = space_product(space_R(), space_D()).algebra_of();
    const auto fam = point(zx, {"3 + 5*Z*X"});
    CHECK(instantiate_free(fam, {{"Z", 2}}) == point(d, {"3 + 10*X"}));
    const auto f = smooth_map::parse(1, {"x^2"});
    CHECK(instantiate_free(prolong(f, fam), {{"Z", 2}}) == prolong(f, instantiate_free(fam, {{"Z", 2}})));
  }

  TEST_CASE("reassociation") {
    nested_wpoint np{d, d, {{{monomial{0}, parse_element(d, "1 + 2*X")}, {monomial{1}, parse_element(d, "3 + 4*X")}}}};
    const algebra flat = tensor(d, d);
    const wpoint w = reassociate(np);
    CHECK(w == point(flat, {"1 + 3*X@1 + 2*X@2 + 4*X@1*X@2"}));
    CHECK(unassociate(w, d, d) == np);
    const auto f = smooth_map::parse(1, {"x^3 - x"});
    CHECK(prolong(f, w) == reassociate(prolong_nested(f, np)));
  }

  TEST_CASE("alpha along a hom") {
    const auto phi = dual_hom(carve::d_to_dd());
    const algebra d2 = space_D2().algebra_of();
    const auto p = point(d2, {"1 + X + 2*Y"});
    CHECK(alpha(phi, p) == point(d, {"1 + 3*X"}));
  }

  TEST_CASE("transcendental maps") {
    const auto f = smooth_map::parse(1, {"sin(x)"});
    CHECK_FALSE(f.is_polynomial());
    CHECK_THROWS_AS(prolong(f, point(d, {"X"})), inexact_primitive);
    const float_wpoint p(d, {convert<double>(parse_element(d, "1/2 + X"))});
    const auto out = prolong(f, p);
    CHECK(out[0].coefficient(monomial{0}) == doctest::Approx(std::sin(0.5)));
    CHECK(out[0].coefficient(monomial{1}) == doctest::Approx(std::cos(0.5)));
    const auto e = prolong(smooth_map::parse(1, {"exp(2*x)"}), p);
    CHECK(e[0].coefficient(monomial{1}) == doctest::Approx(2 * std::exp(1.0)));
  }

  TEST_CASE("domain dimension is enforced") {
    CHECK_THROWS_AS(prolong(smooth_map::parse(2, {"x*y"}), point(d, {"X"})), dimension_mismatch);
  }
}
