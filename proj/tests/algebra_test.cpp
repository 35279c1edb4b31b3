#include <doctest.h>

#include "weil/duality.hpp"
#include "weil/hom.hpp"
#include "weil/ring_ops.hpp"

using namespace weil;

TEST_SUITE("algebra") {
  TEST_CASE("weil basis dimensions") {
    CHECK(space_D().algebra_of().dimension() == 2);
    CHECK(space_D2().algebra_of().dimension() == 3);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(space_D(n).algebra_of().dimension() == (std::size_t{1} << n));
    CHECK(tensor(space_D().algebra_of(), space_D().algebra_of()).dimension() == 4);
    CHECK(algebra().dimension() == 1);
    const algebra x3({"X"}, {monomial{3}});
    CHECK(x3.dimension() == 3);
  }

  TEST_CASE("basis order is graded with the unit first") {
    const algebra d2 = space_D2().algebra_of();
    const auto& b = d2.weil_basis();
    REQUIRE(b.size() == 3);
    CHECK(d2.format_monomial(b[0]) == "1");
    CHECK(d2.format_monomial(b[1]) == "X");
    CHECK(d2.format_monomial(b[2]) == "Y");
    CHECK(d2.to_string() == "k[X,Y]/(X^2,X*Y,Y^2)");
  }

  TEST_CASE("free generators are not Weil") {
    const algebra r = space_R().algebra_of();
    CHECK_FALSE(r.is_weil());
    CHECK_THROWS_AS(r.weil_basis(), not_weil);
    const algebra mixed = space_product(space_R(), space_D()).algebra_of();
    CHECK(mixed.to_string() == "k[Z,X]/(X^2)");
    CHECK_FALSE(mixed.is_nilpotent(0));
    CHECK(mixed.nilpotency(1) == 2);
  }

  TEST_CASE("normal forms") {
    const algebra d2 = space_D2().algebra_of();
    CHECK(parse_element(d2, "(1+X)*(1+Y)") == parse_element(d2, "1+X+Y"));
    CHECK(parse_element(d2, "(X+Y)^2").is_zero());
    CHECK(parse_element(d2, "(2 + 3*X)*(1/2 - Y)").to_string() == "1 + 3/2*X - 2*Y");
    const algebra x3({"X"}, {monomial{3}});
    CHECK(parse_element(x3, "(1+X)^5") == parse_element(x3, "1 + 5*X + 10*X^2"));
  }

  TEST_CASE("hom validation") {
    const algebra d = space_D().algebra_of();
    try {
      algebra_hom::make(d, d, {element::one(d)});
      FAIL("X |-> 1 accepted");
    } catch (const relation_violated& e) {
      CHECK(e.relation() == "X^2");
    }
    CHECK_THROWS_AS(algebra_hom::make(d, d, {parse_element(d, "X + 1")}), relation_violated);
    const algebra big = space_product(space_R(2), space_D2()).algebra_of();
    CHECK_NOTHROW(algebra_hom::make(d, big, {parse_element(big, "Z1*X + Z2*Y")}));
    const algebra d2 = space_D2().algebra_of();
    const auto proj = algebra_hom::make(d2, d, {parse_element(d, "X"), element(d)});
    CHECK(proj(parse_element(d2, "1+2*X+3*Y")) == parse_element(d, "1+2*X"));
    CHECK_THROWS_AS(proj(parse_element(d, "X")), algebra_mismatch);
  }

  TEST_CASE("augmentation and unit") {
    const algebra d = space_D().algebra_of();
    CHECK(algebra_hom::augmentation(d)(parse_element(d, "7 + 5*X")) == element::constant(algebra(), 7));
    CHECK(compose(algebra_hom::augmentation(d), algebra_hom::unit(d)) == algebra_hom::identity(algebra()));
  }

  TEST_CASE("tensor products rename generators") {
    const algebra d = space_D().algebra_of();
    const algebra dd = tensor(d, d);
    CHECK(dd.to_string() == "k[X@1,X@2]/(X@1^2,X@2^2)");
    CHECK(tensor(d, algebra()).same_shape(d));
    const algebra d2 = space_D2().algebra_of();
    CHECK(tensor(tensor(d, d2), d).same_shape(tensor(d, tensor(d2, d))));
    CHECK(tensor(d2, d2).dimension() == 9);
  }
}
