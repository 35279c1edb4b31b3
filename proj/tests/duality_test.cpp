#include <doctest.h>

#include "weil/duality.hpp"
#include "weil/linalg.hpp"
#include "weil/ring_ops.hpp"

using namespace weil;

TEST_SUITE("duality") {
  TEST_CASE("every named coordinate map has a dual") {
    for (const auto& [name, m] : carve::catalog()) {
      CAPTURE(name);
      CHECK_NOTHROW(dual_hom(m));
    }
  }

  TEST_CASE("scaling and diagonal") {
    const auto s = dual_hom(carve::scale());
    CHECK(s.images()[0] == parse_element(s.target(), "Z*X"));
    const auto dd = dual_hom(carve::d_to_dd());
    CHECK(dd.images()[0] == parse_element(dd.target(), "X"));
    CHECK(dd.images()[1] == parse_element(dd.target(), "X"));
    const auto sq = dual_hom(carve::square_to_d2());
    CHECK(sq.images()[1] == parse_element(sq.target(), "X1*X2"));
  }

  TEST_CASE("maps leaving the target are rejected") {
    CHECK_THROWS_AS(dual_hom(carve_map::parse(space_D(), space_D2(), {"1 + X", "0"})), relation_violated);
    CHECK_THROWS_AS(dual_hom(carve_map::parse(space_D(2), space_D(), {"X1 + X2"})), relation_violated);
  }

  TEST_CASE("contravariance") {
    CHECK(dual_contravariance_check(carve::d_to_d0(), carve::d2_first()));
    CHECK(dual_contravariance_check(carve::d_to_dd(), carve::d2_second()));
    CHECK(dual_contravariance_check(carve::d_to_square_0d(), carve::square_to_d2()));
  }

  TEST_CASE("identity") {
    CHECK(dual_hom(carve_map::identity(space_D2())) == algebra_hom::identity(space_D2().algebra_of()));
  }

  TEST_CASE("equalizer of the square diagram") {
    const auto e = dual_hom(carve::square_to_d2());
    const auto f = dual_hom(carve::d_to_square_00());
    const auto g = dual_hom(carve::d_to_square_0d());
    CHECK(equalizer_check(f, g, e));
    CHECK(equalizer_dimension(f, g) == 3);
    CHECK_FALSE(equalizer_check(f, g, compose(e, dual_hom(carve::d2_first()))));
  }
}
