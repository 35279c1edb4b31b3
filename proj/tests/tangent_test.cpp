#include <doctest.h>

#include "weil/duality.hpp"
#include "weil/tangent.hpp"

using namespace weil;

TEST_SUITE("tangent") {
  TEST_CASE("addition and scaling are the vector operations") {
    const std::vector<rational> p{1, 2, 3};
    const auto t = tangent_add(make_tangent(p, {4, 5, 6}), make_tangent(p, {-1, 0, make_rational(1, 2)}));
    CHECK(tangent_base(t) == p);
    CHECK(tangent_vector(t) == std::vector<rational>{3, 5, make_rational(13, 2)});
    const auto s = tangent_scale(make_rational(-2, 3), make_tangent(p, {3, 0, 6}));
    CHECK(tangent_base(s) == p);
    CHECK(tangent_vector(s) == std::vector<rational>{-2, 0, -4});
  }

  TEST_CASE("different base points are rejected") {
    CHECK_THROWS_AS(tangent_add(make_tangent({1}, {2}), make_tangent({2}, {2})), base_mismatch);
  }

  TEST_CASE("module laws") {
    const auto r = tangent_module_laws(3, 20, 5);
    CHECK(r.all_passed());
    CHECK(r.entries().size() >= 10);
  }

  TEST_CASE("euclidean checks") {
    for (std::size_t m = 0; m <= 3; ++m) CHECK(euclidean_check(m, 10, m).all_passed());
    CHECK(euclidean_tensor_check(2, space_D2().algebra_of(), 5, 1).all_passed());
    CHECK_THROWS_AS(euclidean_tensor_check(1, space_R().algebra_of(), 5, 1), not_weil);
  }

  TEST_CASE("fibered tangent pairs") {
    const auto r = fibered_tangent_check(2, 10, 3);
    CHECK(r.all_passed());
    const auto g = glue_d2({1, 2}, {3, 4}, {5, 6});
    CHECK(g.algebra_of() == space_D2().algebra_of());
    CHECK(g.coefficient(monomial{0, 1}) == std::vector<rational>{5, 6});
  }
}
