#include <doctest.h>

#include "weil/permutation.hpp"

using namespace weil;

TEST_SUITE("permutation") {
  TEST_CASE("basics") {
    CHECK(all_permutations(3).size() == 6);
    CHECK(all_permutations(3).front() == permutation{0, 1, 2});
    CHECK(signature({1, 0, 2}) == -1);
    CHECK(signature({1, 2, 0}) == 1);
    const permutation p{2, 0, 1};
    CHECK(compose(p, inverse(p)) == identity_permutation(3));
    CHECK(transposition(4, 1, 3) == permutation{0, 3, 2, 1});
    CHECK(all_transpositions(4).size() == 6);
    CHECK_FALSE(is_permutation({0, 0}));
  }

  TEST_CASE("delta of a transposition") {
    // sigma = (1 2), i = 1 gives the identity on one letter.
    CHECK(delta_perm({1, 0}, 0) == permutation{0});
    CHECK(delta_perm({1, 0, 2}, 2) == permutation{1, 0});
  }

  TEST_CASE("literal case reading is not a bijection") {
    // sigma = [2,1,3] (1-based), i = 2: the literal conditions send 1 to 0.
    const permutation literal = delta_perm_literal({1, 0, 2}, 1);
    CHECK_FALSE(is_permutation(literal));
    CHECK(is_permutation(delta_perm({1, 0, 2}, 1)));
  }

  TEST_CASE("delta removes i and renumbers") {
    for (std::size_t n1 = 1; n1 <= 5; ++n1)
      for (const auto& s : all_permutations(n1))
        for (std::size_t i = 0; i < n1; ++i) {
          const permutation d = delta_perm(s, i);
          REQUIRE(is_permutation(d));
          const long shift = static_cast<long>(inverse(s)[i]) - static_cast<long>(i);
          CHECK(signature(d) == (shift % 2 ? -1 : 1) * signature(s));
        }
  }
}
