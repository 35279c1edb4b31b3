#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "weil/algebra.hpp"
#include "weil/element.hpp"
#include "weil/expr.hpp"
#include "weil/rational.hpp"

namespace weil {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Sub-seed for the `counter`-th consumer of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) noexcept;

/// Deterministic generator for law checks. Draws are defined in terms of the
/// raw 64-bit output only, so sequences do not depend on the standard
/// library's distribution implementations.
class sampler {
 public:
  explicit sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// p/q with |p| ≤ num_bound, 1 ≤ q ≤ den_bound.
  rational small_rational(long num_bound = 9, long den_bound = 4);
  std::vector<rational> rational_vector(std::size_t n);

  /// Random element supported on the weil_basis (or on monomials of degree
  /// ≤ max_degree when A has free generators).
  element random_element(const algebra& a, unsigned max_degree = 2);

  /// Random polynomial in `vars` variables of total degree ≤ degree.
  expr random_polynomial(std::size_t vars, unsigned degree, std::size_t max_terms = 4);

 private:
  std::mt19937_64 engine_;
};

}  // namespace weil
