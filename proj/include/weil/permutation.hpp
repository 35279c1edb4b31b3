#pragma once

#include <cstddef>
#include <vector>

namespace weil {

/// A permutation of {0..n-1} given by its images.
using permutation = std::vector<std::size_t>;

bool is_permutation(const permutation& p);
/// +1 or -1 (parity of the inversion count).
int signature(const permutation& p);
/// p ∘ q, i.e. k ↦ p(q(k)).
permutation compose(const permutation& p, const permutation& q);
permutation inverse(const permutation& p);
permutation identity_permutation(std::size_t n);
/// The transposition swapping a and b.
permutation transposition(std::size_t n, std::size_t a, std::size_t b);

/// All n! permutations in lexicographic order.
std::vector<permutation> all_permutations(std::size_t n);
/// All transpositions (a b), a < b, in lexicographic order.
std::vector<permutation> all_transpositions(std::size_t n);

/// δ_i^σ on {0..n-1} for σ on {0..n} (0-based i). For positions j before
/// σ⁻¹(i) the value σ(j) is used, from σ⁻¹(i) on the value σ(j+1); values
/// above i drop by one. Then ε_δ = (-1)^(σ⁻¹(i)-i) ε_σ.
permutation delta_perm(const permutation& sigma, std::size_t i);

/// The four-case reading with every condition tested on σ(j). Not a
/// bijection in general; kept for comparison.
permutation delta_perm_literal(const permutation& sigma, std::size_t i);

}  // namespace weil
