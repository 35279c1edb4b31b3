#pragma once

#include <cstddef>
#include <vector>

#include "weil/hom.hpp"
#include "weil/rational.hpp"

namespace weil {

/// Row-major dense matrix over the rationals.
struct rational_matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<rational> data;

  rational_matrix() = default;
  rational_matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

std::size_t rank(rational_matrix m);
rational_matrix operator-(const rational_matrix& a, const rational_matrix& b);

/// Matrix of a hom between Weil algebras in weil_basis coordinates; column j
/// is the image of the j-th source basis monomial.
rational_matrix matrix_of(const algebra_hom& h);

/// Outcome of deciding whether `e` exhibits the equalizer of f, g : A → B
/// in the category of Weil algebras (finite-dimensional linear algebra).
struct equalizer_report {
  bool equalizes = false;     // f∘e = g∘e
  bool injective = false;     // e is a monomorphism
  bool spans = false;         // image(e) is all of {a : f(a) = g(a)}
  std::size_t equalizer_dim = 0;
  std::size_t image_dim = 0;
  bool holds() const noexcept { return equalizes && injective && spans; }
};

/// Throws not_weil if any algebra involved is not Weil.
equalizer_report analyze_equalizer(const algebra_hom& f, const algebra_hom& g, const algebra_hom& e);
bool equalizer_check(const algebra_hom& f, const algebra_hom& g, const algebra_hom& e);

/// dim {a ∈ A : f(a) = g(a)}.
std::size_t equalizer_dimension(const algebra_hom& f, const algebra_hom& g);

}  // namespace weil
