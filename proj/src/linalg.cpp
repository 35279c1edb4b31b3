#include "weil/linalg.hpp"

#include <utility>

namespace weil {

std::size_t rank(rational_matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != r)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m(pivot, k), m(r, k));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      rational f = m(i, c) / m(r, c);
      for (std::size_t k = c; k < m.cols; ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

rational_matrix operator-(const rational_matrix& a, const rational_matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw dimension_mismatch("matrix shapes differ");
  rational_matrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] - b.data[i];
  return out;
}

rational_matrix matrix_of(const algebra_hom& h) {
  const auto& src = h.source().weil_basis();
  const auto& tgt = h.target();
  rational_matrix m(tgt.dimension(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const element img = h.image(src[j]);
    for (const auto& [mono, c] : img.terms()) m(tgt.basis_index(mono), j) = c;
  }
  return m;
}

std::size_t equalizer_dimension(const algebra_hom& f, const algebra_hom& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw algebra_mismatch("equalizer of non-parallel homs");
  return f.source().dimension() - rank(matrix_of(f) - matrix_of(g));
}

equalizer_report analyze_equalizer(const algebra_hom& f, const algebra_hom& g, const algebra_hom& e) {
  if (!(e.target() == f.source())) throw algebra_mismatch("equalizer candidate does not land in the source");
  equalizer_report rep;
  rep.equalizes = compose(f, e) == compose(g, e);
  rep.equalizer_dim = equalizer_dimension(f, g);
  rep.image_dim = rank(matrix_of(e));
  rep.injective = rep.image_dim == e.source().dimension();
  // image(e) ⊆ equalizer when e equalizes, so equal dimensions mean equality.
  rep.spans = rep.equalizes && rep.image_dim == rep.equalizer_dim;
  return rep;
}

bool equalizer_check(const algebra_hom& f, const algebra_hom& g, const algebra_hom& e) {
  return analyze_equalizer(f, g, e).holds();
}

}  // namespace weil
