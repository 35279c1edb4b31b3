#include "weil/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "weil/errors.hpp"

namespace weil {

bool is_permutation(const permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

int signature(const permutation& p) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) inversions += p[a] > p[b];
  return inversions % 2 ? -1 : 1;
}

permutation compose(const permutation& p, const permutation& q) {
  if (p.size() != q.size()) throw dimension_mismatch("composing permutations of different size");
  permutation r(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) r[k] = p[q[k]];
  return r;
}

permutation inverse(const permutation& p) {
  permutation r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[p[k]] = k;
  return r;
}

permutation identity_permutation(std::size_t n) {
  permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

permutation transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= n || b >= n) throw index_out_of_range("transposition index out of range");
  permutation p = identity_permutation(n);
  std::swap(p[a], p[b]);
  return p;
}

std::vector<permutation> all_permutations(std::size_t n) {
  std::vector<permutation> out;
  permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<permutation> all_transpositions(std::size_t n) {
  std::vector<permutation> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) out.push_back(transposition(n, a, b));
  return out;
}

namespace {

permutation delta_impl(const permutation& sigma, std::size_t i, bool literal) {
  if (!is_permutation(sigma)) throw index_out_of_range("not a permutation");
  if (i >= sigma.size()) throw index_out_of_range("delta index out of range");
  const std::size_t n = sigma.size() - 1;
  const std::size_t pivot = inverse(sigma)[i];
  permutation d(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t value = j < pivot ? sigma[j] : sigma[j + 1];
    const std::size_t tested = literal ? sigma[j] : value;
    d[j] = tested < i ? value : value - 1;
  }
  return d;
}

}  // namespace

permutation delta_perm(const permutation& sigma, std::size_t i) { return delta_impl(sigma, i, false); }
permutation delta_perm_literal(const permutation& sigma, std::size_t i) { return delta_impl(sigma, i, true); }

}  // namespace weil
