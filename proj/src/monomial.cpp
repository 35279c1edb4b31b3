#include "weil/monomial.hpp"

#include <cassert>
#include <numeric>

namespace weil {

monomial monomial::variable(std::size_t num_vars, std::size_t index, std::uint32_t power) {
  monomial m(num_vars);
  m.exps_.at(index) = power;
  return m;
}

std::uint32_t monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

bool monomial::is_unit() const noexcept {
  for (auto e : exps_)
    if (e != 0) return false;
  return true;
}

bool monomial::divides(const monomial& other) const noexcept {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

monomial operator*(const monomial& a, const monomial& b) {
  assert(a.size() == b.size());
  monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

std::strong_ordering operator<=>(const monomial& a, const monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
  return a.size() <=> b.size();
}

}  // namespace weil
