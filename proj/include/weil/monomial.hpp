#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace weil {

/// Dense exponent vector over an algebra's ordered generator list.
///
/// Ordering is graded lexicographic: lower total degree first, then the
/// monomial with the larger exponent on the earliest generator. With that
/// order the unit comes first and `X` precedes `Y` in k[X,Y].
class monomial {
 public:
  monomial() = default;
  explicit monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  static monomial variable(std::size_t num_vars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint32_t degree() const noexcept;
  bool is_unit() const noexcept;
  /// True iff this monomial divides `other`.
  bool divides(const monomial& other) const noexcept;

  friend monomial operator*(const monomial& a, const monomial& b);
  friend bool operator==(const monomial&, const monomial&) = default;
  friend std::strong_ordering operator<=>(const monomial& a, const monomial& b);

 private:
  std::vector<std::uint32_t> exps_;
};

}  // namespace weil
