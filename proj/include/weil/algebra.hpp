#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weil/monomial.hpp"

namespace weil {

/// A pointed finitely presented k-algebra k[X1..Xn]/I with I a monomial
/// ideal. Relations are kept as the minimal monomial generators of I,
/// sorted graded-lex, so two presentations of the same ideal compare equal.
///
/// Values are immutable and cheap to copy (shared presentation).
class algebra {
 public:
  /// The ground ring k (no generators).
  algebra();
  algebra(std::vector<std::string> generators, std::vector<monomial> relations);

  const std::vector<std::string>& generators() const noexcept { return data_->generators; }
  const std::vector<monomial>& relations() const noexcept { return data_->relations; }
  std::size_t num_generators() const noexcept { return data_->generators.size(); }
  std::optional<std::size_t> generator_index(std::string_view name) const;

  /// Some pure power of generator `i` lies in the ideal.
  bool is_nilpotent(std::size_t i) const { return data_->nilpotency.at(i) != 0; }
  /// Least `e` with X_i^e in the ideal, 0 if the generator is free.
  std::uint32_t nilpotency(std::size_t i) const { return data_->nilpotency.at(i); }
  bool is_weil() const noexcept { return data_->weil; }
  bool is_ground() const noexcept { return data_->generators.empty(); }

  /// The monomial lies in the ideal (divisible by some relation).
  bool in_ideal(const monomial& m) const noexcept;

  /// Normal-form monomials in graded-lex order, unit first. Throws not_weil.
  const std::vector<monomial>& weil_basis() const;
  std::size_t dimension() const { return weil_basis().size(); }
  /// Position of a normal-form monomial in weil_basis().
  std::size_t basis_index(const monomial& m) const;

  std::string format_monomial(const monomial& m) const;
  /// e.g. "k[X,Y]/(X^2,X*Y,Y^2)".
  std::string to_string() const;

  /// Identical generator count and relation set, ignoring names.
  bool same_shape(const algebra& other) const noexcept;

  friend bool operator==(const algebra& a, const algebra& b) noexcept;

 private:
  struct data {
    std::vector<std::string> generators;
    std::vector<monomial> relations;
    std::vector<std::uint32_t> nilpotency;
    bool weil = true;
    std::vector<monomial> basis;
  };
  std::shared_ptr<const data> data_;
};

/// A ⊗_k B. Generators are A's then B's, suffixed "@1" / "@2".
algebra tensor(const algebra& a, const algebra& b);

/// Concatenates presentations, keeping names when they are disjoint and
/// falling back to the "@1"/"@2" suffixes of `tensor` otherwise.
algebra concat(const algebra& a, const algebra& b);

/// Removes the listed free generators (they must not occur in relations).
algebra drop_generators(const algebra& a, const std::vector<std::size_t>& indices);

/// Appends one nilpotent generator e with e^2 = 0 (a fresh name).
algebra dual_extension(const algebra& a);

}  // namespace weil
