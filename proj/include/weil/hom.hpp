#pragma once

#include <string>
#include <vector>

#include "weil/algebra.hpp"
#include "weil/element.hpp"

namespace weil {

/// Unital k-algebra homomorphism given by generator images. Construction
/// validates that every relation of the source maps to zero.
class algebra_hom {
 public:
  /// Throws relation_violated naming the first offending relation.
  static algebra_hom make(algebra source, algebra target, std::vector<element> images);

  static algebra_hom identity(const algebra& a);
  /// A → k, every generator to 0.
  static algebra_hom augmentation(const algebra& a);
  /// k → A, inclusion of constants.
  static algebra_hom unit(const algebra& a);

  const algebra& source() const noexcept { return source_; }
  const algebra& target() const noexcept { return target_; }
  const std::vector<element>& images() const noexcept { return images_; }

  /// Image of a single monomial of the source.
  element image(const monomial& m) const;

  template <class C>
  basic_element<C> apply(const basic_element<C>& a) const {
    if (!(a.parent() == source_)) throw algebra_mismatch("hom applied to element of " + a.parent().to_string());
    basic_element<C> out(target_);
    for (const auto& [m, c] : a.terms()) {
      const element img = image(m);
      for (const auto& [mt, ct] : img.terms()) out.add_term(mt, coefficient_traits<C>::from_rational(ct) * c);
    }
    return out;
  }
  element operator()(const element& a) const { return apply(a); }

  std::string to_string() const;

  friend bool operator==(const algebra_hom& a, const algebra_hom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }

 private:
  algebra_hom(algebra s, algebra t, std::vector<element> im)
      : source_(std::move(s)), target_(std::move(t)), images_(std::move(im)) {}

  algebra source_;
  algebra target_;
  std::vector<element> images_;
};

/// ψ ∘ φ; requires φ.target == ψ.source.
algebra_hom compose(const algebra_hom& psi, const algebra_hom& phi);

/// φ ⊗ ψ : A⊗B → A'⊗B' between `tensor` algebras.
algebra_hom tensor(const algebra_hom& phi, const algebra_hom& psi);

/// Positional isomorphism between two algebras of the same shape.
algebra_hom rename_iso(const algebra& from, const algebra& to);

}  // namespace weil
