#pragma once

#include <map>
#include <string>
#include <vector>

#include "weil/element.hpp"
#include "weil/expr.hpp"
#include "weil/hom.hpp"
#include "weil/ring_ops.hpp"

namespace weil {

/// The model object R^m.
struct formal_space {
  std::size_t dim = 0;
  friend bool operator==(formal_space, formal_space) = default;
};

/// A map R^m → R^k given as one expression per output coordinate. Maps
/// without transcendental calls are polynomial and lift exactly.
class smooth_map {
 public:
  smooth_map(std::size_t domain_dim, std::vector<expr> components);
  /// Variables default to x,y,z (m ≤ 3) or x1..xm.
  static smooth_map parse(std::size_t domain_dim, const std::vector<std::string>& components,
                          std::vector<std::string> variables = {});
  static smooth_map identity(std::size_t m);

  std::size_t domain_dim() const noexcept { return domain_dim_; }
  std::size_t codomain_dim() const noexcept { return components_.size(); }
  const std::vector<expr>& components() const noexcept { return components_; }
  bool is_polynomial() const;

  std::vector<rational> operator()(const std::vector<rational>& x) const;

  std::string to_string() const;

 private:
  std::size_t domain_dim_;
  std::vector<expr> components_;
};

std::vector<std::string> default_variables(std::size_t m);

/// g ∘ f.
smooth_map compose(const smooth_map& g, const smooth_map& f);

/// A point of R^m ⊗ A, stored as an m-tuple of elements of A.
template <class C>
class basic_wpoint {
 public:
  basic_wpoint(algebra a, std::vector<basic_element<C>> coords) : algebra_(std::move(a)), coords_(std::move(coords)) {
    for (const auto& c : coords_)
      if (!(c.parent() == algebra_)) throw algebra_mismatch("W-point coordinate in the wrong algebra");
  }

  const algebra& algebra_of() const noexcept { return algebra_; }
  formal_space space() const noexcept { return {coords_.size()}; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<basic_element<C>>& coords() const noexcept { return coords_; }
  const basic_element<C>& operator[](std::size_t i) const { return coords_[i]; }

  /// Coefficient vector of monomial m.
  std::vector<C> coefficient(const monomial& m) const {
    std::vector<C> v;
    for (const auto& c : coords_) v.push_back(c.coefficient(m));
    return v;
  }

  friend bool operator==(const basic_wpoint& a, const basic_wpoint& b) {
    return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? ", " : "") + coords_[i].to_string();
    return out + ")";
  }

 private:
  algebra algebra_;
  std::vector<basic_element<C>> coords_;
};

using wpoint = basic_wpoint<rational>;
using float_wpoint = basic_wpoint<double>;

/// Builds a point from per-monomial coefficient vectors of length m.
wpoint make_wpoint(const algebra& a, std::size_t m, const std::map<monomial, std::vector<rational>>& coeffs);

/// T^A f on a point. Polynomial maps lift exactly; transcendental maps are
/// rejected over the rationals (inexact_primitive).
wpoint prolong(const smooth_map& f, const wpoint& p);
/// Float lift; transcendental primitives use truncated Taylor series and
/// need a Weil algebra.
float_wpoint prolong(const smooth_map& f, const float_wpoint& p);

/// α_φ = R ⊗ φ applied coordinatewise.
template <class C>
basic_wpoint<C> alpha(const algebra_hom& phi, const basic_wpoint<C>& p) {
  if (!(phi.source() == p.algebra_of())) throw algebra_mismatch("alpha: point is not over the hom's source");
  std::vector<basic_element<C>> out;
  for (const auto& c : p.coords()) out.push_back(phi.apply(c));
  return basic_wpoint<C>(phi.target(), std::move(out));
}

/// Base point (unit coefficients).
std::vector<rational> tau(const wpoint& p);
/// Constant point with only the unit coefficient.
wpoint iota(const algebra& a, const std::vector<rational>& q);

/// Substitutes scalars for free generators (by name); the resulting algebra
/// drops them. Throws if a name is nilpotent or unknown.
wpoint instantiate_free(const wpoint& p, const std::map<std::string, rational>& values);

/// A point of T^B(T^A R^m): coefficients on A's monomials are elements of B.
struct nested_wpoint {
  algebra outer;
  algebra inner;
  /// coords[i][a-monomial] = element of inner.
  std::vector<std::map<monomial, element>> coords;

  friend bool operator==(const nested_wpoint&, const nested_wpoint&) = default;
};

/// Flattens to a point over tensor(outer, inner) by pairing monomials.
wpoint reassociate(const nested_wpoint& p);
/// Inverse of reassociate; `p` must be over tensor(outer, inner).
nested_wpoint unassociate(const wpoint& p, const algebra& outer, const algebra& inner);

/// T^B(T^A f): evaluates f with A-arithmetic whose coefficients are
/// B-elements. Independent of the flattened route through tensor algebras.
nested_wpoint prolong_nested(const smooth_map& f, const nested_wpoint& p);

}  // namespace weil
