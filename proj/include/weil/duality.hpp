#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weil/algebra.hpp"
#include "weil/expr.hpp"
#include "weil/hom.hpp"

namespace weil {

/// A carved space, known only through its algebra: one generator per
/// coordinate, nilpotent generators are the infinitesimal coordinates.
class carved_space {
 public:
  explicit carved_space(algebra a) : algebra_(std::move(a)) {}

  const algebra& algebra_of() const noexcept { return algebra_; }
  const std::vector<std::string>& coordinates() const noexcept { return algebra_.generators(); }
  std::size_t dim() const noexcept { return algebra_.num_generators(); }
  bool is_infinitesimal(std::size_t i) const { return algebra_.is_nilpotent(i); }

  friend bool operator==(const carved_space&, const carved_space&) = default;

 private:
  algebra algebra_;
};

/// D^n: k[X1..Xn]/(X1^2..Xn^2); for n = 1 the coordinate is named X.
carved_space space_D(std::size_t n = 1);
/// D(2) = {(x,y) ∈ D×D | xy = 0}: k[X,Y]/(X^2,Y^2,XY).
carved_space space_D2();
/// R^n: k[Z1..Zn] (Z for n = 1); R^0 is the point with algebra k.
carved_space space_R(std::size_t n = 1);
carved_space space_product(const carved_space& a, const carved_space& b);

/// A polynomial map between carved spaces, one component per target
/// coordinate written in the source coordinates.
class carve_map {
 public:
  carve_map(carved_space source, carved_space target, std::vector<expr> components);
  /// Parses component strings over the source coordinate names.
  static carve_map parse(carved_space source, carved_space target, const std::vector<std::string>& components);
  static carve_map identity(const carved_space& s);

  const carved_space& source() const noexcept { return source_; }
  const carved_space& target() const noexcept { return target_; }
  const std::vector<expr>& components() const noexcept { return components_; }

  std::string to_string() const;

 private:
  carved_space source_;
  carved_space target_;
  std::vector<expr> components_;
};

/// g ∘ f by substituting f's components into g's.
carve_map compose(const carve_map& g, const carve_map& f);

/// W(target) → W(source): each target generator goes to the normal form of
/// its component. Throws relation_violated if the map does not land in the
/// target space.
algebra_hom dual_hom(const carve_map& m);

/// dual_hom(g∘f) == dual_hom(f) ∘ dual_hom(g).
bool dual_contravariance_check(const carve_map& f, const carve_map& g);

/// Maps that appear throughout the construction.
namespace carve {

carve_map d_to_d0();            // d ↦ (d,0) : D → D(2)
carve_map d_to_0d();            // d ↦ (0,d) : D → D(2)
carve_map d_to_dd();            // d ↦ (d,d) : D → D(2)
carve_map scale();              // (r,d) ↦ rd : R×D → D
carve_map scale_pair();         // (r,d1,d2) ↦ (rd1,rd2) : R×D(2) → D(2)
carve_map diagonal_with_scalar();  // (r,d) ↦ (r,d,d) : R×D → R×D(2)
carve_map d_in_r();             // d ↦ d : D → R
carve_map square_to_d2();       // (d1,d2) ↦ (d1,d1d2) : D^2 → D(2)
carve_map d_to_square_00();     // d ↦ (0,0) : D → D^2
carve_map d_to_square_0d();     // d ↦ (0,d) : D → D^2
carve_map d2_first();           // (d1,d2) ↦ d1 : D(2) → D
carve_map d2_second();          // (d1,d2) ↦ d2 : D(2) → D

/// (d1..dn) ↦ (d_π(1), ..., d_π(n)) : D^n → D^n, π given 0-based. Its dual
/// moves the coefficient of direction k to direction π(k).
carve_map permute(const std::vector<std::size_t>& pi);
/// (a,d1..dn) ↦ (d1,..,a·d_i,..,dn) : R×D^n → D^n, i 0-based.
carve_map scale_direction(std::size_t n, std::size_t i);
/// (a,d) ↦ (a, d_π(1), ..., d_π(n)) : R×D^n → R×D^n.
carve_map permute_with_scalar(const std::vector<std::size_t>& pi);

/// Position map of the boundary shuffle on D^n (0-based): direction i goes
/// to the last slot, later directions move down by one.
std::vector<std::size_t> boundary_positions(std::size_t n, std::size_t i);
/// permute(boundary_positions(n, i)).
carve_map boundary_shuffle(std::size_t n, std::size_t i);

/// Every named map above plus permutations/scalings for small n.
std::vector<std::pair<std::string, carve_map>> catalog();

}  // namespace carve

}  // namespace weil
