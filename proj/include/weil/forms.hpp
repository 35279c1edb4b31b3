#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "weil/element.hpp"
#include "weil/expr.hpp"
#include "weil/hom.hpp"
#include "weil/permutation.hpp"
#include "weil/prolongation.hpp"
#include "weil/random.hpp"
#include "weil/report.hpp"

namespace weil {

/// A point of R^m ⊗ W_{D^n} whose coefficients lie in a scalar algebra B
/// (k by default): 2^n coefficient vectors, the one at bitmask S being the
/// coefficient of ∏_{i∈S} X_i.
class microcube {
 public:
  microcube(std::size_t n, std::size_t m, algebra scalars = {});
  static microcube from_rational(std::size_t n, const std::vector<std::vector<rational>>& coeffs);
  /// Point over D^n with n = number of generators of its algebra.
  static microcube from_wpoint(const wpoint& p);
  wpoint to_wpoint() const;  // only for B = k

  std::size_t degree() const noexcept { return n_; }
  std::size_t dim() const noexcept { return m_; }
  const algebra& scalars() const noexcept { return scalars_; }

  const std::vector<element>& coeff(std::size_t mask) const { return coeffs_.at(mask); }
  std::vector<element>& coeff(std::size_t mask) { return coeffs_.at(mask); }
  const element& at(std::size_t mask, std::size_t k) const { return coeffs_.at(mask).at(k); }
  /// τ: the base point.
  const std::vector<element>& base() const { return coeffs_[0]; }
  /// The pure first-order coefficient c_{i}, i 0-based.
  const std::vector<element>& first_order(std::size_t i) const { return coeffs_.at(std::size_t{1} << i); }

  friend bool operator==(const microcube&, const microcube&) = default;
  std::string to_string() const;

 private:
  std::size_t n_, m_;
  algebra scalars_;
  std::vector<std::vector<element>> coeffs_;
};

/// α_φ for φ : W_{D^n} → T, where T is W_{D^n'} possibly with extra free
/// generators; those are instantiated at the given rationals.
microcube transform(const microcube& c, const algebra_hom& phi, const std::map<std::string, rational>& values = {});
/// (a·_i)γ: scales direction i (0-based) by a.
microcube scale_direction(const microcube& c, std::size_t i, const rational& a);
/// γ^π: direction k moves to position π(k).
microcube permute_directions(const microcube& c, const permutation& pi);

/// Microcube with random rational coefficients over k.
microcube random_microcube(sampler& rng, std::size_t n, std::size_t m);

/// An E-valued differential n-form on R^m. The body must be generic over
/// the scalar algebra of its argument and return e elements of it.
struct differential_form {
  enum class status { unchecked, validated, by_construction };
  using body_type = std::function<std::vector<element>(const microcube&)>;

  std::size_t n = 0, m = 0, e = 1;
  body_type body;
  status state = status::unchecked;
  std::string name;

  /// Checks degree and dimension, then evaluates.
  std::vector<element> operator()(const microcube& c) const;
};

/// Both defining conditions on random microcubes: homogeneity in every
/// direction (the first trial uses a = 0) and alternation under every
/// transposition. Degree 0 is vacuous.
report validate_form(const differential_form& w, std::size_t trials, std::uint64_t seed);

/// Σ_I a_I dx^I over increasing index tuples I of length n (0-based).
class classical_field {
 public:
  /// Accepts any index tuples; tuples that are permutations of one another
  /// must agree up to sign, tuples with a repeated index must vanish.
  /// Throws condition_violated otherwise.
  static classical_field make(std::size_t n, std::size_t m, const std::map<std::vector<std::size_t>, expr>& coefficients);

  std::size_t degree() const noexcept { return n_; }
  std::size_t dim() const noexcept { return m_; }
  /// Nonzero coefficients on increasing tuples.
  const std::map<std::vector<std::size_t>, expr>& coefficients() const noexcept { return coeffs_; }
  bool is_polynomial() const;
  std::string to_string() const;
  /// Coefficientwise; polynomial coefficients compare by normal form.
  friend bool operator==(const classical_field& a, const classical_field& b);

 private:
  classical_field(std::size_t n, std::size_t m, std::map<std::vector<std::size_t>, expr> c)
      : n_(n), m_(m), coeffs_(std::move(c)) {}
  std::size_t n_, m_;
  std::map<std::vector<std::size_t>, expr> coeffs_;
};

/// ω(γ) = Σ_I a_I(τγ) · det[(c_{j})_{I_k}]_{j,k}.
differential_form from_classical(const classical_field& f);
/// A 0-form from an E-valued map on R^m.
differential_form function_form(const smooth_map& f);

/// ω(γ) for a microcube over k.
std::vector<rational> integrate(const microcube& c, const differential_form& w);

/// φ(γ, x) evaluated on rational parameters.
using parametrized_body = std::function<std::vector<element>(const microcube&, const rational&)>;
/// Returns φ(-, x) as a validated form per parameter. Throws
/// condition_violated with a witness when a parameter's slice is not a form.
std::vector<differential_form> curry_factorize(const parametrized_body& phi, std::size_t n, std::size_t m, std::size_t e,
                                               const std::vector<rational>& params, std::size_t trials,
                                               std::uint64_t seed);

}  // namespace weil
