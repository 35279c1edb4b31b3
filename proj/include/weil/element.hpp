#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "weil/algebra.hpp"
#include "weil/errors.hpp"
#include "weil/rational.hpp"

namespace weil {

template <class C>
struct coefficient_traits;

template <>
struct coefficient_traits<rational> {
  static rational from_rational(const rational& q) { return q; }
  static std::string format(const rational& q) { return to_string(q); }
  static constexpr bool exact = true;
};

template <>
struct coefficient_traits<double> {
  static double from_rational(const rational& q) { return q.get_d(); }
  static std::string format(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  }
  static constexpr bool exact = false;
};

/// Element of an algebra in normal form: a finite map from normal-form
/// monomials to nonzero coefficients. Equality is map equality.
template <class C>
class basic_element {
 public:
  using coefficient_type = C;
  using term_map = std::map<monomial, C>;

  explicit basic_element(algebra parent = {}) : parent_(std::move(parent)) {}

  static basic_element constant(algebra parent, const C& c) {
    basic_element e(std::move(parent));
    e.add_term(monomial(e.parent_.num_generators()), c);
    return e;
  }
  static basic_element one(algebra parent) { return constant(std::move(parent), C(1)); }
  static basic_element generator(algebra parent, std::size_t index) {
    basic_element e(std::move(parent));
    e.add_term(monomial::variable(e.parent_.num_generators(), index), C(1));
    return e;
  }
  /// Normalizes: drops monomials in the ideal and zero coefficients.
  static basic_element from_terms(algebra parent, const term_map& terms) {
    basic_element e(std::move(parent));
    for (const auto& [m, c] : terms) e.add_term(m, c);
    return e;
  }

  const algebra& parent() const noexcept { return parent_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  C coefficient(const monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }
  C constant_term() const { return coefficient(monomial(parent_.num_generators())); }

  /// Adds c·m, reducing modulo the ideal.
  void add_term(const monomial& m, const C& c) {
    if (m.size() != parent_.num_generators()) throw algebra_mismatch("monomial arity mismatch");
    if (c == 0 || parent_.in_ideal(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  basic_element& operator+=(const basic_element& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  basic_element& operator-=(const basic_element& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  basic_element& operator*=(const C& r) {
    if (r == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= r;
    return *this;
  }

  friend basic_element operator+(basic_element a, const basic_element& b) { return a += b; }
  friend basic_element operator-(basic_element a, const basic_element& b) { return a -= b; }
  friend basic_element operator-(basic_element a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend basic_element operator*(basic_element a, const C& r) { return a *= r; }
  friend basic_element operator*(const C& r, basic_element a) { return a *= r; }

  friend basic_element operator*(const basic_element& a, const basic_element& b) {
    a.check_same(b);
    basic_element r(a.parent_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  basic_element& operator*=(const basic_element& o) { return *this = *this * o; }

  basic_element pow(unsigned k) const {
    basic_element result = one(parent_), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  friend bool operator==(const basic_element& a, const basic_element& b) {
    return a.parent_ == b.parent_ && a.terms_ == b.terms_;
  }

  /// e.g. "1 + 2*X - 1/3*X*Y".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = coefficient_traits<C>::format(c);
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs.erase(0, 1);
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
      first = false;
      if (m.is_unit())
        out += cs;
      else if (cs == "1")
        out += parent_.format_monomial(m);
      else
        out += cs + "*" + parent_.format_monomial(m);
    }
    return out;
  }

 private:
  void check_same(const basic_element& o) const {
    if (!(parent_ == o.parent_))
      throw algebra_mismatch("elements of different algebras: " + parent_.to_string() + " vs " + o.parent_.to_string());
  }

  algebra parent_;
  term_map terms_;
};

using element = basic_element<rational>;

/// Converts an exact element to another coefficient type.
template <class C>
basic_element<C> convert(const element& e) {
  basic_element<C> r(e.parent());
  for (const auto& [m, c] : e.terms()) r.add_term(m, coefficient_traits<C>::from_rational(c));
  return r;
}

/// Re-expresses an element of `from` in `to`, which must have the same shape
/// (positional renaming of generators).
template <class C>
basic_element<C> rename_into(const basic_element<C>& e, const algebra& to) {
  if (!e.parent().same_shape(to)) throw algebra_mismatch("rename between differently shaped algebras");
  basic_element<C> r(to);
  for (const auto& [m, c] : e.terms()) r.add_term(m, c);
  return r;
}

}  // namespace weil
