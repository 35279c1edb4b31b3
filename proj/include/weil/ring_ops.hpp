#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "weil/element.hpp"
#include "weil/expr.hpp"

namespace weil {

/// Exact scalars: transcendental calls are rejected.
struct rational_ops {
  rational constant(const rational& q) const { return q; }
  rational call(function f, const rational&) const {
    throw inexact_primitive(std::string(function_name(f)) + " cannot be evaluated exactly over the rationals");
  }
};

struct double_ops {
  double constant(const rational& q) const { return q.get_d(); }
  double call(function f, double x) const {
    switch (f) {
      case function::exp: return std::exp(x);
      case function::sin: return std::sin(x);
      case function::cos: return std::cos(x);
      case function::log: return std::log(x);
    }
    return 0;
  }
};

/// k-th derivatives f^(k)(a), k < order.
std::vector<double> derivatives_at(function f, double a, unsigned order);

/// Scalars in an algebra. Transcendental calls f(a + n), n nilpotent, use
/// the Taylor series truncated where n^N = 0; only for float coefficients
/// over Weil algebras.
template <class C>
struct element_ops {
  algebra parent;

  basic_element<C> constant(const rational& q) const {
    return basic_element<C>::constant(parent, coefficient_traits<C>::from_rational(q));
  }

  basic_element<C> call(function f, const basic_element<C>& x) const {
    if constexpr (coefficient_traits<C>::exact) {
      throw inexact_primitive(std::string(function_name(f)) + " cannot be lifted exactly over the rationals");
    } else {
      if (!parent.is_weil()) throw not_weil("transcendental lift needs a Weil algebra, got " + parent.to_string());
      const C a = x.constant_term();
      basic_element<C> nil = x - basic_element<C>::constant(parent, a);
      std::vector<basic_element<C>> powers{basic_element<C>::one(parent)};
      while (!powers.back().is_zero()) powers.push_back(powers.back() * nil);
      auto d = derivatives_at(f, a, static_cast<unsigned>(powers.size()));
      basic_element<C> out(parent);
      double factorial = 1;
      for (std::size_t k = 0; k + 1 < powers.size(); ++k) {
        if (k) factorial *= static_cast<double>(k);
        out += powers[k] * (d[k] / factorial);
      }
      return out;
    }
  }
};

/// normal_form(A, p): expands p over A's generators and reduces.
element normal_form(const algebra& a, const expr& p);
/// Parses `text` over A's generator names and reduces. Throws parse_error /
/// unknown names.
element parse_element(const algebra& a, std::string_view text);

}  // namespace weil
