#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weil/errors.hpp"
#include "weil/rational.hpp"

namespace weil {

enum class function { exp, sin, cos, log };

std::string_view function_name(function f);

/// Immutable expression tree over named variables with rational literals.
/// This is the scalar-generic program format for smooth maps, carve-map
/// components and classical coefficients: it is evaluated over any ring
/// through `evaluate`.
class expr {
 public:
  enum class kind { constant, variable, add, sub, mul, neg, pow, call };

  expr() : expr(rational(0)) {}
  expr(rational c);
  static expr variable(std::size_t index);
  static expr call(function f, expr arg);

  kind type() const noexcept { return node_->type; }
  const rational& value() const noexcept { return node_->value; }
  std::size_t index() const noexcept { return node_->index; }
  unsigned exponent() const noexcept { return node_->exponent; }
  function fn() const noexcept { return node_->fn; }
  const expr& lhs() const { return *node_->lhs; }
  const expr& rhs() const { return *node_->rhs; }

  /// No transcendental calls anywhere in the tree.
  bool is_polynomial() const;
  bool is_constant() const;
  /// Largest variable index + 1 (0 for constants).
  std::size_t arity() const;

  friend expr operator+(const expr& a, const expr& b);
  friend expr operator-(const expr& a, const expr& b);
  friend expr operator*(const expr& a, const expr& b);
  friend expr operator-(const expr& a);
  friend expr pow(const expr& a, unsigned k);

 private:
  struct node {
    kind type = kind::constant;
    rational value;
    std::size_t index = 0;
    unsigned exponent = 0;
    function fn = function::exp;
    std::shared_ptr<const expr> lhs, rhs;
  };
  explicit expr(std::shared_ptr<const node> n) : node_(std::move(n)) {}
  static expr binary(kind k, const expr& a, const expr& b);

  std::shared_ptr<const node> node_;
};

/// Infix parser: + - * / ^, parentheses, unary minus, integer/decimal
/// literals, exp/sin/cos/log. Division is only allowed by constant
/// subexpressions. Throws parse_error with the column of the problem.
expr parse_expr(std::string_view text, std::span<const std::string> variables);

std::string to_string(const expr& e, std::span<const std::string> variables);

/// Replaces variable i by replacements[i].
expr substitute(const expr& e, std::span<const expr> replacements);

/// Evaluates over a ring R. `ops` supplies `R constant(const rational&)` and
/// `R call(function, const R&)`; R needs +, -, * and unary minus.
template <class R, class Ops>
R evaluate(const expr& e, std::span<const R> vars, const Ops& ops) {
  switch (e.type()) {
    case expr::kind::constant:
      return ops.constant(e.value());
    case expr::kind::variable:
      if (e.index() >= vars.size()) throw dimension_mismatch("expression variable out of range");
      return vars[e.index()];
    case expr::kind::add:
      return evaluate<R>(e.lhs(), vars, ops) + evaluate<R>(e.rhs(), vars, ops);
    case expr::kind::sub:
      return evaluate<R>(e.lhs(), vars, ops) - evaluate<R>(e.rhs(), vars, ops);
    case expr::kind::mul:
      return evaluate<R>(e.lhs(), vars, ops) * evaluate<R>(e.rhs(), vars, ops);
    case expr::kind::neg:
      return -evaluate<R>(e.lhs(), vars, ops);
    case expr::kind::pow: {
      R base = evaluate<R>(e.lhs(), vars, ops);
      R result = ops.constant(rational(1));
      for (unsigned k = e.exponent(); k; k >>= 1u) {
        if (k & 1u) result = result * base;
        if (k > 1) base = base * base;
      }
      return result;
    }
    case expr::kind::call:
      return ops.call(e.fn(), evaluate<R>(e.lhs(), vars, ops));
  }
  throw error("corrupt expression");
}

}  // namespace weil
