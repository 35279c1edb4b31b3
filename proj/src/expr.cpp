#include "weil/expr.hpp"

#include <cctype>
#include <optional>

namespace weil {

std::string_view function_name(function f) {
  switch (f) {
    case function::exp: return "exp";
    case function::sin: return "sin";
    case function::cos: return "cos";
    case function::log: return "log";
  }
  return "?";
}

expr::expr(rational c) {
  auto n = std::make_shared<node>();
  n->type = kind::constant;
  n->value = std::move(c);
  node_ = std::move(n);
}

expr expr::variable(std::size_t index) {
  auto n = std::make_shared<node>();
  n->type = kind::variable;
  n->index = index;
  return expr(std::shared_ptr<const node>(std::move(n)));
}

expr expr::call(function f, expr arg) {
  auto n = std::make_shared<node>();
  n->type = kind::call;
  n->fn = f;
  n->lhs = std::make_shared<const expr>(std::move(arg));
  return expr(std::shared_ptr<const node>(std::move(n)));
}

expr expr::binary(kind k, const expr& a, const expr& b) {
  auto n = std::make_shared<node>();
  n->type = k;
  n->lhs = std::make_shared<const expr>(a);
  n->rhs = std::make_shared<const expr>(b);
  return expr(std::shared_ptr<const node>(std::move(n)));
}

expr operator+(const expr& a, const expr& b) { return expr::binary(expr::kind::add, a, b); }
expr operator-(const expr& a, const expr& b) { return expr::binary(expr::kind::sub, a, b); }
expr operator*(const expr& a, const expr& b) { return expr::binary(expr::kind::mul, a, b); }

expr operator-(const expr& a) {
  auto n = std::make_shared<expr::node>();
  n->type = expr::kind::neg;
  n->lhs = std::make_shared<const expr>(a);
  return expr(std::shared_ptr<const expr::node>(std::move(n)));
}

expr pow(const expr& a, unsigned k) {
  auto n = std::make_shared<expr::node>();
  n->type = expr::kind::pow;
  n->exponent = k;
  n->lhs = std::make_shared<const expr>(a);
  return expr(std::shared_ptr<const expr::node>(std::move(n)));
}

bool expr::is_polynomial() const {
  switch (type()) {
    case kind::constant:
    case kind::variable: return true;
    case kind::call: return false;
    case kind::neg:
    case kind::pow: return lhs().is_polynomial();
    default: return lhs().is_polynomial() && rhs().is_polynomial();
  }
}

bool expr::is_constant() const { return arity() == 0; }

std::size_t expr::arity() const {
  switch (type()) {
    case kind::constant: return 0;
    case kind::variable: return index() + 1;
    case kind::call:
    case kind::neg:
    case kind::pow: return lhs().arity();
    default: return std::max(lhs().arity(), rhs().arity());
  }
}

namespace {

struct rational_only {
  rational constant(const rational& q) const { return q; }
  rational call(function f, const rational&) const {
    throw inexact_primitive(std::string(function_name(f)) + " has no exact rational value");
  }
};

class parser {
 public:
  parser(std::string_view text, std::span<const std::string> vars) : s_(text), vars_(vars) {}

  expr parse() {
    expr e = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  expr parse_sum() {
    expr e = parse_product();
    while (true) {
      if (accept('+'))
        e = e + parse_product();
      else if (accept('-'))
        e = e - parse_product();
      else
        return e;
    }
  }

  expr parse_product() {
    expr e = parse_unary();
    while (true) {
      if (accept('*')) {
        e = e * parse_unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        expr d = parse_unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division by a non-constant expression");
        }
        rational q = evaluate<rational>(d, {}, rational_only{});
        if (q == 0) {
          pos_ = at;
          fail("division by zero");
        }
        rational inv = 1 / q;
        e = e.is_constant() ? expr(rational(evaluate<rational>(e, {}, rational_only{}) * inv)) : e * expr(inv);
      } else {
        return e;
      }
    }
  }

  expr parse_unary() {
    if (accept('-')) {
      expr inner = parse_unary();
      if (inner.type() == expr::kind::constant) return expr(rational(-inner.value()));
      return -inner;
    }
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  expr parse_power() {
    expr base = parse_primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long k = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (k > 64) {
        pos_ = start;
        fail("exponent too large");
      }
      return pow(base, static_cast<unsigned>(k));
    }
    return base;
  }

  expr parse_primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      expr e = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      try {
        return expr(parse_rational(s_.substr(start, pos_ - start)));
      } catch (const parse_error&) {
        pos_ = start;
        fail("malformed number");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                  s_[pos_] == '@' || s_[pos_] == '\''))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return expr::variable(i);
      if (auto f = lookup_function(name)) {
        if (!accept('(')) fail("expected '(' after " + name);
        expr arg = parse_sum();
        if (!accept(')')) fail("expected ')'");
        return expr::call(*f, arg);
      }
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static std::optional<function> lookup_function(std::string_view name) {
    for (auto f : {function::exp, function::sin, function::cos, function::log})
      if (function_name(f) == name) return f;
    return std::nullopt;
  }

  std::string_view s_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

int precedence(const expr& e) {
  switch (e.type()) {
    case expr::kind::add:
    case expr::kind::sub: return 1;
    case expr::kind::mul: return 2;
    case expr::kind::neg: return 3;
    case expr::kind::pow: return 4;
    case expr::kind::constant: return e.value() < 0 || e.value().get_den() != 1 ? 3 : 5;
    default: return 5;
  }
}

std::string print(const expr& e, std::span<const std::string> vars, int parent) {
  std::string out;
  switch (e.type()) {
    case expr::kind::constant: out = to_string(e.value()); break;
    case expr::kind::variable: out = e.index() < vars.size() ? vars[e.index()] : "v" + std::to_string(e.index()); break;
    case expr::kind::add: out = print(e.lhs(), vars, 1) + " + " + print(e.rhs(), vars, 2); break;
    case expr::kind::sub: out = print(e.lhs(), vars, 1) + " - " + print(e.rhs(), vars, 2); break;
    case expr::kind::mul: out = print(e.lhs(), vars, 2) + "*" + print(e.rhs(), vars, 3); break;
    case expr::kind::neg: out = "-" + print(e.lhs(), vars, 3); break;
    case expr::kind::pow: out = print(e.lhs(), vars, 5) + "^" + std::to_string(e.exponent()); break;
    case expr::kind::call:
      out = std::string(function_name(e.fn())) + "(" + print(e.lhs(), vars, 0) + ")";
      break;
  }
  return precedence(e) < parent ? "(" + out + ")" : out;
}

}  // namespace

expr parse_expr(std::string_view text, std::span<const std::string> variables) {
  return parser(text, variables).parse();
}

std::string to_string(const expr& e, std::span<const std::string> variables) { return print(e, variables, 0); }

expr substitute(const expr& e, std::span<const expr> replacements) {
  switch (e.type()) {
    case expr::kind::constant: return e;
    case expr::kind::variable:
      if (e.index() >= replacements.size()) throw dimension_mismatch("substitution arity mismatch");
      return replacements[e.index()];
    case expr::kind::add: return substitute(e.lhs(), replacements) + substitute(e.rhs(), replacements);
    case expr::kind::sub: return substitute(e.lhs(), replacements) - substitute(e.rhs(), replacements);
    case expr::kind::mul: return substitute(e.lhs(), replacements) * substitute(e.rhs(), replacements);
    case expr::kind::neg: return -substitute(e.lhs(), replacements);
    case expr::kind::pow: return pow(substitute(e.lhs(), replacements), e.exponent());
    case expr::kind::call: return expr::call(e.fn(), substitute(e.lhs(), replacements));
  }
  throw error("corrupt expression");
}

}  // namespace weil

#include "weil/ring_ops.hpp"

namespace weil {

std::vector<double> derivatives_at(function f, double a, unsigned order) {
  std::vector<double> d(order);
  for (unsigned k = 0; k < order; ++k) {
    switch (f) {
      case function::exp: d[k] = std::exp(a); break;
      case function::sin: {
        const double v[4] = {std::sin(a), std::cos(a), -std::sin(a), -std::cos(a)};
        d[k] = v[k % 4];
        break;
      }
      case function::cos: {
        const double v[4] = {std::cos(a), -std::sin(a), -std::cos(a), std::sin(a)};
        d[k] = v[k % 4];
        break;
      }
      case function::log: {
        if (a <= 0) throw error("log of a non-positive base point");
        if (k == 0) {
          d[k] = std::log(a);
        } else {
          double fact = 1;
          for (unsigned j = 2; j < k; ++j) fact *= j;
          d[k] = ((k % 2) ? 1.0 : -1.0) * fact / std::pow(a, static_cast<double>(k));
        }
        break;
      }
    }
  }
  return d;
}

element normal_form(const algebra& a, const expr& p) {
  std::vector<element> gens;
  for (std::size_t i = 0; i < a.num_generators(); ++i) gens.push_back(element::generator(a, i));
  return evaluate<element>(p, gens, element_ops<rational>{a});
}

element parse_element(const algebra& a, std::string_view text) {
  return normal_form(a, parse_expr(text, a.generators()));
}

}  // namespace weil
