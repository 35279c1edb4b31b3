#include "weil/oracle.hpp"

#include "weil/errors.hpp"

namespace weil::oracle {

expr partial(const expr& e, std::size_t var) {
  using k = expr::kind;
  switch (e.type()) {
    case k::constant:
      return expr();
    case k::variable:
      return expr(rational(e.index() == var ? 1 : 0));
    case k::add:
      return partial(e.lhs(), var) + partial(e.rhs(), var);
    case k::sub:
      return partial(e.lhs(), var) - partial(e.rhs(), var);
    case k::mul:
      return partial(e.lhs(), var) * e.rhs() + e.lhs() * partial(e.rhs(), var);
    case k::neg:
      return -partial(e.lhs(), var);
    case k::pow:
      if (e.exponent() == 0) return expr();
      return expr(rational(e.exponent())) * pow(e.lhs(), e.exponent() - 1) * partial(e.lhs(), var);
    case k::call: {
      const expr inner = partial(e.lhs(), var);
      switch (e.fn()) {
        case function::exp: return e * inner;
        case function::sin: return expr::call(function::cos, e.lhs()) * inner;
        case function::cos: return -expr::call(function::sin, e.lhs()) * inner;
        case function::log: break;
      }
      throw inexact_primitive("oracle: derivative of log is not polynomial in the tree language");
    }
  }
  return expr();
}

classical_field classical_d(const classical_field& f) {
  const std::size_t n = f.degree(), m = f.dim();
  std::map<std::vector<std::size_t>, expr> out;
  for (const auto& [tuple, a] : f.coefficients()) {
    // Each x_j with j ∉ I contributes ∂_j a_I dx_j ∧ dx_I; sorting j into I
    // past the k indices below it gives the sign (-1)^k.
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t below = 0;
      bool present = false;
      for (auto i : tuple) {
        present = present || i == j;
        below += i < j;
      }
      if (present) continue;
      std::vector<std::size_t> t = tuple;
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(below), j);
      expr term = partial(a, j);
      if (below % 2) term = -term;
      auto [it, inserted] = out.try_emplace(t, term);
      if (!inserted) it->second = it->second + term;
    }
  }
  return classical_field::make(n + 1, m, out);
}

}  // namespace weil::oracle
