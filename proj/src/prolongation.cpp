#include "weil/prolongation.hpp"

namespace weil {

std::vector<std::string> default_variables(std::size_t m) {
  static const std::vector<std::string> xyz{"x", "y", "z"};
  if (m <= 3) return {xyz.begin(), xyz.begin() + static_cast<std::ptrdiff_t>(m)};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= m; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

smooth_map::smooth_map(std::size_t domain_dim, std::vector<expr> components)
    : domain_dim_(domain_dim), components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.arity() > domain_dim_) throw dimension_mismatch("component uses a variable beyond the domain dimension");
}

smooth_map smooth_map::parse(std::size_t domain_dim, const std::vector<std::string>& components,
                             std::vector<std::string> variables) {
  if (variables.empty()) variables = default_variables(domain_dim);
  if (variables.size() != domain_dim) throw dimension_mismatch("variable list does not match the domain dimension");
  std::vector<expr> cs;
  for (const auto& s : components) cs.push_back(parse_expr(s, variables));
  return smooth_map(domain_dim, std::move(cs));
}

smooth_map smooth_map::identity(std::size_t m) {
  std::vector<expr> cs;
  for (std::size_t i = 0; i < m; ++i) cs.push_back(expr::variable(i));
  return smooth_map(m, std::move(cs));
}

bool smooth_map::is_polynomial() const {
  for (const auto& c : components_)
    if (!c.is_polynomial()) return false;
  return true;
}

std::vector<rational> smooth_map::operator()(const std::vector<rational>& x) const {
  if (x.size() != domain_dim_) throw dimension_mismatch("smooth map applied to a point of the wrong dimension");
  std::vector<rational> out;
  for (const auto& c : components_) out.push_back(evaluate<rational>(c, x, rational_ops{}));
  return out;
}

std::string smooth_map::to_string() const {
  auto vars = default_variables(domain_dim_);
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) out += (i ? ", " : "") + weil::to_string(components_[i], vars);
  return out + ")";
}

smooth_map compose(const smooth_map& g, const smooth_map& f) {
  if (f.codomain_dim() != g.domain_dim()) throw dimension_mismatch("smooth maps are not composable");
  std::vector<expr> cs;
  for (const auto& c : g.components()) cs.push_back(substitute(c, f.components()));
  return smooth_map(f.domain_dim(), std::move(cs));
}

wpoint make_wpoint(const algebra& a, std::size_t m, const std::map<monomial, std::vector<rational>>& coeffs) {
  std::vector<element> coords(m, element(a));
  for (const auto& [mono, v] : coeffs) {
    if (v.size() != m) throw dimension_mismatch("coefficient vector of the wrong length");
    for (std::size_t i = 0; i < m; ++i) coords[i].add_term(mono, v[i]);
  }
  return wpoint(a, std::move(coords));
}

namespace {

template <class C>
basic_wpoint<C> prolong_impl(const smooth_map& f, const basic_wpoint<C>& p) {
  if (p.dim() != f.domain_dim())
    throw dimension_mismatch("point of dimension " + std::to_string(p.dim()) + " for a map on R^" +
                             std::to_string(f.domain_dim()));
  element_ops<C> ops{p.algebra_of()};
  std::vector<basic_element<C>> out;
  for (const auto& c : f.components()) out.push_back(evaluate<basic_element<C>>(c, p.coords(), ops));
  return basic_wpoint<C>(p.algebra_of(), std::move(out));
}

}  // namespace

wpoint prolong(const smooth_map& f, const wpoint& p) { return prolong_impl(f, p); }
float_wpoint prolong(const smooth_map& f, const float_wpoint& p) { return prolong_impl(f, p); }

std::vector<rational> tau(const wpoint& p) { return p.coefficient(monomial(p.algebra_of().num_generators())); }

wpoint iota(const algebra& a, const std::vector<rational>& q) {
  std::vector<element> coords;
  for (const auto& x : q) coords.push_back(element::constant(a, x));
  return wpoint(a, std::move(coords));
}

wpoint instantiate_free(const wpoint& p, const std::map<std::string, rational>& values) {
  const algebra& a = p.algebra_of();
  std::vector<std::size_t> idx;
  std::vector<rational> val(a.num_generators());
  std::vector<bool> dropped(a.num_generators(), false);
  for (const auto& [name, v] : values) {
    auto i = a.generator_index(name);
    if (!i) throw unknown_name("no generator named '" + name + "' in " + a.to_string());
    if (a.is_nilpotent(*i)) throw error("cannot substitute a scalar for nilpotent generator " + name);
    idx.push_back(*i);
    val[*i] = v;
    dropped[*i] = true;
  }
  algebra reduced = drop_generators(a, idx);
  std::vector<element> coords;
  for (const auto& c : p.coords()) {
    element r(reduced);
    for (const auto& [m, coef] : c.terms()) {
      rational factor = coef;
      std::vector<std::uint32_t> kept;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!dropped[i]) {
          kept.push_back(m[i]);
          continue;
        }
        for (std::uint32_t e = 0; e < m[i]; ++e) factor *= val[i];
      }
      r.add_term(monomial(std::move(kept)), factor);
    }
    coords.push_back(std::move(r));
  }
  return wpoint(reduced, std::move(coords));
}

namespace {

monomial join(const monomial& a, const monomial& b) {
  auto e = a.exponents();
  e.insert(e.end(), b.exponents().begin(), b.exponents().end());
  return monomial(std::move(e));
}

/// Element of A whose coefficients are elements of B.
struct nested_element {
  const algebra* outer;
  algebra inner;
  std::map<monomial, element> terms;

  void add(const monomial& m, const element& c) {
    if (c.is_zero() || outer->in_ideal(m)) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend nested_element operator+(nested_element a, const nested_element& b) {
    for (const auto& [m, c] : b.terms) a.add(m, c);
    return a;
  }
  friend nested_element operator-(nested_element a) {
    for (auto& [m, c] : a.terms) c = -c;
    return a;
  }
  friend nested_element operator-(const nested_element& a, const nested_element& b) { return a + (-b); }
  friend nested_element operator*(const nested_element& a, const nested_element& b) {
    nested_element r{a.outer, a.inner, {}};
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) r.add(ma * mb, ca * cb);
    return r;
  }
};

struct nested_ops {
  const algebra* outer;
  algebra inner;
  nested_element constant(const rational& q) const {
    nested_element e{outer, inner, {}};
    e.add(monomial(outer->num_generators()), element::constant(inner, q));
    return e;
  }
  nested_element call(function f, const nested_element&) const {
    throw inexact_primitive(std::string(function_name(f)) + " cannot be lifted exactly over the rationals");
  }
};

}  // namespace

wpoint reassociate(const nested_wpoint& p) {
  algebra flat = tensor(p.outer, p.inner);
  std::vector<element> coords;
  for (const auto& c : p.coords) {
    element r(flat);
    for (const auto& [ma, eb] : c) {
      if (!(eb.parent() == p.inner)) throw algebra_mismatch("nested coefficient not over the inner algebra");
      for (const auto& [mb, q] : eb.terms()) r.add_term(join(ma, mb), q);
    }
    coords.push_back(std::move(r));
  }
  return wpoint(flat, std::move(coords));
}

nested_wpoint unassociate(const wpoint& p, const algebra& outer, const algebra& inner) {
  if (!(p.algebra_of() == tensor(outer, inner))) throw algebra_mismatch("point is not over the expected tensor algebra");
  const std::size_t na = outer.num_generators();
  nested_wpoint out{outer, inner, {}};
  for (const auto& c : p.coords()) {
    std::map<monomial, element> split;
    for (const auto& [m, q] : c.terms()) {
      std::vector<std::uint32_t> ea(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(na));
      std::vector<std::uint32_t> eb(m.exponents().begin() + static_cast<std::ptrdiff_t>(na), m.exponents().end());
      auto [it, _] = split.try_emplace(monomial(std::move(ea)), element(inner));
      it->second.add_term(monomial(std::move(eb)), q);
    }
    out.coords.push_back(std::move(split));
  }
  return out;
}

nested_wpoint prolong_nested(const smooth_map& f, const nested_wpoint& p) {
  if (p.coords.size() != f.domain_dim()) throw dimension_mismatch("nested point has the wrong dimension");
  nested_ops ops{&p.outer, p.inner};
  std::vector<nested_element> vars;
  for (const auto& c : p.coords) {
    nested_element e{&p.outer, p.inner, {}};
    for (const auto& [m, b] : c) e.add(m, b);
    vars.push_back(std::move(e));
  }
  nested_wpoint out{p.outer, p.inner, {}};
  for (const auto& comp : f.components()) out.coords.push_back(evaluate<nested_element>(comp, vars, ops).terms);
  return out;
}

}  // namespace weil
