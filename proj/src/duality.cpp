#include "weil/duality.hpp"

#include "weil/ring_ops.hpp"

namespace weil {

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  if (n == 1) return {stem};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

}  // namespace

carved_space space_D(std::size_t n) {
  std::vector<monomial> rels;
  for (std::size_t i = 0; i < n; ++i) rels.push_back(monomial::variable(n, i, 2));
  return carved_space(algebra(numbered("X", n), std::move(rels)));
}

carved_space space_D2() { return carved_space(algebra({"X", "Y"}, {{2, 0}, {0, 2}, {1, 1}})); }

carved_space space_R(std::size_t n) { return carved_space(algebra(numbered("Z", n), {})); }

carved_space space_product(const carved_space& a, const carved_space& b) {
  return carved_space(concat(a.algebra_of(), b.algebra_of()));
}

carve_map::carve_map(carved_space source, carved_space target, std::vector<expr> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (components_.size() != target_.dim())
    throw dimension_mismatch("carve map needs " + std::to_string(target_.dim()) + " components, got " +
                             std::to_string(components_.size()));
  for (const auto& c : components_) {
    if (!c.is_polynomial()) throw error("carve map components must be polynomial");
    if (c.arity() > source_.dim()) throw dimension_mismatch("component uses more variables than the source has");
  }
}

carve_map carve_map::parse(carved_space source, carved_space target, const std::vector<std::string>& components) {
  std::vector<expr> cs;
  for (const auto& s : components) cs.push_back(parse_expr(s, source.coordinates()));
  return carve_map(std::move(source), std::move(target), std::move(cs));
}

carve_map carve_map::identity(const carved_space& s) {
  std::vector<expr> cs;
  for (std::size_t i = 0; i < s.dim(); ++i) cs.push_back(expr::variable(i));
  return carve_map(s, s, std::move(cs));
}

std::string carve_map::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < source_.dim(); ++i) out += (i ? "," : "") + source_.coordinates()[i];
  out += ") |-> (";
  for (std::size_t i = 0; i < components_.size(); ++i)
    out += (i ? ", " : "") + weil::to_string(components_[i], source_.coordinates());
  return out + ") : " + source_.algebra_of().to_string() + " -> " + target_.algebra_of().to_string();
}

carve_map compose(const carve_map& g, const carve_map& f) {
  if (!(f.target() == g.source())) throw algebra_mismatch("carve maps are not composable");
  std::vector<expr> cs;
  for (const auto& c : g.components()) cs.push_back(substitute(c, f.components()));
  return carve_map(f.source(), g.target(), std::move(cs));
}

algebra_hom dual_hom(const carve_map& m) {
  const algebra& src = m.source().algebra_of();
  std::vector<element> images;
  for (const auto& c : m.components()) images.push_back(normal_form(src, c));
  return algebra_hom::make(m.target().algebra_of(), src, std::move(images));
}

bool dual_contravariance_check(const carve_map& f, const carve_map& g) {
  return dual_hom(compose(g, f)) == compose(dual_hom(f), dual_hom(g));
}

namespace carve {

namespace {

carve_map make(const carved_space& s, const carved_space& t, std::vector<std::string> cs) {
  return carve_map::parse(s, t, cs);
}

}  // namespace

carve_map d_to_d0() { return make(space_D(), space_D2(), {"X", "0"}); }
carve_map d_to_0d() { return make(space_D(), space_D2(), {"0", "X"}); }
carve_map d_to_dd() { return make(space_D(), space_D2(), {"X", "X"}); }
carve_map scale() { return make(space_product(space_R(), space_D()), space_D(), {"Z*X"}); }
carve_map scale_pair() { return make(space_product(space_R(), space_D2()), space_D2(), {"Z*X", "Z*Y"}); }
carve_map diagonal_with_scalar() {
  return make(space_product(space_R(), space_D()), space_product(space_R(), space_D2()), {"Z", "X", "X"});
}
carve_map d_in_r() { return make(space_D(), space_R(), {"X"}); }
carve_map square_to_d2() { return make(space_D(2), space_D2(), {"X1", "X1*X2"}); }
carve_map d_to_square_00() { return make(space_D(), space_D(2), {"0", "0"}); }
carve_map d_to_square_0d() { return make(space_D(), space_D(2), {"0", "X"}); }
carve_map d2_first() { return make(space_D2(), space_D(), {"X"}); }
carve_map d2_second() { return make(space_D2(), space_D(), {"Y"}); }

carve_map permute(const std::vector<std::size_t>& pi) {
  auto s = space_D(pi.size());
  std::vector<expr> cs;
  for (auto p : pi) cs.push_back(expr::variable(p));
  return carve_map(s, s, std::move(cs));
}

carve_map scale_direction(std::size_t n, std::size_t i) {
  if (i >= n) throw index_out_of_range("direction index out of range");
  auto src = space_product(space_R(), space_D(n));
  std::vector<expr> cs;
  for (std::size_t k = 0; k < n; ++k)
    cs.push_back(k == i ? expr::variable(0) * expr::variable(k + 1) : expr::variable(k + 1));
  return carve_map(src, space_D(n), std::move(cs));
}

carve_map permute_with_scalar(const std::vector<std::size_t>& pi) {
  auto s = space_product(space_R(), space_D(pi.size()));
  std::vector<expr> cs{expr::variable(0)};
  for (auto p : pi) cs.push_back(expr::variable(p + 1));
  return carve_map(s, s, std::move(cs));
}

std::vector<std::size_t> boundary_positions(std::size_t n, std::size_t i) {
  if (i >= n) throw index_out_of_range("boundary index out of range");
  std::vector<std::size_t> rho(n);
  for (std::size_t k = 0; k < n; ++k) rho[k] = k < i ? k : (k == i ? n - 1 : k - 1);
  return rho;
}

carve_map boundary_shuffle(std::size_t n, std::size_t i) { return permute(boundary_positions(n, i)); }

std::vector<std::pair<std::string, carve_map>> catalog() {
  std::vector<std::pair<std::string, carve_map>> out{
      {"d|->(d,0)", d_to_d0()},
      {"d|->(0,d)", d_to_0d()},
      {"d|->(d,d)", d_to_dd()},
      {"(r,d)|->rd", scale()},
      {"(r,d1,d2)|->(rd1,rd2)", scale_pair()},
      {"(r,d)|->(r,d,d)", diagonal_with_scalar()},
      {"d|->d in R", d_in_r()},
      {"(d1,d2)|->(d1,d1d2)", square_to_d2()},
      {"d|->(0,0)", d_to_square_00()},
      {"d|->(0,d) in D^2", d_to_square_0d()},
      {"(d1,d2)|->d1", d2_first()},
      {"(d1,d2)|->d2", d2_second()},
      {"(d1,d2)|->(d2,d1)", permute({1, 0})},
      {"(d1,d2,d3)|->(d2,d3,d1)", permute({1, 2, 0})},
      {"(d1,d2,d3)|->(d3,d1,d2)", permute({2, 0, 1})},
  };
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t i = 0; i < n; ++i)
      out.emplace_back("scale direction " + std::to_string(i + 1) + " of D^" + std::to_string(n),
                       scale_direction(n, i));
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t i = 0; i < n; ++i)
      out.emplace_back("boundary shuffle " + std::to_string(i + 1) + " of D^" + std::to_string(n),
                       boundary_shuffle(n, i));
  return out;
}

}  // namespace carve

}  // namespace weil
