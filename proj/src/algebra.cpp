#include "weil/algebra.hpp"

#include <algorithm>
#include <set>

#include "weil/errors.hpp"

namespace weil {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ' ' || c == ',' || c == '+' || c == '*' || c == '-' || c == '^' || c == '(' || c == ')' || c == '/')
      return false;
  return true;
}

}  // namespace

algebra::algebra() : algebra(std::vector<std::string>{}, std::vector<monomial>{}) {}

algebra::algebra(std::vector<std::string> generators, std::vector<monomial> relations) {
  auto d = std::make_shared<data>();
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!valid_name(g)) throw error("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw error("duplicate generator '" + g + "'");
  }
  const std::size_t n = generators.size();
  for (const auto& r : relations) {
    if (r.size() != n) throw error("relation arity does not match generator count");
    if (r.degree() == 0) throw error("relation of degree 0 (the algebra would not be pointed)");
  }
  // Minimal generators of the monomial ideal, graded-lex sorted.
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  std::vector<monomial> minimal;
  for (const auto& r : relations) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const monomial& m) { return m.divides(r); });
    if (!redundant) minimal.push_back(r);
  }
  d->generators = std::move(generators);
  d->relations = std::move(minimal);
  d->nilpotency.assign(n, 0);
  for (const auto& r : d->relations) {
    std::size_t support = 0, idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (r[i] != 0) ++support, idx = i;
    if (support == 1) {
      auto& e = d->nilpotency[idx];
      if (e == 0 || r[idx] < e) e = r[idx];
    }
  }
  d->weil = std::all_of(d->nilpotency.begin(), d->nilpotency.end(), [](auto e) { return e != 0; });
  if (d->weil) {
    // Enumerate the box below the pure powers, keep normal-form monomials.
    monomial m(n);
    auto in_ideal = [&](const monomial& x) {
      return std::any_of(d->relations.begin(), d->relations.end(), [&](const monomial& r) { return r.divides(x); });
    };
    while (true) {
      if (!in_ideal(m)) d->basis.push_back(m);
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (++m[i] < d->nilpotency[i]) break;
        m[i] = 0;
      }
      if (i == n) break;
    }
    std::sort(d->basis.begin(), d->basis.end());
  }
  data_ = std::move(d);
}

std::optional<std::size_t> algebra::generator_index(std::string_view name) const {
  const auto& g = data_->generators;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] == name) return i;
  return std::nullopt;
}

bool algebra::in_ideal(const monomial& m) const noexcept {
  for (const auto& r : data_->relations)
    if (r.divides(m)) return true;
  return false;
}

const std::vector<monomial>& algebra::weil_basis() const {
  if (!data_->weil) {
    std::string free;
    for (std::size_t i = 0; i < num_generators(); ++i)
      if (!is_nilpotent(i)) free += (free.empty() ? "" : ", ") + data_->generators[i];
    throw not_weil("not a Weil algebra: free generators " + free);
  }
  return data_->basis;
}

std::size_t algebra::basis_index(const monomial& m) const {
  const auto& b = weil_basis();
  auto it = std::lower_bound(b.begin(), b.end(), m);
  if (it == b.end() || !(*it == m)) throw error("monomial " + format_monomial(m) + " is not in normal form");
  return static_cast<std::size_t>(it - b.begin());
}

std::string algebra::format_monomial(const monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += data_->generators[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string algebra::to_string() const {
  std::string out = "k";
  if (is_ground()) return out;
  out += '[';
  for (std::size_t i = 0; i < num_generators(); ++i) out += (i ? "," : "") + data_->generators[i];
  out += ']';
  if (!data_->relations.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < data_->relations.size(); ++i)
      out += (i ? "," : "") + format_monomial(data_->relations[i]);
    out += ')';
  }
  return out;
}

bool algebra::same_shape(const algebra& other) const noexcept {
  return num_generators() == other.num_generators() && relations() == other.relations();
}

bool operator==(const algebra& a, const algebra& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.generators() == b.generators() && a.relations() == b.relations();
}

namespace {

algebra join(const algebra& a, const algebra& b, std::vector<std::string> names) {
  const std::size_t na = a.num_generators(), nb = b.num_generators();
  std::vector<monomial> rels;
  for (const auto& r : a.relations()) {
    auto e = r.exponents();
    e.resize(na + nb, 0);
    rels.emplace_back(std::move(e));
  }
  for (const auto& r : b.relations()) {
    std::vector<std::uint32_t> e(na, 0);
    e.insert(e.end(), r.exponents().begin(), r.exponents().end());
    rels.emplace_back(std::move(e));
  }
  return algebra(std::move(names), std::move(rels));
}

std::vector<std::string> suffixed(const algebra& a, const algebra& b) {
  std::vector<std::string> names;
  for (const auto& g : a.generators()) names.push_back(g + "@1");
  for (const auto& g : b.generators()) names.push_back(g + "@2");
  return names;
}

}  // namespace

algebra tensor(const algebra& a, const algebra& b) { return join(a, b, suffixed(a, b)); }

algebra concat(const algebra& a, const algebra& b) {
  std::vector<std::string> names = a.generators();
  names.insert(names.end(), b.generators().begin(), b.generators().end());
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) names = suffixed(a, b);
  return join(a, b, std::move(names));
}

algebra drop_generators(const algebra& a, const std::vector<std::size_t>& indices) {
  std::vector<bool> drop(a.num_generators(), false);
  for (auto i : indices) drop.at(i) = true;
  for (const auto& r : a.relations())
    for (std::size_t i = 0; i < r.size(); ++i)
      if (drop[i] && r[i] != 0)
        throw error("generator " + a.generators()[i] + " occurs in a relation and cannot be instantiated");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < a.num_generators(); ++i)
    if (!drop[i]) names.push_back(a.generators()[i]);
  std::vector<monomial> rels;
  for (const auto& r : a.relations()) {
    std::vector<std::uint32_t> e;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!drop[i]) e.push_back(r[i]);
    rels.emplace_back(std::move(e));
  }
  return algebra(std::move(names), std::move(rels));
}

algebra dual_extension(const algebra& a) {
  std::string name = "eps" + std::to_string(a.num_generators());
  while (a.generator_index(name)) name += '\'';
  auto names = a.generators();
  names.push_back(name);
  std::vector<monomial> rels;
  for (const auto& r : a.relations()) {
    auto e = r.exponents();
    e.push_back(0);
    rels.emplace_back(std::move(e));
  }
  rels.push_back(monomial::variable(names.size(), names.size() - 1, 2));
  return algebra(std::move(names), std::move(rels));
}

}  // namespace weil
