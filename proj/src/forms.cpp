#include "weil/forms.hpp"

#include <mutex>

#include "weil/duality.hpp"
#include "weil/ring_ops.hpp"

namespace weil {

microcube::microcube(std::size_t n, std::size_t m, algebra scalars)
    : n_(n), m_(m), scalars_(std::move(scalars)), coeffs_(std::size_t{1} << n, std::vector<element>(m, element(scalars_))) {
  if (n >= 16) throw dimension_mismatch("microcube degree too large");
}

microcube microcube::from_rational(std::size_t n, const std::vector<std::vector<rational>>& coeffs) {
  if (coeffs.size() != (std::size_t{1} << n)) throw dimension_mismatch("microcube needs 2^n coefficient vectors");
  const std::size_t m = coeffs.empty() ? 0 : coeffs[0].size();
  microcube c(n, m);
  const algebra k;
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    if (coeffs[s].size() != m) throw dimension_mismatch("microcube coefficient vectors differ in length");
    for (std::size_t i = 0; i < m; ++i) c.coeffs_[s][i] = element::constant(k, coeffs[s][i]);
  }
  return c;
}

microcube microcube::from_wpoint(const wpoint& p) {
  const algebra& a = p.algebra_of();
  const std::size_t n = a.num_generators();
  if (!a.same_shape(space_D(n).algebra_of())) throw algebra_mismatch("not a point over D^n: " + a.to_string());
  microcube c(n, p.dim());
  const algebra k;
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (const auto& [mono, q] : p[i].terms()) {
      std::size_t mask = 0;
      for (std::size_t d = 0; d < n; ++d)
        if (mono[d]) mask |= std::size_t{1} << d;
      c.coeffs_[mask][i] = element::constant(k, q);
    }
  return c;
}

wpoint microcube::to_wpoint() const {
  if (!scalars_.is_ground()) throw algebra_mismatch("microcube has non-trivial scalars");
  const algebra a = space_D(n_).algebra_of();
  std::vector<element> coords(m_, element(a));
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    std::vector<std::uint32_t> ex(n_);
    for (std::size_t d = 0; d < n_; ++d) ex[d] = (s >> d) & 1u;
    for (std::size_t i = 0; i < m_; ++i) coords[i].add_term(monomial(ex), coeffs_[s][i].constant_term());
  }
  return wpoint(a, std::move(coords));
}

std::string microcube::to_string() const {
  std::string out = "{";
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    out += s ? ", c" : "c";
    if (s == 0) out += "0";
    for (std::size_t d = 0; d < n_; ++d)
      if ((s >> d) & 1u) out += std::to_string(d + 1);
    out += "=(";
    for (std::size_t i = 0; i < m_; ++i) out += (i ? ", " : "") + coeffs_[s][i].to_string();
    out += ")";
  }
  return out + "}";
}

microcube transform(const microcube& c, const algebra_hom& phi, const std::map<std::string, rational>& values) {
  const algebra& src = phi.source();
  const std::size_t n = c.degree();
  if (src.num_generators() != n || src.relations().size() != n)
    throw algebra_mismatch("transform: hom source is not W_{D^" + std::to_string(n) + "}");
  const algebra& t = phi.target();
  std::vector<long> slot(t.num_generators(), -1);
  std::vector<rational> value(t.num_generators());
  std::size_t directions = 0;
  for (std::size_t g = 0; g < t.num_generators(); ++g) {
    if (t.is_nilpotent(g)) {
      if (t.nilpotency(g) != 2) throw algebra_mismatch("transform: target is not of the form D^n x R^k");
      slot[g] = static_cast<long>(directions++);
    } else {
      auto it = values.find(t.generators()[g]);
      if (it == values.end()) throw unknown_name("no value for free generator " + t.generators()[g]);
      value[g] = it->second;
    }
  }
  if (t.relations().size() != directions) throw algebra_mismatch("transform: target is not of the form D^n x R^k");

  microcube out(directions, c.dim(), c.scalars());
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    std::vector<std::uint32_t> ex(n);
    for (std::size_t d = 0; d < n; ++d) ex[d] = (s >> d) & 1u;
    const element img = phi.image(monomial(ex));
    for (const auto& [mono, q] : img.terms()) {
      rational factor = q;
      std::size_t mask = 0;
      for (std::size_t g = 0; g < mono.size(); ++g) {
        if (!mono[g]) continue;
        if (slot[g] >= 0)
          mask |= std::size_t{1} << slot[g];
        else
          for (std::uint32_t e = 0; e < mono[g]; ++e) factor *= value[g];
      }
      if (factor == 0) continue;
      for (std::size_t i = 0; i < c.dim(); ++i) out.coeff(mask)[i] += c.at(s, i) * factor;
    }
  }
  return out;
}

namespace {

template <class Key>
const algebra_hom& cached(const Key& key, const std::function<algebra_hom()>& make) {
  static std::mutex mutex;
  static std::map<Key, algebra_hom> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make()).first;
  return it->second;
}

}  // namespace

microcube scale_direction(const microcube& c, std::size_t i, const rational& a) {
  const std::size_t n = c.degree();
  if (i >= n) throw index_out_of_range("scale_direction: direction out of range");
  const auto& h = cached(std::pair{n, i}, [&] { return dual_hom(carve::scale_direction(n, i)); });
  return transform(c, h, {{"Z", a}});
}

microcube permute_directions(const microcube& c, const permutation& pi) {
  if (pi.size() != c.degree() || !is_permutation(pi)) throw dimension_mismatch("permutation does not match the microcube");
  const auto& h = cached(pi, [&] { return dual_hom(carve::permute(pi)); });
  return transform(c, h);
}

microcube random_microcube(sampler& rng, std::size_t n, std::size_t m) {
  std::vector<std::vector<rational>> coeffs(std::size_t{1} << n);
  for (auto& v : coeffs) v = rng.rational_vector(m);
  return microcube::from_rational(n, coeffs);
}

std::vector<element> differential_form::operator()(const microcube& c) const {
  if (c.degree() != n) throw dimension_mismatch("form of degree " + std::to_string(n) + " on a " + std::to_string(c.degree()) + "-microcube");
  if (c.dim() != m) throw dimension_mismatch("form on R^" + std::to_string(m) + " applied to a microcube in R^" + std::to_string(c.dim()));
  auto out = body(c);
  if (out.size() != e) throw dimension_mismatch("form body returned " + std::to_string(out.size()) + " components, expected " + std::to_string(e));
  for (const auto& x : out)
    if (!(x.parent() == c.scalars())) throw algebra_mismatch("form body left the microcube's scalar algebra");
  return out;
}

namespace {

std::string show(const std::vector<element>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

std::vector<element> times(std::vector<element> v, const rational& a) {
  for (auto& x : v) x *= a;
  return v;
}

std::string transposition_name(const permutation& t) {
  std::size_t a = 0;
  while (t[a] == a) ++a;
  return "(" + std::to_string(a + 1) + " " + std::to_string(t[a] + 1) + ")";
}

}  // namespace

report validate_form(const differential_form& w, std::size_t trials, std::uint64_t seed) {
  report rep("form-validation", seed);
  const std::string inst = (w.name.empty() ? std::string("form") : w.name) + ", degree " + std::to_string(w.n) + " on R^" + std::to_string(w.m);
  if (w.n == 0) {
    rep.add("vacuous", "forms/definition", inst + " (no directions, no permutations)", true);
    return rep;
  }
  if (trials == 0) throw dimension_mismatch("validate_form needs at least one trial");
  sampler rng(seed);
  std::vector<law> homogeneity, alternation;
  for (std::size_t i = 0; i < w.n; ++i)
    homogeneity.emplace_back(rep, "homogeneity." + std::to_string(i + 1), "forms/homogeneity", inst);
  const auto transpositions = all_transpositions(w.n);
  for (const auto& t : transpositions)
    alternation.emplace_back(rep, "alternation." + transposition_name(t), "forms/alternation", inst);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    microcube g = random_microcube(rng, w.n, w.m);
    const auto value = w(g);
    for (std::size_t i = 0; i < w.n; ++i) {
      rational a = trial == 0 ? rational(0) : rng.small_rational();
      homogeneity[i].expect(w(scale_direction(g, i, a)) == times(value, a), [&] {
        return "a=" + to_string(a) + " gamma=" + g.to_string() + " value=" + show(value) + " scaled=" +
               show(w(scale_direction(g, i, a)));
      });
    }
    for (std::size_t k = 0; k < transpositions.size(); ++k)
      alternation[k].expect(w(permute_directions(g, transpositions[k])) == times(value, -1), [&] {
        return "gamma=" + g.to_string() + " value=" + show(value) + " permuted=" +
               show(w(permute_directions(g, transpositions[k])));
      });
  }
  return rep;
}

namespace {

const algebra& free_algebra(std::size_t m) {
  static std::mutex mutex;
  static std::map<std::size_t, algebra> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, algebra(default_variables(m), {})).first;
  return it->second;
}

bool same_function(const expr& a, const expr& b, std::size_t m) {
  if (a.is_polynomial() && b.is_polynomial()) return normal_form(free_algebra(m), a - b).is_zero();
  const auto vars = default_variables(m);
  return to_string(a, vars) == to_string(b, vars);
}

}  // namespace

classical_field classical_field::make(std::size_t n, std::size_t m,
                                      const std::map<std::vector<std::size_t>, expr>& coefficients) {
  const auto vars = default_variables(m);
  std::map<std::vector<std::size_t>, expr> canonical;
  for (const auto& [tuple, a] : coefficients) {
    if (tuple.size() != n) throw dimension_mismatch("index tuple of length " + std::to_string(tuple.size()) + " in a degree " + std::to_string(n) + " field");
    for (auto i : tuple)
      if (i >= m) throw index_out_of_range("index " + std::to_string(i + 1) + " exceeds dimension " + std::to_string(m));
    if (a.arity() > m) throw dimension_mismatch("coefficient uses more than " + std::to_string(m) + " variables");
    // Sort the tuple, tracking the sign of the sorting permutation.
    std::vector<std::size_t> sorted = tuple;
    int sign = 1;
    for (std::size_t x = 0; x < sorted.size(); ++x)
      for (std::size_t y = 0; y + 1 < sorted.size() - x; ++y) {
        if (sorted[y] > sorted[y + 1]) {
          std::swap(sorted[y], sorted[y + 1]);
          sign = -sign;
        }
      }
    bool repeated = false;
    for (std::size_t y = 0; y + 1 < sorted.size(); ++y) repeated = repeated || sorted[y] == sorted[y + 1];
    auto label = [&](const std::vector<std::size_t>& t) {
      std::string s = "a_";
      for (auto i : t) s += std::to_string(i + 1);
      return s;
    };
    if (repeated) {
      if (!same_function(a, expr(), m))
        throw condition_violated("antisymmetry violated: coefficient with a repeated index must vanish",
                                 label(tuple) + " = " + weil::to_string(a, vars));
      continue;
    }
    expr value = sign > 0 ? a : -a;
    auto [it, inserted] = canonical.try_emplace(sorted, value);
    if (!inserted && !same_function(it->second, value, m))
      throw condition_violated("antisymmetry violated between index orders",
                               label(tuple) + " = " + weil::to_string(a, vars) + " vs " + label(sorted) + " = " + weil::to_string(it->second, vars));
  }
  std::erase_if(canonical, [&](const auto& kv) { return kv.second.is_polynomial() && same_function(kv.second, expr(), m); });
  return classical_field(n, m, std::move(canonical));
}

bool classical_field::is_polynomial() const {
  for (const auto& [t, a] : coeffs_)
    if (!a.is_polynomial()) return false;
  return true;
}

bool operator==(const classical_field& a, const classical_field& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_ || a.coeffs_.size() != b.coeffs_.size()) return false;
  for (auto i = a.coeffs_.begin(), j = b.coeffs_.begin(); i != a.coeffs_.end(); ++i, ++j)
    if (i->first != j->first || !same_function(i->second, j->second, a.m_)) return false;
  return true;
}

std::string classical_field::to_string() const {
  if (coeffs_.empty()) return "0";
  const auto vars = default_variables(m_);
  std::string out;
  for (const auto& [t, a] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + weil::to_string(a, vars) + ")";
    for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "^d" : " d") + vars[t[k]];
  }
  return out;
}

differential_form from_classical(const classical_field& f) {
  differential_form w;
  w.n = f.degree();
  w.m = f.dim();
  w.e = 1;
  w.state = differential_form::status::by_construction;
  w.name = f.to_string();
  const auto perms = all_permutations(f.degree());
  std::vector<int> signs;
  for (const auto& p : perms) signs.push_back(signature(p));
  w.body = [f, perms, signs](const microcube& c) {
    const algebra& b = c.scalars();
    element_ops<rational> ops{b};
    element total(b);
    for (const auto& [tuple, a] : f.coefficients()) {
      element det(b);
      for (std::size_t p = 0; p < perms.size(); ++p) {
        element term = element::constant(b, rational(signs[p]));
        for (std::size_t j = 0; j < tuple.size(); ++j) term *= c.first_order(j)[tuple[perms[p][j]]];
        det += term;
      }
      if (det.is_zero()) continue;
      total += evaluate<element>(a, std::span<const element>(c.base()), ops) * det;
    }
    return std::vector<element>{total};
  };
  return w;
}

differential_form function_form(const smooth_map& f) {
  differential_form w;
  w.n = 0;
  w.m = f.domain_dim();
  w.e = f.codomain_dim();
  w.state = differential_form::status::by_construction;
  w.name = f.to_string();
  w.body = [f](const microcube& c) {
    element_ops<rational> ops{c.scalars()};
    std::vector<element> out;
    for (const auto& comp : f.components()) out.push_back(evaluate<element>(comp, std::span<const element>(c.base()), ops));
    return out;
  };
  return w;
}

std::vector<rational> integrate(const microcube& c, const differential_form& w) {
  if (!c.scalars().is_ground()) throw algebra_mismatch("integrate expects a microcube over k");
  std::vector<rational> out;
  for (const auto& x : w(c)) out.push_back(x.constant_term());
  return out;
}

std::vector<differential_form> curry_factorize(const parametrized_body& phi, std::size_t n, std::size_t m, std::size_t e,
                                               const std::vector<rational>& params, std::size_t trials,
                                               std::uint64_t seed) {
  std::vector<differential_form> out;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const rational x = params[k];
    differential_form w;
    w.n = n;
    w.m = m;
    w.e = e;
    w.name = "slice at " + to_string(x);
    w.body = [phi, x](const microcube& c) { return phi(c, x); };
    report r = validate_form(w, trials, derive_seed(seed, k));
    if (const auto* bad = r.first_failure())
      throw condition_violated("family is not a form at parameter " + to_string(x) + " (" + bad->id + ")",
                               bad->witness.value_or(""));
    // The slice evaluates exactly as the family does.
    sampler rng(derive_seed(seed, params.size() + k));
    for (std::size_t t = 0; t < trials; ++t) {
      microcube g = random_microcube(rng, n, m);
      if (w(g) != phi(g, x)) throw condition_violated("slice disagrees with the family", g.to_string());
    }
    w.state = differential_form::status::validated;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace weil
