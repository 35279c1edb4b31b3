#include "weil/tangent.hpp"

#include "weil/duality.hpp"
#include "weil/linalg.hpp"
#include "weil/random.hpp"

namespace weil {

namespace {

using vec = std::vector<rational>;

vec add(const vec& a, const vec& b) {
  vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

vec scaled(const rational& s, const vec& a) {
  vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

std::string show(const vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + "]";
}

std::string dims(std::size_t m) { return "R^" + std::to_string(m); }

}  // namespace

const algebra& dual_numbers() {
  static const algebra a = space_D().algebra_of();
  return a;
}

tangent make_tangent(const vec& base, const vec& v) {
  if (base.size() != v.size()) throw dimension_mismatch("base and vector dimensions differ");
  const algebra& a = dual_numbers();
  return make_wpoint(a, base.size(), {{monomial{0}, base}, {monomial{1}, v}});
}

vec tangent_base(const tangent& t) { return t.coefficient(monomial{0}); }
vec tangent_vector(const tangent& t) { return t.coefficient(monomial{1}); }

wpoint glue_d2(const vec& p, const vec& v1, const vec& v2) {
  if (p.size() != v1.size() || p.size() != v2.size()) throw dimension_mismatch("glue of vectors of different lengths");
  return make_wpoint(space_D2().algebra_of(), p.size(), {{monomial{0, 0}, p}, {monomial{1, 0}, v1}, {monomial{0, 1}, v2}});
}

tangent tangent_add(const tangent& t1, const tangent& t2) {
  if (!(t1.algebra_of() == dual_numbers()) || !(t2.algebra_of() == dual_numbers()))
    throw algebra_mismatch("tangent_add expects W_D-points");
  if (t1.dim() != t2.dim()) throw dimension_mismatch("tangents of different dimension");
  if (tangent_base(t1) != tangent_base(t2)) throw base_mismatch("tangents at different base points");
  static const algebra_hom diagonal = dual_hom(carve::d_to_dd());
  return alpha(diagonal, glue_d2(tangent_base(t1), tangent_vector(t1), tangent_vector(t2)));
}

tangent tangent_scale(const rational& r, const tangent& t) {
  if (!(t.algebra_of() == dual_numbers())) throw algebra_mismatch("tangent_scale expects a W_D-point");
  static const algebra_hom scaling = dual_hom(carve::scale());
  std::vector<element> coords;
  const wpoint at = instantiate_free(alpha(scaling, t), {{"Z", r}});
  for (const auto& c : at.coords())
    coords.push_back(rename_into(c, dual_numbers()));
  return tangent(dual_numbers(), std::move(coords));
}

report tangent_module_laws(std::size_t m, std::size_t trials, std::uint64_t seed) {
  report rep("tangent-module", seed);
  sampler rng(seed);
  const std::string inst = dims(m) + ", " + std::to_string(trials) + " random cases";
  auto rt = [&](const vec& p) { return make_tangent(p, rng.rational_vector(m)); };
  {
    law l1(rep, "add.commutative", "tangent-module/addition", inst);
    law l2(rep, "add.associative", "tangent-module/addition", inst);
    law l3(rep, "add.zero", "tangent-module/zero-section", inst);
    law l4(rep, "add.inverse", "tangent-module/addition", inst);
    for (std::size_t k = 0; k < trials; ++k) {
      vec p = rng.rational_vector(m);
      auto a = rt(p), b = rt(p), c = rt(p);
      l1.expect(tangent_add(a, b) == tangent_add(b, a), [&] { return a.to_string() + " , " + b.to_string(); });
      l2.expect(tangent_add(tangent_add(a, b), c) == tangent_add(a, tangent_add(b, c)),
                [&] { return a.to_string() + " , " + b.to_string() + " , " + c.to_string(); });
      l3.expect(tangent_add(a, iota(dual_numbers(), p)) == a, [&] { return a.to_string(); });
      l4.expect(tangent_add(a, tangent_scale(-1, a)) == iota(dual_numbers(), p), [&] { return a.to_string(); });
    }
  }
  {
    law l1(rep, "scale.associative", "tangent-module/scalar-multiplication", inst);
    law l2(rep, "scale.unit", "tangent-module/scalar-multiplication", inst);
    law l3(rep, "scale.zero", "tangent-module/scalar-multiplication", inst);
    law l4(rep, "scale.distributes-over-add", "tangent-module/distributivity", inst);
    law l5(rep, "scale.distributes-over-scalar-sum", "tangent-module/distributivity", inst);
    law l6(rep, "scale.multiplies-vector", "tangent-module/scalar-multiplication", inst);
    for (std::size_t k = 0; k < trials; ++k) {
      vec p = rng.rational_vector(m);
      auto a = rt(p), b = rt(p);
      rational r = rng.small_rational(), s = rng.small_rational();
      l1.expect(tangent_scale(r * s, a) == tangent_scale(r, tangent_scale(s, a)), [&] { return a.to_string(); });
      l2.expect(tangent_scale(1, a) == a, [&] { return a.to_string(); });
      l3.expect(tangent_scale(0, a) == iota(dual_numbers(), p), [&] { return a.to_string(); });
      l4.expect(tangent_scale(r, tangent_add(a, b)) == tangent_add(tangent_scale(r, a), tangent_scale(r, b)),
                [&] { return "r=" + to_string(r) + " " + a.to_string() + " , " + b.to_string(); });
      l5.expect(tangent_scale(r + s, a) == tangent_add(tangent_scale(r, a), tangent_scale(s, a)),
                [&] { return "r=" + to_string(r) + " s=" + to_string(s) + " " + a.to_string(); });
      l6.expect(tangent_vector(tangent_scale(r, a)) == scaled(r, tangent_vector(a)) && tangent_base(tangent_scale(r, a)) == p,
                [&] { return a.to_string(); });
    }
  }
  {
    // Addition then scaling versus scaling on D(2) then restriction along
    // (r,d) ↦ (r,d,d).
    const algebra_hom add_hom = dual_hom(carve::d_to_dd());
    const algebra_hom scale_hom = dual_hom(carve::scale());
    const algebra_hom scale2_hom = dual_hom(carve::scale_pair());
    const algebra_hom diag_hom = dual_hom(carve::diagonal_with_scalar());
    rep.add("square.homs", "tangent-module/distributivity-square", "W_{D(2)} -> W_{RxD}",
            compose(scale_hom, add_hom) == compose(diag_hom, scale2_hom));
    law l(rep, "square.points", "tangent-module/distributivity-square", inst);
    for (std::size_t k = 0; k < trials; ++k) {
      wpoint g = glue_d2(rng.rational_vector(m), rng.rational_vector(m), rng.rational_vector(m));
      rational r = rng.small_rational();
      wpoint top = instantiate_free(alpha(scale_hom, alpha(add_hom, g)), {{"Z", r}});
      wpoint bottom = instantiate_free(alpha(diag_hom, alpha(scale2_hom, g)), {{"Z", r}});
      l.expect(top == bottom, [&] { return g.to_string() + " r=" + to_string(r); });
    }
  }
  return rep;
}

namespace {

/// Forward and inverse maps of the Euclidean identification for E ⊗ W,
/// where E = R^m and W is Weil (W = k gives E itself).
struct euclidean_identification {
  algebra w;
  std::size_t m;
  algebra family_algebra;   // W ⊗ k[Z]
  algebra tangent_algebra;  // W ⊗ W_D
  algebra_hom restrict_hom;  // id_W ⊗ (Z ↦ X)
  algebra_hom add_hom;       // id_W ⊗ W_{d ↦ (d,d)}
  algebra_hom scale_hom;     // id_W ⊗ W_{(r,d) ↦ rd}

  euclidean_identification(const algebra& w_, std::size_t m_)
      : w(w_),
        m(m_),
        family_algebra(tensor(w_, space_R().algebra_of())),
        tangent_algebra(tensor(w_, dual_numbers())),
        restrict_hom(tensor(algebra_hom::identity(w_), dual_hom(carve::d_in_r()))),
        add_hom(tensor(algebra_hom::identity(w_), dual_hom(carve::d_to_dd()))),
        scale_hom(tensor(algebra_hom::identity(w_), dual_hom(carve::scale()))) {}

  /// Embeds an element of W into W ⊗ B with the given B-monomial.
  element lift(const element& e, const algebra& big, const monomial& tail) const {
    element r(big);
    for (const auto& [mono, c] : e.terms()) {
      auto ex = mono.exponents();
      ex.insert(ex.end(), tail.exponents().begin(), tail.exponents().end());
      r.add_term(monomial(std::move(ex)), c);
    }
    return r;
  }

  /// Coefficient of tail-monomial `tail` in the last factor, as an element of W.
  element project(const element& e, const monomial& tail) const {
    element r(w);
    const std::size_t nw = w.num_generators();
    for (const auto& [mono, c] : e.terms()) {
      bool match = true;
      for (std::size_t i = 0; i < tail.size(); ++i) match = match && mono[nw + i] == tail[i];
      if (!match) continue;
      std::vector<std::uint32_t> ex(mono.exponents().begin(), mono.exponents().begin() + static_cast<std::ptrdiff_t>(nw));
      r.add_term(monomial(std::move(ex)), c);
    }
    return r;
  }

  /// (a, b) ↦ α_{Z↦X}(a + Z·b).
  wpoint forward(const wpoint& a, const wpoint& b) const {
    std::vector<element> coords;
    for (std::size_t i = 0; i < m; ++i)
      coords.push_back(lift(a[i], family_algebra, monomial{0}) + lift(b[i], family_algebra, monomial{1}));
    return alpha(restrict_hom, wpoint(family_algebra, std::move(coords)));
  }

  std::pair<wpoint, wpoint> inverse(const wpoint& t) const {
    std::vector<element> a, b;
    for (const auto& c : t.coords()) {
      a.push_back(project(c, monomial{0}));
      b.push_back(project(c, monomial{1}));
    }
    return {wpoint(w, std::move(a)), wpoint(w, std::move(b))};
  }

  /// Tangent addition in (E⊗W)⊗W_D via W_{D(2)}.
  wpoint add(const wpoint& t1, const wpoint& t2) const {
    auto [a1, b1] = inverse(t1);
    auto [a2, b2] = inverse(t2);
    if (!(a1 == a2)) throw base_mismatch("tangents at different base points");
    algebra glued = tensor(w, space_D2().algebra_of());
    std::vector<element> coords;
    for (std::size_t i = 0; i < m; ++i)
      coords.push_back(lift(a1[i], glued, monomial{0, 0}) + lift(b1[i], glued, monomial{1, 0}) +
                       lift(b2[i], glued, monomial{0, 1}));
    return alpha(add_hom, wpoint(glued, std::move(coords)));
  }

  wpoint scale(const rational& r, const wpoint& t) const {
    wpoint lifted = alpha(scale_hom, t);
    const std::string z = lifted.algebra_of().generators()[w.num_generators()];
    std::vector<element> coords;
    const wpoint at = instantiate_free(lifted, {{z, r}});
    for (const auto& c : at.coords()) coords.push_back(rename_into(c, tangent_algebra));
    return wpoint(tangent_algebra, std::move(coords));
  }

  /// Matrix of (a,b) ↦ forward(a,b) in coordinates; bijective iff full rank.
  rational_matrix matrix() const {
    const std::size_t dw = w.dimension();
    const std::size_t n = 2 * m * dw;
    const auto& wb = w.weil_basis();
    const auto& tb = tangent_algebra.weil_basis();
    rational_matrix mat(m * tb.size(), n);
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<element> a(m, element(w)), b(m, element(w));
      std::size_t half = col / (m * dw), rest = col % (m * dw), coord = rest / dw, basis = rest % dw;
      (half == 0 ? a : b)[coord].add_term(wb[basis], 1);
      wpoint out = forward(wpoint(w, a), wpoint(w, b));
      for (std::size_t i = 0; i < m; ++i)
        for (const auto& [mono, c] : out[i].terms()) mat(i * tb.size() + tangent_algebra.basis_index(mono), col) = c;
    }
    return mat;
  }
};

wpoint random_point(sampler& rng, const algebra& w, std::size_t m) {
  std::vector<element> coords;
  for (std::size_t i = 0; i < m; ++i) coords.push_back(rng.random_element(w));
  return wpoint(w, std::move(coords));
}

report euclidean_impl(std::size_t m, const algebra& w, std::size_t trials, std::uint64_t seed, const std::string& suite) {
  report rep(suite, seed);
  sampler rng(seed);
  euclidean_identification id(w, m);
  const std::string inst = dims(m) + " (x) " + w.to_string();
  const std::size_t n = 2 * m * w.dimension();
  rep.add("bijection.rank", "euclidean/isomorphism", inst + ", rank " + std::to_string(n),
          rank(id.matrix()) == n && id.tangent_algebra.dimension() * m == n);
  law rt1(rep, "bijection.inverse-after-forward", "euclidean/isomorphism", inst);
  law rt2(rep, "bijection.forward-after-inverse", "euclidean/isomorphism", inst);
  law add(rep, "identification.addition", "euclidean/module-identification", inst);
  law sc(rep, "identification.scaling", "euclidean/module-identification", inst);
  for (std::size_t k = 0; k < trials; ++k) {
    wpoint a = random_point(rng, w, m), b = random_point(rng, w, m), b2 = random_point(rng, w, m);
    wpoint t = id.forward(a, b);
    auto back = id.inverse(t);
    rt1.expect(back.first == a && back.second == b, [&] { return a.to_string() + " , " + b.to_string(); });
    std::vector<element> tc;
    for (std::size_t i = 0; i < m; ++i) tc.push_back(rng.random_element(id.tangent_algebra));
    wpoint u(id.tangent_algebra, tc);
    auto [ua, ub] = id.inverse(u);
    rt2.expect(id.forward(ua, ub) == u, [&] { return u.to_string(); });
    // Fiberwise structure on E×E over the first factor.
    std::vector<element> bsum;
    for (std::size_t i = 0; i < m; ++i) bsum.push_back(b[i] + b2[i]);
    add.expect(id.add(t, id.forward(a, b2)) == id.forward(a, wpoint(w, bsum)),
               [&] { return a.to_string() + " , " + b.to_string() + " , " + b2.to_string(); });
    rational r = rng.small_rational();
    std::vector<element> bs;
    for (std::size_t i = 0; i < m; ++i) bs.push_back(b[i] * r);
    sc.expect(id.scale(r, t) == id.forward(a, wpoint(w, bs)), [&] { return "r=" + to_string(r) + " " + t.to_string(); });
  }
  return rep;
}

}  // namespace

report euclidean_check(std::size_t m, std::size_t trials, std::uint64_t seed) {
  report rep = euclidean_impl(m, algebra{}, trials, seed, "euclidean");
  // With W = k the tangent operations must be the W_D ones above.
  sampler rng(derive_seed(seed, 1));
  law l(rep, "identification.tangent-ops", "euclidean/module-identification", dims(m));
  for (std::size_t k = 0; k < trials; ++k) {
    vec a = rng.rational_vector(m), b1 = rng.rational_vector(m), b2 = rng.rational_vector(m);
    rational r = rng.small_rational();
    l.expect(tangent_add(make_tangent(a, b1), make_tangent(a, b2)) == make_tangent(a, add(b1, b2)) &&
                 tangent_scale(r, make_tangent(a, b1)) == make_tangent(a, scaled(r, b1)),
             [&] { return show(a) + " " + show(b1) + " " + show(b2); });
  }
  return rep;
}

report euclidean_tensor_check(std::size_t m, const algebra& w, std::size_t trials, std::uint64_t seed) {
  w.weil_basis();  // not_weil
  return euclidean_impl(m, w, trials, seed, "euclidean-tensor");
}

report fibered_tangent_check(std::size_t m, std::size_t trials, std::uint64_t seed) {
  report rep("fibered-tangent", seed);
  sampler rng(seed);
  const std::string inst = dims(m);
  const algebra_hom first = dual_hom(carve::d_to_d0());
  const algebra_hom second = dual_hom(carve::d_to_0d());
  const algebra_hom e = dual_hom(carve::square_to_d2());
  const algebra_hom f = dual_hom(carve::d_to_square_00());
  const algebra_hom g = dual_hom(carve::d_to_square_0d());
  auto eq = analyze_equalizer(f, g, e);
  rep.add("equalizer.algebra", "weil-equalizer/limit-diagram",
          "W_{D(2)} -> W_{D^2} => W_D, equalizer dim " + std::to_string(eq.equalizer_dim), eq.holds());

  law legs(rep, "pair.legs", "fibered-tangent/identification", inst);
  law rt1(rep, "pair.inverse-after-forward", "fibered-tangent/identification", inst);
  law rt2(rep, "pair.forward-after-inverse", "fibered-tangent/identification", inst);
  law fiber(rep, "pair.rejects-off-fiber", "fibered-tangent/identification", inst);
  law zero(rep, "pair.zero", "fibered-tangent/identification", inst);
  law eqpt(rep, "equalizer.points", "weil-equalizer/limit-diagram", inst);
  for (std::size_t k = 0; k < trials; ++k) {
    vec p = rng.rational_vector(m), v1 = rng.rational_vector(m), v2 = rng.rational_vector(m);
    wpoint g2 = glue_d2(p, v1, v2);
    tangent t1 = alpha(first, g2), t2 = alpha(second, g2);
    legs.expect(t1 == make_tangent(p, v1) && t2 == make_tangent(p, v2), [&] { return g2.to_string(); });
    rt1.expect(glue_d2(tangent_base(t1), tangent_vector(t1), tangent_vector(t2)) == g2, [&] { return g2.to_string(); });
    tangent a = make_tangent(p, rng.rational_vector(m)), b = make_tangent(p, rng.rational_vector(m));
    wpoint glued = glue_d2(p, tangent_vector(a), tangent_vector(b));
    rt2.expect(alpha(first, glued) == a && alpha(second, glued) == b, [&] { return a.to_string() + " , " + b.to_string(); });
    if (m > 0) {
      vec q = p;
      q[0] += 1;
      bool rejected = false;
      try {
        tangent_add(make_tangent(p, v1), make_tangent(q, v2));
      } catch (const base_mismatch&) {
        rejected = true;
      }
      fiber.expect(rejected, [&] { return show(p) + " vs " + show(q); });
    }
    wpoint z = iota(space_D2().algebra_of(), p);
    zero.expect(alpha(first, z) == iota(dual_numbers(), p) && alpha(second, z) == iota(dual_numbers(), p),
                [&] { return show(p); });
    wpoint sq = alpha(e, g2);
    eqpt.expect(alpha(f, sq) == alpha(g, sq), [&] { return sq.to_string(); });
  }
  return rep;
}

}  // namespace weil
