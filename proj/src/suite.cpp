#include "weil/suite.hpp"

#include "weil/exterior.hpp"
#include "weil/linalg.hpp"
#include "weil/oracle.hpp"
#include "weil/permutation.hpp"
#include "weil/random.hpp"
#include "weil/ring_ops.hpp"
#include "weil/tangent.hpp"

namespace weil::suite {

namespace {

std::string describe(const algebra& a) { return a.to_string(); }

std::string show(const std::vector<rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

std::string show(const std::vector<element>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

algebra truncated_line(std::uint32_t order) { return algebra({"X"}, {monomial{order}}); }

/// Small Weil algebras used as prolongation targets.
std::vector<algebra> weil_zoo() {
  return {algebra(), space_D().algebra_of(), space_D2().algebra_of(), space_D(2).algebra_of(), truncated_line(3),
          space_D(3).algebra_of()};
}

wpoint random_point(sampler& rng, const algebra& a, std::size_t m) {
  std::vector<element> coords;
  for (std::size_t i = 0; i < m; ++i) coords.push_back(rng.random_element(a));
  return wpoint(a, std::move(coords));
}

smooth_map random_map(sampler& rng, std::size_t dom, std::size_t cod, unsigned degree = 3) {
  std::vector<expr> comps;
  for (std::size_t i = 0; i < cod; ++i) comps.push_back(rng.random_polynomial(dom, degree));
  return smooth_map(dom, std::move(comps));
}

std::size_t dim_between(sampler& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.integer(static_cast<long>(lo), static_cast<long>(hi)));
}

std::vector<std::pair<std::string, algebra_hom>> named_homs() {
  std::vector<std::pair<std::string, algebra_hom>> out;
  for (const auto& [name, m] : carve::catalog()) out.emplace_back("W of " + name, dual_hom(m));
  return out;
}

/// Runs `f`; an exception becomes a failing entry.
template <class F>
void guarded(report& rep, const std::string& id, const std::string& anchor, const std::string& instance, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    rep.add(id, anchor, instance, false, e.what());
  }
}

}  // namespace

report algebra_core(std::uint64_t seed, std::size_t samples) {
  report rep("algebra", seed);
  sampler rng(seed);
  auto dim_entry = [&](const std::string& id, const algebra& a, std::size_t expected) {
    const std::size_t d = a.dimension();
    rep.add(id, "algebra/weil-basis", describe(a) + " has dimension " + std::to_string(expected), d == expected,
            d == expected ? std::nullopt : std::optional<std::string>("dimension " + std::to_string(d)));
  };
  dim_entry("basis.D", space_D().algebra_of(), 2);
  dim_entry("basis.D(2)", space_D2().algebra_of(), 3);
  for (std::size_t n = 0; n <= 4; ++n) dim_entry("basis.D^" + std::to_string(n), space_D(n).algebra_of(), std::size_t{1} << n);
  dim_entry("basis.D(x)D", tensor(space_D().algebra_of(), space_D().algebra_of()), 4);
  {
    const algebra d2 = space_D2().algebra_of();
    const auto& b = d2.weil_basis();
    rep.add("basis.D(2).order", "algebra/weil-basis", "basis of W_D(2) is 1, X, Y",
            b.size() == 3 && b[0] == monomial{0, 0} && b[1] == monomial{1, 0} && b[2] == monomial{0, 1});
  }
  {
    bool threw = false;
    try {
      space_R().algebra_of().weil_basis();
    } catch (const not_weil&) {
      threw = true;
    }
    rep.add("basis.free-rejected", "algebra/weil-basis", "k[Z] is not Weil", threw);
  }

  const algebra d = space_D().algebra_of(), d2 = space_D2().algebra_of();
  rep.add("normal-form.square", "algebra/normal-form", "X^2 in k[X]/(X^2) is 0", parse_element(d, "X^2").is_zero());
  rep.add("normal-form.product", "algebra/normal-form", "(1+X)(1+Y) in W_D(2) is 1+X+Y",
          parse_element(d2, "(1+X)*(1+Y)") == parse_element(d2, "1+X+Y"));
  rep.add("normal-form.nilsquare", "algebra/normal-form", "(X+Y)^2 in W_D(2) is 0", parse_element(d2, "(X+Y)^2").is_zero());
  {
    // Normal form is a ring map from the free polynomial ring.
    law l(rep, "normal-form.multiplicative", "algebra/normal-form", "random polynomials over W_D(2), k[X]/(X^3), D^3");
    const std::vector<algebra> as{d2, truncated_line(3), space_D(3).algebra_of()};
    for (std::size_t t = 0; t < samples; ++t) {
      const algebra& a = as[t % as.size()];
      expr p = rng.random_polynomial(a.num_generators(), 3), q = rng.random_polynomial(a.num_generators(), 3);
      l.expect(normal_form(a, p * q) == normal_form(a, p) * normal_form(a, q) &&
                   normal_form(a, p + q) == normal_form(a, p) + normal_form(a, q),
               [&] { return to_string(p, a.generators()) + " ; " + to_string(q, a.generators()); });
    }
  }
  {
    bool rejected = false;
    try {
      algebra_hom::make(d, d, {element::one(d)});
    } catch (const relation_violated& e) {
      rejected = e.relation() == "X^2";
    }
    rep.add("hom.relation-violated", "algebra/hom-validation", "X |-> 1 on W_D violates X^2", rejected);
    const algebra big = space_product(space_R(2), space_D2()).algebra_of();
    bool valid = true;
    try {
      algebra_hom::make(d, big, {parse_element(big, "Z1*X + Z2*Y")});
    } catch (const error&) {
      valid = false;
    }
    rep.add("hom.valid-sum", "algebra/hom-validation", "X |-> Z1*X + Z2*Y into " + describe(big), valid);
    auto proj = algebra_hom::make(d2, d, {parse_element(d, "X"), element(d)});
    rep.add("hom.apply", "algebra/hom-apply", "(X|->X, Y|->0)(1+2X+3Y) = 1+2X",
            proj(parse_element(d2, "1+2*X+3*Y")) == parse_element(d, "1+2*X"));
    rep.add("hom.augmentation", "algebra/augmentation", "augmentation(1+5X) = 1",
            algebra_hom::augmentation(d)(parse_element(d, "1+5*X")) == element::one(algebra()));
  }
  {
    const auto homs = named_homs();
    law add(rep, "hom.additive", "algebra/hom-apply", "every named hom, random elements");
    law mul(rep, "hom.multiplicative", "algebra/hom-apply", "every named hom, random elements");
    law one(rep, "hom.unital", "algebra/hom-apply", "every named hom");
    for (const auto& [name, h] : homs) {
      one.expect(h(element::one(h.source())) == element::one(h.target()), [&] { return name; });
      for (std::size_t t = 0; t < std::max<std::size_t>(1, samples / 10); ++t) {
        element a = rng.random_element(h.source()), b = rng.random_element(h.source());
        add.expect(h(a + b) == h(a) + h(b), [&] { return name + ": " + a.to_string() + " ; " + b.to_string(); });
        mul.expect(h(a * b) == h(a) * h(b), [&] { return name + ": " + a.to_string() + " ; " + b.to_string(); });
      }
    }
    law assoc(rep, "compose.associative", "functor/composition", "composable triples of named homs");
    law unit(rep, "compose.identity", "functor/identity", "every named hom");
    for (const auto& [n1, f] : homs) {
      unit.expect(compose(f, algebra_hom::identity(f.source())) == f && compose(algebra_hom::identity(f.target()), f) == f,
                  [&] { return n1; });
      for (const auto& [n2, g] : homs) {
        if (!(f.target() == g.source())) continue;
        for (const auto& [n3, h] : homs) {
          if (!(g.target() == h.source())) continue;
          assoc.expect(compose(h, compose(g, f)) == compose(compose(h, g), f), [&] { return n1 + " ; " + n2 + " ; " + n3; });
        }
      }
    }
  }
  {
    const auto zoo = weil_zoo();
    law dims(rep, "tensor.dimension", "functor/tensor", "pairs of small Weil algebras");
    law assoc(rep, "tensor.associative", "functor/tensor", "triples of small Weil algebras, up to renaming");
    law unit(rep, "tensor.unit", "functor/tensor", "A (x) k and A");
    law aug(rep, "augmentation.unit", "algebra/augmentation", "augmentation o unit = id_k");
    for (const auto& a : zoo) {
      unit.expect(tensor(a, algebra()).same_shape(a), [&] { return describe(a); });
      aug.expect(compose(algebra_hom::augmentation(a), algebra_hom::unit(a)) == algebra_hom::identity(algebra()),
                 [&] { return describe(a); });
      for (const auto& b : zoo) {
        dims.expect(tensor(a, b).dimension() == a.dimension() * b.dimension(), [&] { return describe(a) + " (x) " + describe(b); });
        for (const auto& c : zoo)
          assoc.expect(tensor(tensor(a, b), c).same_shape(tensor(a, tensor(b, c))),
                       [&] { return describe(a) + " ; " + describe(b) + " ; " + describe(c); });
      }
    }
    aug.expect(compose(algebra_hom::augmentation(space_R(2).algebra_of()), algebra_hom::unit(space_R(2).algebra_of())) ==
                   algebra_hom::identity(algebra()),
               [] { return std::string("k[Z1,Z2]"); });
  }
  return rep;
}

report equalizer(std::uint64_t seed) {
  report rep("equalizer", seed);
  const algebra_hom e = dual_hom(carve::square_to_d2());
  const algebra_hom f = dual_hom(carve::d_to_square_00());
  const algebra_hom g = dual_hom(carve::d_to_square_0d());
  const auto r = analyze_equalizer(f, g, e);
  rep.add("limit-diagram", "weil-equalizer/limit-diagram", "W_D(2) -> W_{D^2} => W_D", r.holds(),
          r.holds() ? std::nullopt
                    : std::optional<std::string>("equalizes=" + std::to_string(r.equalizes) + " injective=" +
                                                 std::to_string(r.injective) + " spans=" + std::to_string(r.spans)));
  const std::size_t dim = equalizer_dimension(f, g);
  rep.add("dimension", "weil-equalizer/limit-diagram", "equalizer subspace of the two legs has dimension 3", dim == 3,
          dim == 3 ? std::nullopt : std::optional<std::string>("dimension " + std::to_string(dim)));
  const algebra a = space_D(2).algebra_of();
  rep.add("trivial", "weil-equalizer/limit-diagram", "f = g: identity is the equalizer",
          equalizer_check(f, f, algebra_hom::identity(a)) && equalizer_dimension(f, f) == a.dimension());
  // A map that equalizes but misses part of the equalizer is rejected.
  const algebra_hom partial = dual_hom(carve::d2_first());
  const algebra_hom into = compose(e, partial);
  rep.add("non-spanning-rejected", "weil-equalizer/limit-diagram", "W_D -> W_D(2) -> W_{D^2} is not the equalizer",
          !equalizer_check(f, g, into));
  return rep;
}

namespace {

/// Random coordinate map between carved spaces, rejected until its dual
/// validates.
std::optional<carve_map> random_carve(sampler& rng, const carved_space& s, const carved_space& t) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<expr> comps;
    std::vector<std::size_t> nil, free;
    for (std::size_t g = 0; g < s.dim(); ++g) (s.is_infinitesimal(g) ? nil : free).push_back(g);
    for (std::size_t c = 0; c < t.dim(); ++c) {
      expr e = free.empty() ? expr(rng.small_rational()) : rng.random_polynomial(free.size(), 2, 2);
      if (!free.empty()) {
        std::vector<expr> sub;
        for (auto g : free) sub.push_back(expr::variable(g));
        e = substitute(e, sub);
      }
      if (t.is_infinitesimal(c)) {
        if (nil.empty()) break;
        e = e * expr::variable(nil[static_cast<std::size_t>(rng.integer(0, static_cast<long>(nil.size()) - 1))]);
        if (rng.integer(0, 2) == 0) e = e + expr(rng.small_rational()) * expr::variable(nil[0]);
      }
      comps.push_back(e);
    }
    if (comps.size() != t.dim()) return std::nullopt;
    try {
      carve_map m(s, t, comps);
      dual_hom(m);
      return m;
    } catch (const relation_violated&) {
    }
  }
  return std::nullopt;
}

}  // namespace

report duality(std::uint64_t seed, std::size_t samples) {
  report rep("duality", seed);
  sampler rng(seed);
  {
    law l(rep, "named-maps.validate", "duality/dual-hom", "every named coordinate map");
    for (const auto& [name, m] : carve::catalog()) {
      try {
        dual_hom(m);
      } catch (const error& e) {
        l.expect(false, [&] { return name + ": " + e.what(); });
      }
    }
  }
  {
    const algebra_hom s = dual_hom(carve::scale());
    const algebra& t = s.target();
    rep.add("scale.image", "duality/dual-hom", "(r,d) |-> rd gives X |-> Z*X", s.images()[0] == parse_element(t, "Z*X"));
    const algebra_hom dd = dual_hom(carve::d_to_dd());
    rep.add("diagonal.image", "duality/dual-hom", "d |-> (d,d) gives X |-> X, Y |-> X",
            dd.images()[0] == parse_element(dd.target(), "X") && dd.images()[1] == parse_element(dd.target(), "X"));
    rep.add("product.algebra", "duality/carved-spaces", "R^2 x D(2) is k[Z1,Z2,X,Y]/(X^2,X*Y,Y^2)",
            space_product(space_R(2), space_D2()).algebra_of().to_string() == "k[Z1,Z2,X,Y]/(X^2,X*Y,Y^2)");
    rep.add("empty.algebra", "duality/carved-spaces", "R^0 is the point, algebra k", space_R(0).algebra_of() == algebra());
    bool threw = false;
    try {
      dual_hom(carve_map::parse(space_D(), space_D2(), {"1 + X", "0"}));
    } catch (const relation_violated&) {
      threw = true;
    }
    rep.add("off-target-rejected", "duality/dual-hom", "d |-> (1+d, 0) does not land in D(2)", threw);
    rep.add("identity", "functor/identity", "identity coordinates give the identity hom",
            dual_hom(carve_map::identity(space_D2())) == algebra_hom::identity(space_D2().algebra_of()));
  }
  {
    law l(rep, "contravariance", "duality/contravariance", "random composable polynomial maps among D, D(2), D^2, R x D");
    const std::vector<carved_space> spaces{space_D(), space_D2(), space_D(2), space_product(space_R(), space_D())};
    std::size_t done = 0;
    for (std::size_t t = 0; t < samples * 4 && done < samples / 2 + 1; ++t) {
      const auto& a = spaces[static_cast<std::size_t>(rng.integer(0, 3))];
      const auto& b = spaces[static_cast<std::size_t>(rng.integer(0, 3))];
      const auto& c = spaces[static_cast<std::size_t>(rng.integer(0, 3))];
      auto f = random_carve(rng, a, b);
      auto g = random_carve(rng, b, c);
      if (!f || !g) continue;
      ++done;
      l.expect(dual_contravariance_check(*f, *g), [&] { return f->to_string() + " then " + g->to_string(); });
    }
    l.expect(done > 0, [] { return std::string("no composable random pairs generated"); });
    l.expect(dual_contravariance_check(carve::d_to_d0(), carve::d2_first()), [] { return std::string("(d,0) then first"); });
  }
  return rep;
}

report functor_laws(std::uint64_t seed, std::size_t samples) {
  report rep("functor", seed);
  sampler rng(seed);
  const auto zoo = weil_zoo();
  {
    law comp(rep, "prolong.composition", "functor/composition", "random polynomial maps, dims <= 3, degree <= 3");
    law id(rep, "prolong.identity", "functor/identity", "random points");
    for (std::size_t t = 0; t < samples; ++t) {
      const std::size_t a = dim_between(rng, 1, 3), b = dim_between(rng, 1, 3), c = dim_between(rng, 1, 3);
      smooth_map f = random_map(rng, a, b), g = random_map(rng, b, c);
      const algebra& w = zoo[t % zoo.size()];
      wpoint p = random_point(rng, w, a);
      comp.expect(prolong(compose(g, f), p) == prolong(g, prolong(f, p)),
                  [&] { return "f=" + f.to_string() + " g=" + g.to_string() + " p=" + p.to_string(); });
      id.expect(prolong(smooth_map::identity(a), p) == p, [&] { return p.to_string(); });
    }
  }
  {
    law l(rep, "prolong.square", "functor/prolongation", "x^2 at a+bX over W_D");
    const algebra d = space_D().algebra_of();
    for (std::size_t t = 0; t < 10; ++t) {
      rational a = rng.small_rational(), b = rng.small_rational();
      wpoint p = make_wpoint(d, 1, {{monomial{0}, {a}}, {monomial{1}, {b}}});
      l.expect(prolong(smooth_map::parse(1, {"x^2"}), p) == make_wpoint(d, 1, {{monomial{0}, {a * a}}, {monomial{1}, {2 * a * b}}}),
               [&] { return p.to_string(); });
    }
    const algebra x3 = truncated_line(3);
    wpoint p = wpoint(x3, {parse_element(x3, "2 + X")});
    rep.add("prolong.cube", "functor/prolongation", "x^3 at 2+X over k[X]/(X^3) is 8+12X+6X^2",
            prolong(smooth_map::parse(1, {"x^3"}), p) == wpoint(x3, {parse_element(x3, "8 + 12*X + 6*X^2")}));
  }
  {
    law assoc(rep, "reassociate.prolong", "functor/iterated-prolongation",
              "T^B T^A f versus T^{A (x) B} f, random polynomial maps and algebra pairs");
    law round(rep, "reassociate.round-trip", "functor/iterated-prolongation", "unassociate o reassociate = id");
    const std::vector<algebra> small{space_D().algebra_of(), space_D2().algebra_of(), truncated_line(3), space_D(2).algebra_of()};
    for (std::size_t t = 0; t < samples; ++t) {
      const algebra& outer = small[static_cast<std::size_t>(rng.integer(0, 3))];
      const algebra& inner = small[static_cast<std::size_t>(rng.integer(0, 3))];
      const std::size_t m = dim_between(rng, 1, 3), k = dim_between(rng, 1, 3);
      nested_wpoint np{outer, inner, {}};
      for (std::size_t i = 0; i < m; ++i) {
        std::map<monomial, element> c;
        for (const auto& mono : outer.weil_basis()) {
          element e = rng.random_element(inner);
          if (!e.is_zero()) c.emplace(mono, e);
        }
        np.coords.push_back(std::move(c));
      }
      smooth_map f = random_map(rng, m, k);
      assoc.expect(prolong(f, reassociate(np)) == reassociate(prolong_nested(f, np)),
                   [&] { return "f=" + f.to_string() + " over " + describe(outer) + " / " + describe(inner); });
      round.expect(unassociate(reassociate(np), outer, inner) == np, [&] { return reassociate(np).to_string(); });
    }
    const algebra d = space_D().algebra_of();
    nested_wpoint dd{d, d, {{{monomial{0}, parse_element(d, "1 + 2*X")}, {monomial{1}, parse_element(d, "3 + 4*X")}}}};
    const algebra flat = tensor(d, d);
    rep.add("reassociate.example", "functor/iterated-prolongation", "(a+bX2)+(c+dX2)X1 flattens to a+cX1+bX2+dX1X2",
            reassociate(dd) == wpoint(flat, {parse_element(flat, "1 + 3*X@1 + 2*X@2 + 4*X@1*X@2")}));
  }
  {
    law fam(rep, "free.exponentiation", "functor/free-algebras", "families over k[Z1,Z2] instantiated at random points");
    law ground(rep, "free.ground", "functor/free-algebras", "T^k is the identity");
    law mixed(rep, "free.partial", "functor/free-algebras", "families over k[Z,X]/(X^2) instantiated in Z");
    const algebra r2 = space_R(2).algebra_of(), rd = space_product(space_R(), space_D()).algebra_of();
    for (std::size_t t = 0; t < samples; ++t) {
      const std::size_t m = dim_between(rng, 1, 3);
      smooth_map f = random_map(rng, m, dim_between(rng, 1, 2));
      wpoint p = random_point(rng, r2, m);
      std::map<std::string, rational> z{{"Z1", rng.small_rational()}, {"Z2", rng.small_rational()}};
      wpoint at = instantiate_free(p, z);
      fam.expect(instantiate_free(prolong(f, p), z) == prolong(f, at), [&] { return "f=" + f.to_string() + " p=" + p.to_string(); });
      ground.expect(tau(prolong(f, at)) == f(tau(at)), [&] { return "f=" + f.to_string() + " at " + show(tau(at)); });
      wpoint q = random_point(rng, rd, m);
      std::map<std::string, rational> zz{{"Z", rng.small_rational()}};
      mixed.expect(instantiate_free(prolong(f, q), zz) == prolong(f, instantiate_free(q, zz)),
                   [&] { return "f=" + f.to_string() + " p=" + q.to_string(); });
    }
    const algebra zx = space_product(space_R(), space_D()).algebra_of();
    wpoint fam1(zx, {parse_element(zx, "3 + 5*Z*X")});
    const algebra d = space_D().algebra_of();
    rep.add("free.instantiate", "functor/free-algebras", "a+ZbX at Z=2 is a+2bX",
            instantiate_free(fam1, {{"Z", 2}}) == wpoint(d, {parse_element(d, "3 + 10*X")}) &&
                instantiate_free(fam1, {{"Z", 0}}) == wpoint(d, {parse_element(d, "3")}));
  }
  {
    law l(rep, "line.ring-structure", "functor/line-object", "T^A R = R (x) A: +, -, * agree with the algebra");
    const smooth_map ops = smooth_map::parse(2, {"x + y", "x - y", "x*y", "3*x^2 - 1/2"});
    for (std::size_t t = 0; t < samples; ++t) {
      const algebra& a = zoo[t % zoo.size()];
      element x = rng.random_element(a), y = rng.random_element(a);
      wpoint out = prolong(ops, wpoint(a, {x, y}));
      element three = element::constant(a, 3), half = element::constant(a, make_rational(1, 2));
      l.expect(out == wpoint(a, {x + y, x - y, x * y, three * x * x - half}), [&] { return x.to_string() + " ; " + y.to_string(); });
    }
  }
  {
    law l(rep, "iota.tau", "functor/base-point", "tau o iota = id and T^A f o iota = iota o f");
    for (std::size_t t = 0; t < samples; ++t) {
      const algebra& a = zoo[t % zoo.size()];
      const std::size_t m = dim_between(rng, 1, 3);
      auto q = rng.rational_vector(m);
      smooth_map f = random_map(rng, m, dim_between(rng, 1, 3));
      l.expect(tau(iota(a, q)) == q && prolong(f, iota(a, q)) == iota(a, f(q)), [&] { return show(q) + " f=" + f.to_string(); });
    }
  }
  return rep;
}

report naturality(std::uint64_t seed, std::size_t samples) {
  report rep("naturality", seed);
  sampler rng(seed);
  const auto homs = named_homs();
  const std::size_t per_hom = std::max<std::size_t>(1, samples / 2);
  law nat(rep, "alpha.natural", "functor/naturality", "every named hom x random points and polynomial maps");
  law comp(rep, "alpha.composition", "functor/alpha-composition", "composable pairs of named homs x random points");
  law id(rep, "alpha.identity", "functor/alpha-identity", "identity on every named algebra x random points");
  law line(rep, "alpha.line", "functor/alpha-line", "alpha on R is R (x) phi");
  law coh(rep, "alpha.tensor-coherence", "functor/alpha-tensor", "alpha of phi (x) id_C against outer application, C = W_D");
  law coh2(rep, "alpha.tensor-coherence-swapped", "functor/alpha-tensor", "alpha of id_C (x) phi, C = W_D");
  law fam(rep, "alpha.families", "functor/alpha-exponential", "alpha commutes with instantiating free parameters");
  const algebra c = space_D().algebra_of();
  const algebra r1 = space_R().algebra_of();
  for (const auto& [name, phi] : homs) {
    const algebra& a = phi.source();
    const algebra_hom phi_c = tensor(phi, algebra_hom::identity(c));
    const algebra_hom c_phi = tensor(algebra_hom::identity(c), phi);
    const algebra_hom phi_z = tensor(phi, algebra_hom::identity(r1));
    for (std::size_t t = 0; t < per_hom; ++t) {
      const std::size_t m = dim_between(rng, 1, 3);
      smooth_map f = random_map(rng, m, dim_between(rng, 1, 3));
      wpoint p = random_point(rng, a, m);
      nat.expect(alpha(phi, prolong(f, p)) == prolong(f, alpha(phi, p)),
                 [&] { return name + ": f=" + f.to_string() + " p=" + p.to_string(); });
      id.expect(alpha(algebra_hom::identity(a), p) == p, [&] { return name + ": " + p.to_string(); });
      element x = rng.random_element(a);
      line.expect(alpha(phi, wpoint(a, {x})) == wpoint(phi.target(), {phi(x)}), [&] { return name + ": " + x.to_string(); });

      // Outer application: Σ φ(a-monomial) ⊗ c-coefficient.
      wpoint q = random_point(rng, tensor(a, c), m);
      nested_wpoint nq = unassociate(q, a, c);
      nested_wpoint applied{phi.target(), c, {}};
      for (const auto& coord : nq.coords) {
        std::map<monomial, element> out;
        for (const auto& [mono, ce] : coord) {
          const element img = phi.image(mono);
          for (const auto& [mt, qt] : img.terms()) {
            auto [it, _] = out.try_emplace(mt, element(c));
            it->second += ce * qt;
          }
        }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        applied.coords.push_back(std::move(out));
      }
      coh.expect(alpha(phi_c, q) == reassociate(applied), [&] { return name + ": " + q.to_string(); });
      wpoint q2 = random_point(rng, tensor(c, a), m);
      nested_wpoint nq2 = unassociate(q2, c, a);
      nested_wpoint applied2{c, phi.target(), {}};
      for (const auto& coord : nq2.coords) {
        std::map<monomial, element> out;
        for (const auto& [mono, ae] : coord) {
          element img = phi(ae);
          if (!img.is_zero()) out.emplace(mono, std::move(img));
        }
        applied2.coords.push_back(std::move(out));
      }
      coh2.expect(alpha(c_phi, q2) == reassociate(applied2), [&] { return name + ": " + q2.to_string(); });

      wpoint fp = random_point(rng, tensor(a, r1), m);
      const std::string zname = fp.algebra_of().generators().back();
      const rational z = rng.small_rational();
      const wpoint lhs = instantiate_free(alpha(phi_z, fp), {{phi_z.target().generators().back(), z}});
      const wpoint rhs = alpha(phi, wpoint(a, [&] {
                                 std::vector<element> cs;
                                 const wpoint at = instantiate_free(fp, {{zname, z}});
                                 for (const auto& e : at.coords()) cs.push_back(rename_into(e, a));
                                 return cs;
                               }()));
      std::vector<element> lhs_renamed;
      for (const auto& e : lhs.coords()) lhs_renamed.push_back(rename_into(e, phi.target()));
      fam.expect(wpoint(phi.target(), lhs_renamed) == rhs, [&] { return name + ": " + fp.to_string(); });
    }
  }
  for (const auto& [n1, phi] : homs)
    for (const auto& [n2, psi] : homs) {
      if (!(phi.target() == psi.source())) continue;
      const algebra_hom both = compose(psi, phi);
      for (std::size_t t = 0; t < std::max<std::size_t>(1, per_hom / 5); ++t) {
        wpoint p = random_point(rng, phi.source(), dim_between(rng, 1, 3));
        comp.expect(alpha(psi, alpha(phi, p)) == alpha(both, p), [&] { return n1 + " then " + n2 + ": " + p.to_string(); });
      }
    }
  return rep;
}

report tangent(std::uint64_t seed, std::size_t samples) {
  report rep = tangent_module_laws(3, samples, seed);
  const std::vector<rational> p{1, 2, 3}, v{4, 5, 6}, w{-1, 0, make_rational(1, 2)};
  rep.add("add.example", "tangent-module/addition", "(p,v)+(p,w) = (p,v+w) on R^3",
          tangent_add(make_tangent(p, v), make_tangent(p, w)) == make_tangent(p, {3, 5, make_rational(13, 2)}));
  bool threw = false;
  try {
    tangent_add(make_tangent(p, v), make_tangent(v, w));
  } catch (const base_mismatch&) {
    threw = true;
  }
  rep.add("add.base-mismatch", "tangent-module/addition", "tangents at different base points are rejected", threw);
  return rep;
}

report euclidean(std::uint64_t seed, std::size_t samples) {
  report rep("euclidean", seed);
  std::uint64_t k = 0;
  for (std::size_t m = 0; m <= 4; ++m) rep.merge(euclidean_check(m, samples, derive_seed(seed, k++)), "R^" + std::to_string(m) + ".");
  const std::vector<std::pair<std::string, algebra>> ws{
      {"k", algebra()}, {"D", space_D().algebra_of()}, {"D(2)", space_D2().algebra_of()}};
  for (const auto& [name, w] : ws)
    for (std::size_t m = 1; m <= 2; ++m)
      rep.merge(euclidean_tensor_check(m, w, std::max<std::size_t>(1, samples / 4), derive_seed(seed, k++)),
                "R^" + std::to_string(m) + "(x)" + name + ".");
  return rep;
}

report fibered(std::uint64_t seed, std::size_t samples) {
  report rep("fibered-tangent", seed);
  for (std::size_t m = 0; m <= 3; ++m)
    rep.merge(fibered_tangent_check(m, samples, derive_seed(seed, m)), "R^" + std::to_string(m) + ".");
  return rep;
}

namespace {

classical_field random_field(sampler& rng, std::size_t n, std::size_t m, unsigned degree) {
  std::map<std::vector<std::size_t>, expr> coeffs;
  std::vector<std::size_t> tuple(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == n) {
      coeffs.emplace(tuple, rng.random_polynomial(m, degree));
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      tuple[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return classical_field::make(n, m, coeffs);
}

std::vector<element> scaled(std::vector<element> v, const rational& a) {
  for (auto& x : v) x *= a;
  return v;
}

}  // namespace

report forms(std::uint64_t seed, std::size_t samples) {
  report rep("forms", seed);
  sampler rng(seed);
  std::uint64_t k = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t t = 0; t < 3; ++t) {
      const auto f = random_field(rng, n, 3, 3);
      report r = validate_form(from_classical(f), samples, derive_seed(seed, k++));
      for (auto e : r.entries()) {
        e.id = "classical.n" + std::to_string(n) + "." + std::to_string(t) + "." + e.id;
        e.instance = f.to_string() + " on R^3, " + std::to_string(samples) + " trials";
        rep.add(std::move(e));
      }
    }

  const auto xy = default_variables(2);
  const auto dx = from_classical(classical_field::make(1, 1, {{{0}, expr(1)}}));
  rep.add("example.dx", "forms/definition", "gamma |-> c1 on R^1 is a form", validate_form(dx, samples, derive_seed(seed, k++)).all_passed());
  {
    differential_form base;
    base.n = 1, base.m = 1, base.e = 1, base.name = "base coordinate";
    base.body = [](const microcube& c) { return std::vector<element>{c.base()[0]}; };
    const report r = validate_form(base, 5, derive_seed(seed, k++));
    rep.add("example.base-rejected", "forms/homogeneity", "gamma |-> base coordinate fails homogeneity at a = 0",
            !r.all_passed() && r.first_failure()->id == "homogeneity.1");
    differential_form sym;
    sym.n = 2, sym.m = 1, sym.e = 1, sym.name = "c1*c2";
    sym.body = [](const microcube& c) { return std::vector<element>{c.first_order(0)[0] * c.first_order(1)[0]}; };
    const report s = validate_form(sym, 5, derive_seed(seed, k++));
    bool homog = true, alt = true;
    for (const auto& e : s.entries()) (e.id.starts_with("homogeneity") ? homog : alt) = (e.id.starts_with("homogeneity") ? homog : alt) && e.pass;
    rep.add("example.symmetric-rejected", "forms/alternation", "gamma |-> c1*c2 is homogeneous but not alternating", homog && !alt);
  }
  {
    const auto xdy = from_classical(classical_field::make(1, 2, {{{1}, parse_expr("x", xy)}}));
    auto g = microcube::from_rational(1, {{2, 3}, {1, 1}});
    rep.add("example.x-dy", "forms/classical-bridge", "x dy at base (2,3), c1 = (1,1) is 2", integrate(g, xdy) == std::vector<rational>{2});
    const auto area = from_classical(classical_field::make(2, 2, {{{0, 1}, expr(1)}}));
    law l(rep, "example.area", "forms/classical-bridge", "dx^dy is c1_x c2_y - c1_y c2_x");
    for (std::size_t t = 0; t < 10; ++t) {
      microcube c = random_microcube(rng, 2, 2);
      const auto& c1 = c.first_order(0);
      const auto& c2 = c.first_order(1);
      l.expect(area(c) == std::vector<element>{c1[0] * c2[1] - c1[1] * c2[0]}, [&] { return c.to_string(); });
    }
    bool threw = false;
    try {
      classical_field::make(2, 2, {{{0, 1}, expr(1)}, {{1, 0}, expr(1)}});
    } catch (const condition_violated&) {
      threw = true;
    }
    rep.add("example.antisymmetry", "forms/classical-bridge", "a_12 = a_21 = 1 is rejected", threw);
  }
  {
    law lin(rep, "integrate.linear", "forms/integration", "integration is linear in the form, degree 2 on R^3");
    for (std::size_t t = 0; t < samples / 4 + 1; ++t) {
      const auto f1 = random_field(rng, 2, 3, 2), f2 = random_field(rng, 2, 3, 2);
      const rational a = rng.small_rational();
      std::map<std::vector<std::size_t>, expr> sum = f1.coefficients();
      for (const auto& [tuple, e] : f2.coefficients()) {
        auto [it, inserted] = sum.try_emplace(tuple, expr(a) * e);
        if (!inserted) it->second = it->second + expr(a) * e;
      }
      const auto w = from_classical(classical_field::make(2, 3, sum));
      microcube c = random_microcube(rng, 2, 3);
      const auto lhs = integrate(c, w);
      const auto r1 = integrate(c, from_classical(f1)), r2 = integrate(c, from_classical(f2));
      lin.expect(lhs == std::vector<rational>{r1[0] + a * r2[0]}, [&] { return c.to_string(); });
    }
  }
  {
    const auto base = from_classical(random_field(rng, 2, 3, 2));
    parametrized_body phi = [base](const microcube& c, const rational& x) { return scaled(base(c), x); };
    std::vector<rational> params{0, 1, -2, make_rational(3, 5)};
    bool ok = true;
    std::string witness;
    try {
      auto slices = curry_factorize(phi, 2, 3, 1, params, 10, derive_seed(seed, k++));
      for (std::size_t i = 0; i < params.size() && ok; ++i) {
        microcube c = random_microcube(rng, 2, 3);
        ok = slices[i](c) == scaled(base(c), params[i]);
        if (!ok) witness = c.to_string();
      }
    } catch (const error& e) {
      ok = false;
      witness = e.what();
    }
    rep.add("factorize.scalings", "forms/factorization", "x * omega0 over four parameters", ok, ok ? std::nullopt : std::optional(witness));
    parametrized_body bad = [](const microcube& c, const rational&) { return std::vector<element>{c.base()[0]}; };
    bool threw = false;
    try {
      curry_factorize(bad, 1, 1, 1, {1}, 5, derive_seed(seed, k++));
    } catch (const condition_violated&) {
      threw = true;
    }
    rep.add("factorize.rejects", "forms/factorization", "base coordinate family is not a family of forms", threw);
  }
  {
    differential_form f0 = function_form(smooth_map::parse(1, {"x^2"}));
    const report r = validate_form(f0, 3, 0);
    rep.add("degree-zero.vacuous", "forms/definition", "0-forms satisfy both conditions vacuously", r.all_passed() && r.entries().size() == 1);
  }
  return rep;
}

report sign_law() {
  report rep("sign-law", 0);
  for (std::size_t n1 = 1; n1 <= 5; ++n1) {
    law bij(rep, "delta.bijection.S" + std::to_string(n1), "exterior/delta-permutation",
            "every sigma in S_" + std::to_string(n1) + ", every i");
    law sign(rep, "delta.sign.S" + std::to_string(n1), "exterior/delta-sign", "every sigma in S_" + std::to_string(n1) + ", every i");
    for (const auto& s : all_permutations(n1))
      for (std::size_t i = 0; i < n1; ++i) {
        const permutation d = delta_perm(s, i);
        const long shift = static_cast<long>(inverse(s)[i]) - static_cast<long>(i);
        const int expected = (shift % 2 ? -1 : 1) * signature(s);
        auto witness = [&] {
          std::string w = "sigma=[";
          for (std::size_t k = 0; k < s.size(); ++k) w += (k ? "," : "") + std::to_string(s[k] + 1);
          return w + "] i=" + std::to_string(i + 1);
        };
        bij.expect(is_permutation(d), witness);
        sign.expect(is_permutation(d) && signature(d) == expected, witness);
      }
  }
  rep.add("delta.example", "exterior/delta-permutation", "sigma = (1 2), i = 1 gives the identity on {1}",
          delta_perm({1, 0}, 0) == permutation{0});
  return rep;
}

namespace {

permutation with_fixed_last(const permutation& d) {
  permutation p = d;
  p.push_back(d.size());
  return p;
}

}  // namespace

report exterior(std::uint64_t seed, std::size_t samples) {
  report rep("exterior", seed);
  sampler rng(seed);
  std::uint64_t k = 0;
  {
    law l(rep, "lemma.shuffle-scaling", "exterior/shuffle-scaling", "hom identities on D^2..D^4, every i and j");
    for (std::size_t n1 = 2; n1 <= 4; ++n1)
      for (std::size_t i = 0; i < n1; ++i) {
        const permutation rho = carve::boundary_positions(n1, i);
        for (std::size_t j = 0; j < n1; ++j) {
          // j' = j before i, j-1 after i, the last slot for j = i.
          const std::size_t moved = j < i ? j : (j > i ? j - 1 : n1 - 1);
          const auto lhs = compose(dual_hom(carve::permute_with_scalar(rho)), dual_hom(carve::scale_direction(n1, j)));
          const auto rhs = compose(dual_hom(carve::scale_direction(n1, moved)), dual_hom(carve::permute(rho)));
          l.expect(lhs == rhs, [&] { return "n+1=" + std::to_string(n1) + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1); });
        }
      }
  }
  {
    law l(rep, "lemma.shuffle-permutation", "exterior/shuffle-permutation", "hom identities on D^1..D^4, every sigma and i");
    for (std::size_t n1 = 1; n1 <= 4; ++n1)
      for (const auto& s : all_permutations(n1))
        for (std::size_t i = 0; i < n1; ++i) {
          const auto lhs = compose(dual_hom(carve::boundary_shuffle(n1, i)), dual_hom(carve::permute(s)));
          const auto rhs = compose(dual_hom(carve::permute(with_fixed_last(delta_perm(s, i)))),
                                   dual_hom(carve::boundary_shuffle(n1, inverse(s)[i])));
          l.expect(lhs == rhs, [&] { return "n+1=" + std::to_string(n1) + " i=" + std::to_string(i + 1); });
        }
  }
  {
    // ∂ examples.
    auto t = microcube::from_rational(1, {{3}, {5}});
    auto s = shuffle_boundary(t, 0);
    const algebra& b = s.scalars();
    rep.add("shuffle.tangent", "exterior/shuffle", "n=0: tangent (p,v) becomes p + v eps",
            s.degree() == 0 && s.at(0, 0) == parse_element(b, "3 + 5*" + b.generators().back()));
    auto sq = microcube::from_rational(2, {{1}, {2}, {3}, {4}});
    auto s1 = shuffle_boundary(sq, 0);
    const std::string eps = s1.scalars().generators().back();
    rep.add("shuffle.square", "exterior/shuffle", "n=1, i=1: c0' = c0 + c1 eps, c1' = c2 + c12 eps",
            s1.at(0, 0) == parse_element(s1.scalars(), "1 + 2*" + eps) && s1.at(1, 0) == parse_element(s1.scalars(), "3 + 4*" + eps));
    auto s2 = shuffle_boundary(sq, 1);
    rep.add("shuffle.last", "exterior/shuffle", "i = n+1 keeps the directions in place",
            s2.at(0, 0) == parse_element(s2.scalars(), "1 + 3*" + eps) && s2.at(1, 0) == parse_element(s2.scalars(), "2 + 4*" + eps));
  }
  {
    const smooth_map f = smooth_map::parse(2, {"x^2*y - 3*y"});
    const auto w = function_form(f);
    law l(rep, "integral.derivative", "exterior/partial-integral", "n=0: epsilon part of f(p + v eps) is Df(p).v");
    for (std::size_t t = 0; t < 10; ++t) {
      auto p = rng.rational_vector(2), v = rng.rational_vector(2);
      auto c = microcube::from_rational(1, {p, v});
      const rational expected = (2 * p[0] * p[1]) * v[0] + (p[0] * p[0] - 3) * v[1];
      l.expect(integral_i(w, c, 0) == std::vector<element>{element::constant(algebra(), expected)}, [&] { return c.to_string(); });
    }
    const auto constant = from_classical(classical_field::make(1, 2, {{{0}, expr(7)}, {{1}, expr(-2)}}));
    law z(rep, "integral.constant", "exterior/partial-integral", "constant-coefficient forms have d = 0");
    const auto dconst = exterior_derivative(constant, 5, derive_seed(seed, k++));
    for (std::size_t t = 0; t < 10; ++t) {
      auto c = random_microcube(rng, 2, 2);
      z.expect(dconst(c) == std::vector<element>{element(algebra())}, [&] { return c.to_string(); });
    }
    const auto sq = exterior_derivative(function_form(smooth_map::parse(1, {"x^2"})), 5, derive_seed(seed, k++));
    law d0(rep, "d.square", "exterior/derivative", "d(x^2) is gamma |-> 2 p c1");
    for (std::size_t t = 0; t < 10; ++t) {
      auto c = random_microcube(rng, 1, 1);
      d0.expect(sq(c) == std::vector<element>{c.base()[0] * c.first_order(0)[0] * rational(2)}, [&] { return c.to_string(); });
    }
  }
  {
    law hom(rep, "lemma.integral-homogeneity", "exterior/partial-integral", "(int)_i((a.j) gamma) = a (int)_i(gamma), random forms n <= 2 on R^3");
    law alt(rep, "lemma.alternating-sum", "exterior/alternating-sum", "sum_i (-1)^i (int)_i is alternating, every sigma in S_{n+1}, n+1 <= 4");
    law valid(rep, "theorem.d-is-form", "exterior/derivative", "d omega validates, random forms n <= 2 on R^3");
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto f = random_field(rng, n, 3, 3);
      const auto w = from_classical(f);
      differential_form d;
      try {
        d = exterior_derivative(w, std::max<std::size_t>(1, samples / 10), derive_seed(seed, k++));
      } catch (const condition_violated& e) {
        valid.expect(false, [&] { return f.to_string() + ": " + e.what(); });
        continue;
      }
      const auto perms = all_permutations(n + 1);
      for (std::size_t t = 0; t < std::max<std::size_t>(1, samples / 20); ++t) {
        microcube c = random_microcube(rng, n + 1, 3);
        const auto value = d(c);
        for (const auto& s : perms) {
          const rational sign = signature(s);
          alt.expect(d(permute_directions(c, s)) == scaled(value, sign), [&] { return f.to_string() + " " + c.to_string(); });
        }
        if (n <= 2)
          for (std::size_t i = 0; i <= n; ++i) {
            const auto base = integral_i(w, c, i);
            for (std::size_t j = 0; j <= n; ++j) {
              const rational a = rng.small_rational();
              hom.expect(integral_i(w, scale_direction(c, j, a), i) == scaled(base, a),
                         [&] { return f.to_string() + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1); });
            }
          }
      }
    }
  }
  return rep;
}

namespace {

/// All monomials of degree ≤ d in m variables, graded.
std::vector<expr> monomials(std::size_t m, unsigned d) {
  std::vector<expr> out;
  std::vector<unsigned> e(m, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos == m) {
      expr t(1);
      for (std::size_t i = 0; i < m; ++i)
        if (e[i]) t = t * pow(expr::variable(i), e[i]);
      out.push_back(t);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
    e[pos] = 0;
  };
  rec(0, d);
  return out;
}

/// Compares dω with the oracle on `samples` microcubes, validates dω and
/// checks d(dω) = 0.
void oracle_entries(report& rep, const std::string& prefix, const classical_field& f, std::uint64_t seed,
                    std::size_t samples, std::size_t validation_trials) {
  const std::string inst = f.to_string() + " on R^" + std::to_string(f.dim());
  sampler rng(seed);
  const auto w = from_classical(f);
  differential_form d;
  try {
    d = exterior_derivative(w, validation_trials, derive_seed(seed, 1));
    rep.add(prefix + "validates", "exterior/derivative", inst, true);
  } catch (const condition_violated& e) {
    rep.add(prefix + "validates", "exterior/derivative", inst, false, e.what());
    return;
  }
  const auto expected = from_classical(oracle::classical_d(f));
  law match(rep, prefix + "matches-oracle", "exterior/classical-agreement", inst + " vs " + expected.name);
  law dd(rep, prefix + "dd-zero", "exterior/dd-zero", inst);
  const auto ddw = exterior_derivative(d, 0);
  for (std::size_t t = 0; t < samples; ++t) {
    microcube c = random_microcube(rng, f.degree() + 1, f.dim());
    const auto got = d(c), want = expected(c);
    match.expect(got == want, [&] { return c.to_string() + " d=" + show(got) + " oracle=" + show(want); });
    microcube c2 = random_microcube(rng, f.degree() + 2, f.dim());
    const auto z = ddw(c2);
    dd.expect(z == std::vector<element>(z.size(), element(algebra())), [&] { return c2.to_string() + " dd=" + show(z); });
  }
}

}  // namespace

report exterior_oracle(std::uint64_t seed, std::size_t samples) {
  report rep("exterior-oracle", seed);
  const std::size_t m = 3;
  const auto mons = monomials(m, 3);
  const auto vars = default_variables(m);
  std::uint64_t k = 0;
  for (std::size_t n = 0; n <= 2; ++n) {
    std::vector<std::vector<std::size_t>> tuples;
    if (n == 0) tuples = {{}};
    if (n == 1) tuples = {{0}, {1}, {2}};
    if (n == 2) tuples = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& tuple : tuples)
      for (const auto& mono : mons) {
        const auto f = classical_field::make(n, m, {{tuple, mono}});
        std::string id = "n" + std::to_string(n) + ".";
        for (auto i : tuple) id += "d" + vars[i];
        id += "." + to_string(mono, vars) + ".";
        oracle_entries(rep, id, f, derive_seed(seed, k++), samples, std::max<std::size_t>(2, samples / 20));
      }
  }
  return rep;
}

report form_d(const classical_field& f, const std::string& name, std::uint64_t seed, std::size_t samples) {
  report rep("form-d", seed);
  if (!f.is_polynomial()) throw inexact_primitive("form d needs polynomial coefficients");
  oracle_entries(rep, name + ".", f, seed, samples, std::max<std::size_t>(1, samples / 10));
  return rep;
}

report document_checks(const document& doc, std::uint64_t seed, std::size_t samples) {
  report rep("document", seed);
  std::uint64_t k = 0;
  for (const auto& name : doc.names("homs")) {
    const std::string id = "hom." + name;
    try {
      const algebra_hom h = doc.hom(name);
      rep.add(id + ".relations", "algebra/hom-validation", h.to_string(), true);
      sampler rng(derive_seed(seed, k++));
      law l(rep, id + ".ring-map", "algebra/hom-apply", h.to_string());
      for (std::size_t t = 0; t < samples; ++t) {
        element a = rng.random_element(h.source()), b = rng.random_element(h.source());
        l.expect(h(a + b) == h(a) + h(b) && h(a * b) == h(a) * h(b), [&] { return a.to_string() + " ; " + b.to_string(); });
      }
    } catch (const relation_violated& e) {
      rep.add(id + ".relations", "algebra/hom-validation", name, false, e.what());
    } catch (const std::exception& e) {
      rep.add(id + ".relations", "algebra/hom-validation", name, false, e.what());
    }
  }
  for (const auto& name : doc.names("carve_maps"))
    guarded(rep, "carve." + name, "duality/dual-hom", name, [&] {
      const auto m = doc.carve(name);
      try {
        rep.add("carve." + name, "duality/dual-hom", m.to_string(), true, std::nullopt);
        dual_hom(m);
      } catch (const relation_violated& e) {
        rep.entry(rep.entries().size() - 1).pass = false;
        rep.entry(rep.entries().size() - 1).witness = e.what();
      }
    });
  for (const auto& name : doc.names("smooth_maps")) {
    guarded(rep, "smooth." + name, "functor/naturality", name, [&] {
      const auto f = doc.smooth(name);
      for (const auto& pname : doc.names("points")) {
        const auto p = doc.point(pname);
        if (p.dim() != f.domain_dim() || !f.is_polynomial()) continue;
        const auto lifted = prolong(f, p);
        const auto aug = algebra_hom::augmentation(p.algebra_of());
        const bool ok = alpha(aug, lifted) == prolong(f, alpha(aug, p));
        rep.add("smooth." + name + "." + pname, "functor/naturality", f.to_string() + " at " + p.to_string(), ok,
                ok ? std::nullopt : std::optional<std::string>(lifted.to_string()));
      }
    });
  }
  for (const auto& name : doc.names("fields"))
    guarded(rep, "field." + name, "forms/definition", name, [&] {
      const auto f = doc.field(name);
      report v = validate_form(from_classical(f), samples, derive_seed(seed, k++));
      rep.merge(v, "field." + name + ".");
      if (f.is_polynomial()) rep.merge(form_d(f, name, derive_seed(seed, k++), std::max<std::size_t>(1, samples / 4)), "field.");
    });
  for (const auto& name : doc.names("forms"))
    guarded(rep, "form." + name, "forms/definition", name, [&] {
      rep.merge(validate_form(doc.form(name), samples, derive_seed(seed, k++)), "form." + name + ".");
    });
  return rep;
}

report check_all(const document* doc, std::uint64_t seed, std::size_t samples) {
  report rep("check-all", seed);
  std::uint64_t k = 0;
  auto next = [&] { return derive_seed(seed, k++); };
  rep.merge(algebra_core(next(), samples), "algebra.");
  rep.merge(equalizer(next()), "equalizer.");
  rep.merge(duality(next(), samples), "duality.");
  rep.merge(functor_laws(next(), samples), "functor.");
  rep.merge(naturality(next(), samples), "naturality.");
  rep.merge(tangent(next(), samples), "tangent.");
  rep.merge(euclidean(next(), samples), "euclidean.");
  rep.merge(fibered(next(), samples), "fibered.");
  rep.merge(forms(next(), samples), "forms.");
  rep.merge(sign_law(), "sign-law.");
  rep.merge(exterior(next(), samples), "exterior.");
  rep.merge(exterior_oracle(next(), samples), "oracle.");
  if (doc) rep.merge(document_checks(*doc, next(), samples), "document.");
  return rep;
}

document default_document() {
  return document::parse(R"doc({
  "version": 1,
  "algebras": {
    "D2": {"generators": ["X", "Y"], "relations": [{"X": 2}, "X*Y", "Y^2"]},
    "J3": {"generators": ["T"], "relations": ["T^4"]}
  },
  "homs": {
    "first": {"source": "D", "target": "D2", "images": ["X"]},
    "diag": {"source": "D2", "target": "D", "images": {"X": "X", "Y": "X"}},
    "jet": {"source": "D", "target": "J3", "images": ["T^2 - 3*T^3"]}
  },
  "carve_maps": {
    "scale": {"source": "R x D", "target": "D", "components": ["Z*X"]},
    "diagonal": {"source": "D", "target": "D^2", "components": ["X", "X"]}
  },
  "smooth_maps": {
    "f": {"dim": 2, "components": ["x*y", "x^2 - y/2"]},
    "cube": {"dim": 1, "components": ["x^3"]},
    "wave": {"dim": 1, "components": ["sin(x)", "exp(2*x)"]}
  },
  "points": {
    "p": {"algebra": "D", "coords": ["1 + 2*X", "3"]},
    "q": {"algebra": "D2", "coords": ["X + Y", "2 - Y"]},
    "t": {"algebra": "J3", "coords": ["1/2 + T"]}
  },
  "fields": {
    "xdy": {"degree": 1, "dim": 2, "coefficients": {"2": "x"}},
    "ydx": {"degree": 1, "dim": 2, "coefficients": {"1": "y"}},
    "constant": {"degree": 1, "dim": 2, "coefficients": {"1": "3", "2": "-1"}},
    "flux": {"degree": 2, "dim": 3, "coefficients": {"1,2": "z", "2,3": "x*y^2"}}
  },
  "forms": {
    "area": {"degree": 2, "dim": 2, "components": ["c1_x*c2_y - c1_y*c2_x"]},
    "x_dy": {"degree": 1, "dim": 2, "components": ["c0_x*c1_y"]}
  }
})doc");
}

}  // namespace weil::suite
