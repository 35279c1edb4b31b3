#include "weil/exterior.hpp"

#include <mutex>

#include "weil/duality.hpp"

namespace weil {

namespace {

const algebra_hom& shuffle_hom(std::size_t n, std::size_t i) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, algebra_hom> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, i});
  if (it == cache.end()) it = cache.emplace(std::pair{n, i}, dual_hom(carve::boundary_shuffle(n, i))).first;
  return it->second;
}

/// B → B[ε]: the same element with ε-exponent 0.
element extend(const element& x, const algebra& bigger) {
  element r(bigger);
  for (const auto& [mono, q] : x.terms()) {
    auto ex = mono.exponents();
    ex.push_back(0);
    r.add_term(monomial(std::move(ex)), q);
  }
  return r;
}

/// ε-coefficient of an element of B[ε], as an element of B.
element epsilon_part(const element& x, const algebra& smaller) {
  element r(smaller);
  for (const auto& [mono, q] : x.terms()) {
    if (mono.exponents().back() != 1) continue;
    std::vector<std::uint32_t> ex(mono.exponents().begin(), mono.exponents().end() - 1);
    r.add_term(monomial(std::move(ex)), q);
  }
  return r;
}

}  // namespace

microcube shuffle_boundary(const microcube& c, std::size_t i) {
  const std::size_t n1 = c.degree();
  if (n1 == 0 || i >= n1) throw index_out_of_range("shuffle_boundary: index " + std::to_string(i + 1) + " outside 1.." + std::to_string(n1));
  microcube moved = transform(c, shuffle_hom(n1, i));
  const algebra b = dual_extension(c.scalars());
  const element eps = element::generator(b, b.num_generators() - 1);
  const std::size_t n = n1 - 1, last = std::size_t{1} << n;
  microcube out(n, c.dim(), b);
  for (std::size_t s = 0; s < last; ++s)
    for (std::size_t k = 0; k < c.dim(); ++k)
      out.coeff(s)[k] = extend(moved.at(s, k), b) + extend(moved.at(s | last, k), b) * eps;
  return out;
}

std::vector<element> integral_i(const differential_form& w, const microcube& c, std::size_t i) {
  if (c.degree() != w.n + 1) throw dimension_mismatch("integral_i: microcube degree must be n+1");
  auto values = w(shuffle_boundary(c, i));
  std::vector<element> out;
  for (const auto& v : values) out.push_back(epsilon_part(v, c.scalars()));
  return out;
}

differential_form exterior_derivative(const differential_form& w, std::size_t validation_trials, std::uint64_t seed) {
  differential_form d;
  d.n = w.n + 1;
  d.m = w.m;
  d.e = w.e;
  d.name = "d(" + w.name + ")";
  d.body = [w](const microcube& c) {
    std::vector<element> total(w.e, element(c.scalars()));
    for (std::size_t i = 0; i < c.degree(); ++i) {
      auto part = integral_i(w, c, i);
      for (std::size_t k = 0; k < w.e; ++k) {
        if (i % 2)
          total[k] -= part[k];
        else
          total[k] += part[k];
      }
    }
    return total;
  };
  if (validation_trials > 0) {
    report r = validate_form(d, validation_trials, seed);
    if (const auto* bad = r.first_failure())
      throw condition_violated(d.name + " is not a form (" + bad->id + ")", bad->witness.value_or(""));
    d.state = differential_form::status::validated;
  }
  return d;
}

}  // namespace weil
