#include "weil/random.hpp"

namespace weil {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) noexcept {
  return splitmix64(seed ^ splitmix64(counter + 0x632be59bd9b4e019ull));
}

long sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

rational sampler::small_rational(long num_bound, long den_bound) {
  return make_rational(integer(-num_bound, num_bound), integer(1, den_bound));
}

std::vector<rational> sampler::rational_vector(std::size_t n) {
  std::vector<rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(small_rational());
  return v;
}

element sampler::random_element(const algebra& a, unsigned max_degree) {
  element e(a);
  if (a.is_weil()) {
    for (const auto& m : a.weil_basis()) e.add_term(m, small_rational());
    return e;
  }
  // Free generators: a handful of random low-degree monomials.
  const std::size_t n = a.num_generators();
  for (int t = 0; t < 4; ++t) {
    monomial m(n);
    unsigned budget = static_cast<unsigned>(integer(0, max_degree));
    for (unsigned k = 0; k < budget; ++k) ++m[static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1))];
    e.add_term(m, small_rational());
  }
  return e;
}

expr sampler::random_polynomial(std::size_t vars, unsigned degree, std::size_t max_terms) {
  expr out(small_rational());
  const std::size_t terms = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    expr term(small_rational());
    if (vars > 0 && degree > 0) {
      unsigned d = static_cast<unsigned>(integer(1, degree));
      for (unsigned k = 0; k < d; ++k) term = term * expr::variable(static_cast<std::size_t>(integer(0, static_cast<long>(vars) - 1)));
    }
    out = out + term;
  }
  return out;
}

}  // namespace weil
