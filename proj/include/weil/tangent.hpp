#pragma once

#include <cstdint>
#include <vector>

#include "weil/prolongation.hpp"
#include "weil/report.hpp"

namespace weil {

/// Tangent vectors of R^m are W_D-points p + vX.
using tangent = wpoint;

const algebra& dual_numbers();  // W_D = k[X]/(X^2)

tangent make_tangent(const std::vector<rational>& base, const std::vector<rational>& vec);
std::vector<rational> tangent_base(const tangent& t);
std::vector<rational> tangent_vector(const tangent& t);

/// Glues two tangents with a common base into a W_{D(2)}-point and pulls
/// back along d ↦ (d,d). Throws base_mismatch.
tangent tangent_add(const tangent& t1, const tangent& t2);
/// Pulls back along (r,d) ↦ rd, then instantiates the free scalar at r.
tangent tangent_scale(const rational& r, const tangent& t);

/// W_{D(2)}-point with coefficients 1 ↦ p, X ↦ v1, Y ↦ v2.
wpoint glue_d2(const std::vector<rational>& p, const std::vector<rational>& v1, const std::vector<rational>& v2);

/// Module laws for tangents on R^m (commutativity, associativity, zero,
/// scalar associativity/unit/distributivity) plus the commuting square
/// relating addition and scaling, both pointwise and as a hom equality.
report tangent_module_laws(std::size_t m, std::size_t trials, std::uint64_t seed);

/// E = R^m is Euclidean: (a,b) ↦ a + bX through the free family a + Zb and
/// the restriction Z ↦ X is bijective; transported addition and scaling
/// agree with tangent_add / tangent_scale.
report euclidean_check(std::size_t m, std::size_t trials, std::uint64_t seed);

/// Same check for E ⊗ W with its coefficientwise module structure.
report euclidean_tensor_check(std::size_t m, const algebra& w, std::size_t trials, std::uint64_t seed);

/// M ⊗ W_{D(2)} = (M ⊗ W_D) ×_M (M ⊗ W_D), and the algebra-level equalizer
/// it comes from.
report fibered_tangent_check(std::size_t m, std::size_t trials, std::uint64_t seed);

}  // namespace weil
