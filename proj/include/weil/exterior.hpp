#pragma once

#include <cstdint>

#include "weil/forms.hpp"

namespace weil {

/// ∂_i on an (n+1)-microcube, i 0-based: direction i moves to the last slot
/// and that slot becomes a nilpotent scalar ε, so the result is an
/// n-microcube over B[ε]/(ε²) with c'_S = c_S + c_{S∪{last}}·ε.
microcube shuffle_boundary(const microcube& c, std::size_t i);

/// (∫)_i: ω evaluated on ∂_i γ, then the ε-coefficient of the result.
std::vector<element> integral_i(const differential_form& w, const microcube& c, std::size_t i);

/// dω(γ) = Σ_i (-1)^i (∫)_i (0-based i). The result is run through
/// validate_form with `validation_trials` trials (0 skips it) and
/// condition_violated is thrown if it fails.
differential_form exterior_derivative(const differential_form& w, std::size_t validation_trials = 10,
                                      std::uint64_t seed = 0);

}  // namespace weil
