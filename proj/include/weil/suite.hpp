#pragma once

#include <cstdint>

#include "weil/document.hpp"
#include "weil/report.hpp"

namespace weil::suite {

/// Each group returns its own report; `samples` is the number of random
/// instances per law.
report algebra_core(std::uint64_t seed, std::size_t samples);
report equalizer(std::uint64_t seed);
report duality(std::uint64_t seed, std::size_t samples);
/// Functoriality, free families, the ring structure of T^A R and
/// reassociation of iterated prolongations.
report functor_laws(std::uint64_t seed, std::size_t samples);
/// Naturality and the α-coherences on every named hom.
report naturality(std::uint64_t seed, std::size_t samples);
report tangent(std::uint64_t seed, std::size_t samples);
report euclidean(std::uint64_t seed, std::size_t samples);
report fibered(std::uint64_t seed, std::size_t samples);
report forms(std::uint64_t seed, std::size_t samples);
report sign_law();
report exterior(std::uint64_t seed, std::size_t samples);
/// dω against the symbolic classical derivative on every monomial field
/// of degree ≤ 2 on R^3 with coefficient degree ≤ 3, plus d(dω) = 0.
report exterior_oracle(std::uint64_t seed, std::size_t samples);

/// Laws on the objects of a document: homs validate and respect the ring
/// operations, carve maps compile, fields and raw forms validate, dA agrees
/// with the oracle. Errors become failing entries.
report document_checks(const document& doc, std::uint64_t seed, std::size_t samples);

/// Every group above, merged in a fixed order.
report check_all(const document* doc, std::uint64_t seed, std::size_t samples);

/// The `form d` report for one classical field.
report form_d(const classical_field& f, const std::string& name, std::uint64_t seed, std::size_t samples);

/// Small document exercising every section; `check all` uses it when no
/// input is given.
document default_document();

}  // namespace weil::suite
