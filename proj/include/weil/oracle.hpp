#pragma once

#include <cstddef>

#include "weil/expr.hpp"
#include "weil/forms.hpp"

namespace weil::oracle {

/// ∂e/∂x_var by the textbook rules on the expression tree. log is rejected
/// (its derivative needs division by a non-constant).
expr partial(const expr& e, std::size_t var);

/// Classical exterior derivative: (dA)_J = Σ_k (-1)^k ∂_{J_k} A_{J∖J_k}
/// over increasing J of length n+1.
classical_field classical_d(const classical_field& f);

}  // namespace weil::oracle
