#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weil {

/// Exact ground ring. Every law check runs over this type.
using rational = mpq_class;

rational make_rational(long num, long den = 1);

/// "3", "-3/4"; always canonical.
std::string to_string(const rational& q);

/// Accepts integers, fractions "p/q" and decimals "1.25".
rational parse_rational(std::string_view text);

}  // namespace weil
