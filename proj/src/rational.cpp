#include "weil/rational.hpp"

#include <cctype>

#include "weil/errors.hpp"

namespace weil {

rational make_rational(long num, long den) {
  if (den == 0) throw error("zero denominator");
  rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const rational& q) { return q.get_str(); }

rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw parse_error("empty number", 0);
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string den = "1" + std::string(s.size() - dot - 1, '0');
    rational q(mpz_class(digits.empty() ? "0" : digits), mpz_class(den));
    q.canonicalize();
    return q;
  }
  rational q;
  if (q.set_str(s, 10) != 0) throw parse_error("malformed number '" + s + "'", 0);
  if (q.get_den() == 0) throw parse_error("zero denominator", 0);
  q.canonicalize();
  return q;
}

}  // namespace weil
