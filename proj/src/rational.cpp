#include "schur0/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace schur0 {

Rational make_rational(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational v(p, q);
  v.canonicalize();
  return v;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_display_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return to_fraction_string(value);
}

Rational power(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace schur0
