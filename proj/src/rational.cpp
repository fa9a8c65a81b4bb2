#include "strata/rational.hpp"

#include <stdexcept>

namespace strata {

Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9')
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  std::string digits(s);
  if (digits[0] == '+') digits.erase(0, 1);
  return Integer(digits);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer p = parse_integer(trim(s.substr(0, slash)), text);
  Integer q = parse_integer(trim(s.substr(slash + 1)), text);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

Rational make_rational(long long p, long long q) { return Rational(Integer(p), Integer(q)); }

}  // namespace strata
