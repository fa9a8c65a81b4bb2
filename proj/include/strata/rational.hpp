#pragma once
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace strata {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Gaussian rational a + b i.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator*(const Rational& c, const GaussianRational& a) {
    return {c * a.re, c * a.im};
  }
};

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const GaussianRational& r) { return r.is_zero(); }

Integer numerator(const Rational& r);
Integer denominator(const Rational& r);

// Always "p/q" with q > 0, e.g. "0/1", "-3/4".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p/q", "p", or surrounding whitespace; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational make_rational(long long p, long long q = 1);

}  // namespace strata
