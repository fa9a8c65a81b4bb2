#pragma once
#include "strata/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace strata {

// Sparse multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Integer coefficients with gcd 1 and positive lex-leading coefficient.
  Polynomial primitive() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

Polynomial determinant(std::vector<std::vector<Polynomial>> m);

}  // namespace strata
