#include "strata/polynomial.hpp"

#include <boost/integer/common_factor.hpp>

namespace strata {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  Exponent e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  for (const auto& [e, k] : terms_) r.add_term(e, k * c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  std::size_t target = images.empty() ? nvars_ : images.front().nvars();
  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    r = r + term;
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer l = 1, g = 0;
  for (const auto& [e, c] : terms_) l = boost::integer::lcm(l, denominator(c));
  for (const auto& [e, c] : terms_) {
    Integer z = numerator(c) * (l / denominator(c));
    g = boost::integer::gcd(g, z < 0 ? Integer(-z) : z);
  }
  Rational scale = Rational(l) / Rational(g);
  if (terms_.rbegin()->second < 0) scale = -scale;
  return *this * scale;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) mono += (mono.empty() ? "" : "*") + names[i];
    std::string coef = denominator(mag) == 1 ? numerator(mag).str() : strata::to_string(mag);
    if (mono.empty()) out += coef;
    else if (mag == 1) out += mono;
    else out += coef + "*" + mono;
  }
  return out;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial();
  const std::size_t nv = m[0][0].nvars();
  if (n == 1) return m[0][0];
  Polynomial det(nv);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * determinant(std::move(minor));
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace strata
