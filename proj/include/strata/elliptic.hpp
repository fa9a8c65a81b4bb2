#pragma once
#include "strata/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace strata {

// y^2 = x^3 + a x + b over Q.
struct EllipticCurveQ {
  Rational a;
  Rational b;

  EllipticCurveQ(Rational a_, Rational b_);
  Rational discriminant_core() const { return 4 * a * a * a + 27 * b * b; }
};

struct EPoint {
  bool infinity = true;
  Rational x;
  Rational y;

  static EPoint O() { return {}; }
  static EPoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const EPoint& p, const EPoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
};

std::string to_string(const EPoint& p);

bool on_curve(const EllipticCurveQ& E, const EPoint& P);
EPoint negate(const EPoint& P);
EPoint add_points(const EllipticCurveQ& E, const EPoint& P, const EPoint& Q);
EPoint multiply(const EllipticCurveQ& E, long long n, const EPoint& P);

struct DivisorE {
  std::vector<std::pair<EPoint, int>> entries;

  long long degree() const;
};

EPoint divisor_sum(const EllipticCurveQ& E, const DivisorE& D);

bool linearly_equivalent(const EllipticCurveQ& E, const DivisorE& D1, const DivisorE& D2);

// sum m_i z_i ~ 2 sum q_j on E; requires deg zs = 2 |qs|.
bool check_weierstrass_binary(const EllipticCurveQ& E, const DivisorE& zs, const std::vector<EPoint>& qs);

bool differ_by_two_torsion(const EllipticCurveQ& E, const EPoint& z, const EPoint& q);

}  // namespace strata
