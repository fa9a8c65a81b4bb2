#include "strata/elliptic.hpp"

#include "strata/curve_graph.hpp"

namespace strata {

EllipticCurveQ::EllipticCurveQ(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
  if (discriminant_core() == 0) throw InvalidInput("singular curve: 4a^3 + 27b^2 = 0");
}

std::string to_string(const EPoint& p) {
  return p.infinity ? "O" : "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

bool on_curve(const EllipticCurveQ& E, const EPoint& P) {
  if (P.infinity) return true;
  return P.y * P.y == P.x * P.x * P.x + E.a * P.x + E.b;
}

EPoint negate(const EPoint& P) {
  if (P.infinity) return P;
  return EPoint::affine(P.x, -P.y);
}

EPoint add_points(const EllipticCurveQ& E, const EPoint& P, const EPoint& Q) {
  if (!on_curve(E, P)) throw InvalidInput("point " + to_string(P) + " is not on the curve");
  if (!on_curve(E, Q)) throw InvalidInput("point " + to_string(Q) + " is not on the curve");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  Rational slope;
  if (P.x == Q.x) {
    if (P.y != Q.y || P.y == 0) return EPoint::O();
    slope = (3 * P.x * P.x + E.a) / (2 * P.y);
  } else {
    slope = (Q.y - P.y) / (Q.x - P.x);
  }
  Rational x3 = slope * slope - P.x - Q.x;
  Rational y3 = slope * (P.x - x3) - P.y;
  return EPoint::affine(std::move(x3), std::move(y3));
}

EPoint multiply(const EllipticCurveQ& E, long long n, const EPoint& P) {
  EPoint base = n < 0 ? negate(P) : P;
  unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1ULL : static_cast<unsigned long long>(n);
  EPoint acc = EPoint::O();
  while (k > 0) {
    if (k & 1ULL) acc = add_points(E, acc, base);
    base = add_points(E, base, base);
    k >>= 1;
  }
  return acc;
}

long long DivisorE::degree() const {
  long long d = 0;
  for (const auto& [p, m] : entries) d += m;
  return d;
}

EPoint divisor_sum(const EllipticCurveQ& E, const DivisorE& D) {
  EPoint acc = EPoint::O();
  for (const auto& [p, m] : D.entries) acc = add_points(E, acc, multiply(E, m, p));
  return acc;
}

bool linearly_equivalent(const EllipticCurveQ& E, const DivisorE& D1, const DivisorE& D2) {
  return D1.degree() == D2.degree() && divisor_sum(E, D1) == divisor_sum(E, D2);
}

bool check_weierstrass_binary(const EllipticCurveQ& E, const DivisorE& zs, const std::vector<EPoint>& qs) {
  if (zs.degree() != 2 * static_cast<long long>(qs.size()))
    throw InvalidInput("degree of the marked divisor is " + std::to_string(zs.degree()) + ", expected " +
                       std::to_string(2 * qs.size()));
  DivisorE twice;
  for (const auto& q : qs) twice.entries.emplace_back(q, 2);
  return linearly_equivalent(E, zs, twice);
}

bool differ_by_two_torsion(const EllipticCurveQ& E, const EPoint& z, const EPoint& q) {
  EPoint t = add_points(E, z, negate(q));
  return !t.infinity && add_points(E, t, t).infinity;
}

}  // namespace strata
