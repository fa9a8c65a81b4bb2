#pragma once
#include "strata/linalg.hpp"
#include "strata/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace strata {

struct P1Point {
  bool at_infinity = false;
  Rational x;

  static P1Point infinity() { return {true, Rational(0)}; }
  static P1Point finite(Rational v) { return {false, std::move(v)}; }
  friend bool operator==(const P1Point& a, const P1Point& b) {
    return a.at_infinity == b.at_infinity && (a.at_infinity || a.x == b.x);
  }
};

std::string to_string(const P1Point& p);

struct SupportEntry {
  P1Point point;
  int order;
};

// scale * prod (z - z_i)^{m_i} dz over the finite support.
class RationalDifferential {
 public:
  const std::vector<SupportEntry>& support() const { return support_; }
  const Rational& scale() const { return scale_; }
  int order_at_infinity() const;
  int order_at(const P1Point& p) const;  // 0 off the support
  std::vector<SupportEntry> divisor() const;
  RationalDifferential scaled(const Rational& c) const;

 private:
  friend RationalDifferential build_p1_differential(std::vector<SupportEntry>, Rational);
  std::vector<SupportEntry> support_;
  Rational scale_{1};
  bool explicit_infinity_ = false;
};

// Throws InvalidInput-style std::invalid_argument on repeated points or wrong degree.
RationalDifferential build_p1_differential(std::vector<SupportEntry> support, Rational scale = Rational(1));

Rational residue_at(const RationalDifferential& w, const P1Point& p);

// Truncated Taylor coefficients of N(t)/D(t) with D(0) != 0, orders 0..n.
vec_type<Rational> series_divide(const vec_type<Rational>& num, const vec_type<Rational>& den, Eigen::Index n);

struct ResidueProfileStats {
  std::vector<int> orders;
  int trials = 0;
  int all_poles_zero = 0;
  int some_pole_zero = 0;
  std::vector<int> zero_count_per_pole;  // aligned with the negative entries of orders
  std::optional<std::vector<Rational>> all_zero_example;  // placement of the support
  std::optional<std::vector<Rational>> some_zero_example;
};

// Places the support at distinct random finite rationals (order 0 at infinity).
ResidueProfileStats sample_residue_profiles(const std::vector<int>& orders, int trials, std::uint64_t seed);

// Distinct random rationals with bounded numerators and denominators.
std::vector<Rational> random_distinct_rationals(std::size_t count, std::uint64_t seed, int num_bound = 30,
                                                int den_bound = 12);

}  // namespace strata
