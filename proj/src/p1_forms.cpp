#include "strata/p1_forms.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace strata {

std::string to_string(const P1Point& p) { return p.at_infinity ? "oo" : to_string(p.x); }

int RationalDifferential::order_at_infinity() const {
  int total = 0;
  for (const auto& s : support_)
    if (!s.point.at_infinity) total += s.order;
  return -2 - total;
}

int RationalDifferential::order_at(const P1Point& p) const {
  if (p.at_infinity) return order_at_infinity();
  for (const auto& s : support_)
    if (s.point == p) return s.order;
  return 0;
}

std::vector<SupportEntry> RationalDifferential::divisor() const {
  std::vector<SupportEntry> out = support_;
  if (!explicit_infinity_ && order_at_infinity() != 0) out.push_back({P1Point::infinity(), order_at_infinity()});
  return out;
}

RationalDifferential RationalDifferential::scaled(const Rational& c) const {
  if (c == 0) throw std::invalid_argument("scale must be nonzero");
  RationalDifferential r = *this;
  r.scale_ *= c;
  return r;
}

vec_type<Rational> series_divide(const vec_type<Rational>& num, const vec_type<Rational>& den, Eigen::Index n) {
  if (den.size() == 0 || den(0) == 0) throw std::invalid_argument("series_divide: D(0) = 0");
  vec_type<Rational> q = vec_type<Rational>::Zero(n + 1);
  for (Eigen::Index k = 0; k <= n; ++k) {
    Rational acc = k < num.size() ? num(k) : Rational(0);
    for (Eigen::Index j = 1; j <= k && j < den.size(); ++j) acc -= den(j) * q(k - j);
    q(k) = acc / den(0);
  }
  return q;
}

namespace {

// Coefficients of prod (c_i + s_i t)^{e_i}, e_i >= 0, as a dense polynomial.
vec_type<Rational> product_of_powers(const std::vector<std::pair<Rational, Rational>>& lin,
                                     const std::vector<int>& exps) {
  vec_type<Rational> p = vec_type<Rational>::Constant(1, Rational(1));
  for (std::size_t i = 0; i < lin.size(); ++i)
    for (int k = 0; k < exps[i]; ++k) {
      vec_type<Rational> q = vec_type<Rational>::Zero(p.size() + 1);
      q.head(p.size()) += lin[i].first * p;
      q.tail(p.size()) += lin[i].second * p;
      p = std::move(q);
    }
  return p;
}

Rational laurent_coefficient(const std::vector<std::pair<Rational, Rational>>& lin, const std::vector<int>& exps,
                             Eigen::Index k) {
  std::vector<std::pair<Rational, Rational>> nl, dl;
  std::vector<int> ne, de;
  for (std::size_t i = 0; i < lin.size(); ++i) {
    if (exps[i] > 0) { nl.push_back(lin[i]); ne.push_back(exps[i]); }
    if (exps[i] < 0) { dl.push_back(lin[i]); de.push_back(-exps[i]); }
  }
  vec_type<Rational> q = series_divide(product_of_powers(nl, ne), product_of_powers(dl, de), k);
  return q(k);
}

}  // namespace

RationalDifferential build_p1_differential(std::vector<SupportEntry> support, Rational scale) {
  if (scale == 0) throw std::invalid_argument("scale must be nonzero");
  RationalDifferential w;
  int total = 0, infinities = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (support[i].point == support[j].point)
        throw std::invalid_argument("repeated point " + to_string(support[i].point));
    total += support[i].order;
    if (support[i].point.at_infinity) ++infinities;
  }
  if (infinities > 0 && total != -2)
    throw std::invalid_argument("orders sum to " + std::to_string(total) + ", expected -2");
  w.support_ = std::move(support);
  w.scale_ = std::move(scale);
  w.explicit_infinity_ = infinities > 0;
  Rational sum = 0;
  for (const auto& s : w.divisor())
    if (s.order <= -1) sum += residue_at(w, s.point);
  if (sum != 0) throw std::logic_error("residue theorem violated in build_p1_differential");
  return w;
}

Rational residue_at(const RationalDifferential& w, const P1Point& p) {
  const int m = w.order_at(p);
  if (m >= 0) return Rational(0);
  std::vector<std::pair<Rational, Rational>> lin;
  std::vector<int> exps;
  if (p.at_infinity) {
    // w = 1/z: omega = -scale w^M prod (1 - z_i w)^{m_i} dw
    for (const auto& s : w.support()) {
      if (s.point.at_infinity || s.order == 0) continue;
      lin.emplace_back(Rational(1), -s.point.x);
      exps.push_back(s.order);
    }
    return -w.scale() * laurent_coefficient(lin, exps, -1 - m);
  }
  // t = z - p: factors (t + (p - z_i))^{m_i}
  for (const auto& s : w.support()) {
    if (s.point.at_infinity || s.point == p || s.order == 0) continue;
    lin.emplace_back(p.x - s.point.x, Rational(1));
    exps.push_back(s.order);
  }
  return w.scale() * laurent_coefficient(lin, exps, -1 - m);
}

std::vector<Rational> random_distinct_rationals(std::size_t count, std::uint64_t seed, int num_bound, int den_bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational r = make_rational(num(rng), den(rng));
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

ResidueProfileStats sample_residue_profiles(const std::vector<int>& orders, int trials, std::uint64_t seed) {
  if (std::accumulate(orders.begin(), orders.end(), 0) != -2)
    throw std::invalid_argument("orders must sum to -2");
  ResidueProfileStats st;
  st.orders = orders;
  std::vector<std::size_t> poles;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] < 0) poles.push_back(i);
  st.zero_count_per_pole.assign(poles.size(), 0);
  std::seed_seq seq{seed};
  std::mt19937_64 master(seq);
  for (int t = 0; t < trials; ++t) {
    auto pts = random_distinct_rationals(orders.size(), master());
    std::vector<SupportEntry> support;
    for (std::size_t i = 0; i < orders.size(); ++i) support.push_back({P1Point::finite(pts[i]), orders[i]});
    auto w = build_p1_differential(support);
    int zeros = 0;
    for (std::size_t k = 0; k < poles.size(); ++k)
      if (residue_at(w, support[poles[k]].point) == 0) {
        ++zeros;
        ++st.zero_count_per_pole[k];
      }
    ++st.trials;
    if (zeros > 0) {
      ++st.some_pole_zero;
      if (!st.some_zero_example) st.some_zero_example = pts;
    }
    if (!poles.empty() && zeros == static_cast<int>(poles.size())) {
      ++st.all_poles_zero;
      if (!st.all_zero_example) st.all_zero_example = pts;
    }
  }
  return st;
}

}  // namespace strata
