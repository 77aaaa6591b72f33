#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "linhash/effective_modulus.hpp"
#include "linhash/numtheory.hpp"
#include "linhash/rng.hpp"

using namespace linhash;

namespace {

// Oracle: try every k = 1..nu; k claims a when c = floor(a k) satisfies
// 0 <= a - c/k < 1/(nu), i.e. c lies strictly above (a - 1/nu) k.
int64_t effective_modulus_brute(const Rational& a, int64_t n, int64_t u) {
  const int64_t nu = n * u;
  const Rational window(1, nu);
  for (int64_t k = 1; k <= nu; ++k) {
    const Rational c((a * Rational(k)).floor());
    if (c > (a - window) * Rational(k)) return k;
  }
  return -1;
}

IntervalSet make(std::vector<std::pair<std::pair<int64_t, int64_t>,
                                       std::pair<int64_t, int64_t>>> spans) {
  std::vector<IntervalSet::Interval> ivs;
  for (const auto& [lo, hi] : spans)
    ivs.push_back({Rational(lo.first, lo.second), Rational(hi.first, hi.second)});
  return IntervalSet::from_intervals(std::move(ivs));
}

}  // namespace

TEST_CASE("interval set algebra") {
  const IntervalSet a = make({{{0, 1}, {1, 2}}, {{3, 4}, {1, 1}}});
  const IntervalSet b = make({{{1, 3}, {2, 3}}});
  CHECK(a.measure() == Rational(3, 4));
  CHECK(a.contains(Rational(1, 3)));
  CHECK_FALSE(a.contains(Rational(2, 3)));

  const IntervalSet inter = a.intersect(b);
  CHECK(inter.measure() == Rational(1, 6));  // [1/3, 1/2)
  const IntervalSet uni = a.unite(b);
  CHECK(uni.measure() == Rational(3, 4) + Rational(1, 3) - Rational(1, 6));
  const IntervalSet diff = a.subtract(b);
  CHECK(diff.measure() == Rational(3, 4) - Rational(1, 6));
  CHECK(diff.disjoint_with(b));

  // Touching intervals merge.
  const IntervalSet touch = make({{{0, 1}, {1, 4}}, {{1, 4}, {1, 2}}});
  CHECK(touch.intervals().size() == 1);
  CHECK(touch.measure() == Rational(1, 2));
}

TEST_CASE("claimed intervals") {
  // k = 1, n = 2, u = 8: only c = 0, clipped at zero; measure 1/16.
  const IntervalSet i1 = claimed_intervals(1, 2, 8);
  CHECK(i1.measure() == Rational(1, 16));

  // k = 2: single window at 1/2.
  const IntervalSet i2 = claimed_intervals(2, 2, 8);
  CHECK(i2.measure() == Rational(1, 16));
  CHECK(i2.contains(Rational(1, 2)));
  CHECK_FALSE(i2.contains(Rational(1, 2) + Rational(1, 16)));

  // Unclipped measure is phi(k)/(nu).
  for (int64_t k = 2; k <= 12; ++k)
    CHECK(claimed_intervals(k, 4, 25).measure() == Rational(totient(k), 100));

  CHECK_THROWS_AS(claimed_intervals(17, 2, 8), std::domain_error);

  // Disjointness below sqrt(nu): I(k1) and I(k2) never meet.
  const int64_t n = 4, u = 100;
  int64_t root = 1;
  while ((root + 1) * (root + 1) <= n * u) ++root;
  for (int64_t k1 = 1; k1 <= root; ++k1) {
    for (int64_t k2 = k1 + 1; k2 <= root; ++k2)
      CHECK(claimed_intervals(k1, n, u).disjoint_with(claimed_intervals(k2, n, u)));
  }
}

TEST_CASE("simplest_in finds the smallest denominator") {
  CHECK(simplest_in(Rational(1, 3), false, Rational(1, 2), false) == Rational(1, 2));
  CHECK(simplest_in(Rational(1, 3), true, Rational(1, 2), true) == Rational(2, 5));
  CHECK(simplest_in(Rational(3, 10), false, Rational(2, 5), false) == Rational(1, 3));
  CHECK(simplest_in(Rational(0), true, Rational(1, 7), false) == Rational(1, 7));
  CHECK(simplest_in(Rational(2), false, Rational(3), false) == Rational(2));
  CHECK(simplest_in(Rational(5, 2), false, Rational(7, 2), false) == Rational(3));
  CHECK_THROWS_AS(simplest_in(Rational(1, 2), true, Rational(1, 2), false),
                  std::domain_error);
}

TEST_CASE("effective modulus examples") {
  // a = 7/20, n = 2, u = 8: k = 1, 2 fail; 7/20 - 1/3 = 1/60 < 1/16.
  CHECK(effective_modulus_of(Rational(7, 20), 2, 8) == 3);
  // Exact fractions with small denominator claim themselves.
  CHECK(effective_modulus_of(Rational(1, 3), 2, 8) == 3);
  CHECK(effective_modulus_of(Rational(2, 5), 10, 10) == 5);
  // Just above 1/2 within the window: claimed by 2.
  CHECK(effective_modulus_of(Rational(1, 2) + Rational(1, 32), 2, 8) == 2);
  // Tiny a is claimed by 1 via the clipped window at zero.
  CHECK(effective_modulus_of(Rational(1, 100), 2, 8) == 1);
  CHECK_THROWS_AS(effective_modulus_of(Rational(0), 2, 8), std::domain_error);
  CHECK_THROWS_AS(effective_modulus_of(Rational(3, 2), 2, 8), std::domain_error);
}

TEST_CASE("effective modulus agrees with the brute-force oracle") {
  // 10^4 random rationals at nu <= 10^3.
  const int64_t n = 4, u = 250;
  CounterRng rng(2024, 0);
  for (int64_t t = 0; t < 10'000; ++t) {
    const int64_t den = 2 + rng.below(100'000);
    const int64_t num = 1 + rng.below(den - 1);
    const Rational a(num, den);
    const int64_t fast = effective_modulus_of(a, n, u);
    const int64_t brute = effective_modulus_brute(a, n, u);
    REQUIRE(fast == brute);
    REQUIRE(fast <= n * u);
  }
}

TEST_CASE("f_distribution reference values") {
  const FDistribution d = f_distribution(2, 8);
  CHECK(d.measure_by_k.at(1) == Rational(1, 16));
  CHECK(d.measure_by_k.at(4) == Rational(2, 16));
  CHECK(d.measure_by_k.at(5) == Rational(9, 40));
  CHECK(d.total() == Rational(1));

  const FDistribution d2 = f_distribution(4, 25);
  CHECK(d2.measure_by_k.at(1) == Rational(1, 100));
  for (int64_t k = 2; k <= 10; ++k)
    CHECK(d2.measure_by_k.at(k) == Rational(totient(k), 100));
  CHECK(d2.total() == Rational(1));

  // Stealing only shrinks a window: measure(k) <= |I(k)| = phi(k)/(nu).
  for (const auto& [k, m] : d2.measure_by_k)
    CHECK(m <= Rational(totient(k), 100));

  CHECK_THROWS_AS(f_distribution(1000, 1000), BudgetExceeded);
}

TEST_CASE("f_distribution equals the Farey-walk route") {
  for (auto [n, u] : std::vector<std::pair<int64_t, int64_t>>{
           {2, 8}, {4, 25}, {3, 33}, {8, 128}, {2, 600}}) {
    const FDistribution a = f_distribution(n, u);
    const FDistribution b = f_distribution_walk(n, u);
    REQUIRE(a.measure_by_k.size() == b.measure_by_k.size());
    for (const auto& [k, m] : a.measure_by_k) {
      REQUIRE(b.measure_by_k.count(k) == 1);
      REQUIRE(b.measure_by_k.at(k) == m);
    }
    REQUIRE(a.total() == Rational(1));
  }
}

TEST_CASE("f_distribution measures match interval-set measures of F(a) = k") {
  // Third route: integrate F pointwise over maximal constant segments by
  // scanning all window boundaries.
  const int64_t n = 2, u = 12, nu = 24;
  const FDistribution dist = f_distribution(n, u);
  std::vector<Rational> cuts;
  for (int64_t k = 1; k <= nu; ++k) {
    for (int64_t c : units(k)) {
      cuts.emplace_back(c, k);
      cuts.push_back(Rational(c, k) + Rational(1, nu));
    }
  }
  cuts.emplace_back(1);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::map<int64_t, Rational> seen;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i].sign() < 0 || cuts[i] >= Rational(1)) continue;
    const Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
    if (mid.sign() <= 0 || mid >= Rational(1)) continue;
    seen[effective_modulus_of(mid, n, u)] += cuts[i + 1] - cuts[i];
  }
  REQUIRE(seen.size() == dist.measure_by_k.size());
  for (const auto& [k, m] : dist.measure_by_k) REQUIRE(seen.at(k) == m);
}

TEST_CASE("crowding index") {
  CHECK(crowding_index(Rational(2, 5), 4) == 2);
  CHECK(crowding_index(Rational(1, 2), 3) == 2);
  CHECK(crowding_index(Rational(1, 20), 10) == 1);
  // g(a) <= n by pigeonhole, over a random sample.
  CounterRng rng(5, 0);
  for (int t = 0; t < 500; ++t) {
    const int64_t den = 2 + rng.below(5000);
    const int64_t num = 1 + rng.below(den - 1);
    const int64_t g = crowding_index(Rational(num, den), 16);
    REQUIRE(g >= 1);
    REQUIRE(g <= 16);
  }
}

TEST_CASE("crowding measures: Pr[g = k] <= 2/n and partition") {
  for (int64_t n : {8, 16, 32}) {
    const auto measures = crowding_measures(n);
    Rational total(0);
    for (const auto& [k, m] : measures) {
      CHECK(m <= Rational(2, n));
      total += m;
    }
    CHECK(total == Rational(1));
  }
}

TEST_CASE("residue injectivity") {
  // A singleton can never collide. (A two-element set always can: F(a) = 1
  // has positive probability, and everything is congruent mod 1.)
  const ItemSet single = ItemSet::from_values({5});
  CHECK(residue_injectivity_check(single, 4, 16, 50, 3) == 1.0);

  // Constructed collision: X = {0, k} collides exactly when F(a) divides k;
  // a = c/k itself forces F(a) = k for small k.
  const int64_t k = effective_modulus_of(Rational(1, 3), 2, 8);
  CHECK(k == 3);
  CHECK(mod_reduce(0, k) == mod_reduce(k, k));

  // Random set at the analyzed u = n^6 regime: fraction >= 1 - 1/n up to
  // Monte Carlo error. (u = n^4 measurably fails this bound.)
  const int64_t n = 16;
  const int64_t u = 16'777'216;  // n^6
  std::vector<int64_t> xs;
  CounterRng rng(77, 1);
  while (xs.size() < 16) {
    const int64_t v = rng.below(u);
    if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
  }
  const double frac =
      residue_injectivity_check(ItemSet::from_values(xs), n, u, 400, 9);
  CHECK(frac >= 1.0 - 1.0 / n - 4 * std::sqrt((1.0 / 16) * (15.0 / 16) / 400));
}
