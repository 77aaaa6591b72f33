#include <doctest.h>

#include <cmath>
#include <numeric>

#include "linhash/numtheory.hpp"

using namespace linhash;

namespace {

// Trial-division oracles, independent of the library's factorization path.
int64_t totient_brute(int64_t m) {
  int64_t c = 0;
  for (int64_t k = 1; k <= m; ++k) c += std::gcd(k, m) == 1 ? 1 : 0;
  return c;
}

std::vector<int64_t> divisor_count_table(int64_t limit) {
  std::vector<int64_t> d(static_cast<std::size_t>(limit) + 1, 0);
  for (int64_t i = 1; i <= limit; ++i)
    for (int64_t j = i; j <= limit; j += i) d[j] += 1;
  return d;
}

bool is_prime_trial(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("mod_reduce on integers") {
  CHECK(mod_reduce(-3, 7) == 4);
  CHECK(mod_reduce(14, 7) == 0);
  CHECK(mod_reduce(10, 7) == 3);
  CHECK_THROWS_AS(mod_reduce(5, 0), std::domain_error);
}

TEST_CASE("mod_reduce on rationals") {
  CHECK(mod_reduce(Rational(7, 5), 1) == Rational(2, 5));
  CHECK(mod_reduce(Rational(-1, 3), 1) == Rational(2, 3));
  CHECK(mod_reduce(Rational(9, 4), 2) == Rational(1, 4));
  CHECK(mod_reduce(Rational(-17, 4), 3) == Rational(7, 4));
}

TEST_CASE("signed_distance") {
  CHECK(signed_distance(5, 7) == 2);
  CHECK(signed_distance(3, 7) == 3);
  CHECK(signed_distance(0, 7) == 0);
  CHECK(signed_distance(-5, 7) == 2);
  CHECK(signed_distance(Rational(2, 5), 1) == Rational(2, 5));
  CHECK(signed_distance(Rational(4, 5), 1) == Rational(1, 5));
  CHECK(signed_distance(Rational(3), 1) == Rational(0));
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(1, 9) == 1);
  CHECK_THROWS_AS(mod_inverse(2, 4), NotAUnit);

  // a * a^{-1} == 1 for every unit of every modulus up to 10^4.
  for (int64_t m = 2; m <= 10'000; ++m) {
    for (int64_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      const int64_t inv = mod_inverse(a, m);
      REQUIRE(mod_reduce(inv * a, m) == 1);
    }
  }
}

TEST_CASE("totient and divisor counts match trial-division oracles") {
  CHECK(totient(12) == 4);
  CHECK(totient(7) == 6);
  CHECK(totient(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(7) == 2);
  CHECK(divisor_count(1) == 1);
  CHECK(divisors(12) == std::vector<int64_t>{1, 2, 3, 4, 6, 12});

  const int64_t limit = 100'000;
  const auto phi = totient_sieve(limit);
  const auto tau = divisor_count_table(limit);
  for (int64_t m = 1; m <= limit; ++m) {
    REQUIRE(totient(m) == phi[m]);  // trial division vs sieve
    REQUIRE(divisor_count(m) == tau[m]);
  }
  for (int64_t m = 1; m <= 3000; ++m) REQUIRE(phi[m] == totient_brute(m));
}

TEST_CASE("totient lower bound: m/(2 lg lg m) <= phi(m) for 16 <= m <= 1e5") {
  // Base-2 logs: with natural logs the bound already fails at m = 18
  // (phi = 6 < 8.48), so at this scale the fact only holds base-2.
  const auto phi = totient_sieve(100'000);
  for (int64_t m = 16; m <= 100'000; ++m) {
    const double lhs =
        static_cast<double>(m) / (2.0 * std::log2(std::log2(m)));
    REQUIRE(static_cast<double>(phi[m]) >= lhs);
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(2053));
  CHECK_FALSE(is_prime(1));
  CHECK(prime_in_range(100, 200) == 101);
  CHECK_FALSE(prime_in_range(24, 28).has_value());
  for (int64_t n = 0; n <= 20'000; ++n) REQUIRE(is_prime(n) == is_prime_trial(n));
  // A few larger spot checks against trial division.
  for (int64_t n : {1'073'741'825LL, 1'073'741'827LL, 2'147'483'647LL})
    REQUIRE(is_prime(static_cast<uint64_t>(n)) == is_prime_trial(n));
}

TEST_CASE("units") {
  CHECK(units(12) == std::vector<int64_t>{1, 5, 7, 11});
  CHECK(units(7) == std::vector<int64_t>{1, 2, 3, 4, 5, 6});
  CHECK(units(2) == std::vector<int64_t>{1});
  CHECK(units(1) == std::vector<int64_t>{0});
  for (int64_t m = 1; m <= 500; ++m)
    REQUIRE(static_cast<int64_t>(units(m).size()) == totient(m));
}

TEST_CASE("farey_sequence basics") {
  const auto f5 = farey_sequence(5);
  REQUIRE(f5.size() == 11);
  const std::vector<std::pair<int64_t, int64_t>> expected = {
      {0, 1}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2},
      {3, 5}, {2, 3}, {3, 4}, {4, 5}, {1, 1}};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(f5[i] == Rational(expected[i].first, expected[i].second));

  CHECK(farey_sequence(1).size() == 2);
  CHECK(farey_sequence(2).size() == 3);
  CHECK(farey_sequence(2)[1] == Rational(1, 2));
}

TEST_CASE("farey size and ordering invariants") {
  const auto phi = totient_sieve(300);
  for (int64_t m = 1; m <= 300; ++m) {
    int64_t expected_size = 1;
    for (int64_t k = 1; k <= m; ++k) expected_size += phi[k];
    int64_t count = 0;
    int64_t pc = -1, pk = 1;
    farey_walk(m, [&](int64_t c, int64_t k) {
      ++count;
      REQUIRE(std::gcd(c, k) == 1);
      REQUIRE(k <= m);
      if (count > 1) REQUIRE(c * pk > pc * k);  // strictly ascending
      pc = c;
      pk = k;
    });
    REQUIRE(count == expected_size);
  }
}

TEST_CASE("farey_successor") {
  CHECK(farey_successor(Rational(1, 3), 5) == Rational(2, 5));
  CHECK(farey_successor(Rational(0, 1), 5) == Rational(1, 5));
  CHECK(farey_successor(Rational(4, 5), 5) == Rational(1, 1));
  CHECK_THROWS_AS(farey_successor(Rational(1, 1), 5), NoSuccessor);
  CHECK_THROWS_AS(farey_successor(Rational(1, 7), 5), std::domain_error);

  // Successor agrees with the walk, and the gap is exactly 1/(k k').
  for (int64_t m : {1, 2, 3, 7, 30, 97, 120}) {
    Rational prev(-1);
    farey_walk(m, [&](int64_t c, int64_t k) {
      const Rational cur(c, k);
      if (prev.sign() >= 0) {
        REQUIRE(farey_successor(prev, m) == cur);
        REQUIRE(cur - prev == Rational(1, to_i64(prev.den()) * k));
      }
      prev = cur;
    });
  }
}

TEST_CASE("rational invariants") {
  CHECK(Rational(22, 8) == Rational(11, 4));
  CHECK(Rational(-22, 8).str() == "-11/4");
  CHECK(Rational(22, -8) == Rational(-11, 4));
  CHECK(Rational(3, 7) + Rational(4, 7) == Rational(1));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK((Rational(7, 2) / Rational(7)) == Rational(1, 2));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  std::vector<Rational> terms;
  for (int64_t k = 1; k <= 50; ++k) terms.emplace_back(1, k * (k + 1));
  CHECK(balanced_sum(terms) == Rational(50, 51));  // telescoping
}
