#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "linhash/families.hpp"
#include "linhash/maxload.hpp"
#include "linhash/serialize.hpp"

using namespace linhash;

TEST_CASE("blocked bin map") {
  FamilyConfig cfg{FamilyKind::BlockedInt, 7, 2, 0};
  CHECK(bin_of(3, HashParam{1, 0, 0}, cfg) == 0);
  CHECK(bin_of(3, HashParam{2, 0, 0}, cfg) == 1);  // m_7(6)=6, floor(12/7)=1
  CHECK(bin_of(0, HashParam{4, 0, 0}, cfg) == 0);
  CHECK_THROWS_AS(bin_of(3, HashParam{0, 0, 0}, cfg), std::domain_error);
  CHECK_THROWS_AS(bin_of(9, HashParam{1, 0, 0}, cfg), std::domain_error);
}

TEST_CASE("strided bin map") {
  FamilyConfig cfg{FamilyKind::StridedInt, 12, 3, 0};
  CHECK(bin_of(5, HashParam{1, 0, 0}, cfg) == 2);
  CHECK(bin_of(7, HashParam{5, 0, 0}, cfg) == 2);  // m_3(m_12(35)) = m_3(11)
  // The n*[n] set always lands in bin 0: x multiples of 3, m multiple of 3.
  for (int64_t a = 1; a < 12; ++a) {
    for (int64_t x : {0, 3, 6}) CHECK(bin_of(x, HashParam{a, 0, 0}, cfg) == 0);
  }
}

TEST_CASE("affine two-bin map") {
  FamilyConfig cfg{FamilyKind::TwoBinAffine, 7, 2, 0};
  CHECK(bin_of(1, HashParam{1, 0, 0}, cfg) == 0);
  CHECK(bin_of(1, HashParam{4, 0, 0}, cfg) == 1);
  CHECK(bin_of(2, HashParam{3, 1, 0}, cfg) == 0);  // m_7(7) = 0
  CHECK_THROWS_AS(bin_of(1, HashParam{0, 0, 0}, cfg), std::domain_error);
}

TEST_CASE("real bin map") {
  // a/N = 1/2, x = 1, two bins: lands in the upper bin.
  CHECK(bin_real_grid_raw(1, 8, 16, 2) == 1);
  CHECK(bin_real_rational(1, Rational(1, 2), 2) == 1);
  CHECK(bin_real_rational(2, Rational(1, 3), 4) == 2);  // floor((2/3)*4)
  // Grid and rational paths agree where the grid can express the multiplier.
  for (int64_t a = 1; a < 48; ++a) {
    for (int64_t x = 0; x < 20; ++x)
      CHECK(bin_real_grid_raw(x, a, 48, 4) == bin_real_rational(x, Rational(a, 48), 4));
  }
}

TEST_CASE("family config validation") {
  CHECK_THROWS_AS((FamilyConfig{FamilyKind::BlockedInt, 7, 1, 0}.validate()),
                  std::domain_error);
  CHECK_THROWS_AS((FamilyConfig{FamilyKind::BlockedInt, 3, 4, 0}.validate()),
                  std::domain_error);
  CHECK_THROWS_AS((FamilyConfig{FamilyKind::TwoBinMult, 8, 2, 0}.validate()),
                  std::domain_error);  // composite
  CHECK_THROWS_AS((FamilyConfig{FamilyKind::TwoBinMult, 7, 3, 0}.validate()),
                  std::domain_error);  // three bins
  CHECK_THROWS_AS((FamilyConfig{FamilyKind::RealBlocked, 16, 4, 32}.validate()),
                  std::domain_error);  // N < bins * universe
  CHECK_NOTHROW((FamilyConfig{FamilyKind::RealBlocked, 16, 4, 64}.validate()));
  CHECK_THROWS_AS(
      (FamilyConfig{FamilyKind::BlockedInt, (int64_t{1} << 31) + 1, 4, 0}.validate()),
      std::domain_error);
}

TEST_CASE("param space sizes") {
  CHECK(param_space({FamilyKind::SmartBlocked, 12, 3, 0}).size() == 4);
  CHECK(param_space({FamilyKind::TwoBinMult, 7, 2, 0}).size() == 6);
  CHECK(param_space({FamilyKind::TwoBinAffine, 7, 2, 0}).size() == 42);
  CHECK(param_space({FamilyKind::RandomModulus, 10, 2, 0}).size() == 26);
  CHECK(param_space({FamilyKind::RealBlocked, 16, 4, 64}).size() == 63);

  // Iteration yields exactly size() valid params.
  for (FamilyConfig cfg :
       {FamilyConfig{FamilyKind::SmartBlocked, 60, 4, 0},
        FamilyConfig{FamilyKind::RandomModulus, 24, 3, 0},
        FamilyConfig{FamilyKind::TwoBinAffine, 11, 2, 0}}) {
    const ParamSpace space(cfg);
    uint64_t count = 0;
    space.for_each([&](const HashParam& p) {
      CHECK_NOTHROW(validate_param(cfg, p));
      ++count;
    });
    CHECK(count == space.size());
  }
}

TEST_CASE("param weights sum to one") {
  for (FamilyConfig cfg :
       {FamilyConfig{FamilyKind::SmartBlocked, 36, 4, 0},
        FamilyConfig{FamilyKind::RandomModulus, 12, 2, 0}}) {
    const ParamSpace space(cfg);
    Rational total(0);
    space.for_each([&](const HashParam& p) { total += space.weight(p); });
    CHECK(total == Rational(1));
  }
}

TEST_CASE("sample_param determinism and support") {
  FamilyConfig cfg{FamilyKind::SmartBlocked, 12, 3, 0};
  CounterRng r1(42, 7), r2(42, 7);
  const HashParam p1 = sample_param(cfg, r1);
  const HashParam p2 = sample_param(cfg, r2);
  CHECK(p1 == p2);
  CHECK(gcd64(p1.a, 12) == 1);
}

TEST_CASE("sample_param uniformity (chi-square style, 4 sigma)") {
  FamilyConfig cfg{FamilyKind::SmartBlocked, 7, 2, 0};
  std::map<int64_t, int64_t> counts;
  const int64_t trials = 6000;
  for (int64_t t = 0; t < trials; ++t) {
    CounterRng rng(123, static_cast<uint64_t>(t));
    counts[sample_param(cfg, rng).a] += 1;
  }
  CHECK(counts.size() == 6);
  const double expect = 1000.0;
  const double sigma = std::sqrt(trials * (1.0 / 6) * (5.0 / 6));
  for (const auto& [a, c] : counts)
    CHECK(std::abs(static_cast<double>(c) - expect) <= 4 * sigma);
}

TEST_CASE("random-modulus k marginal is uniform (4 sigma)") {
  FamilyConfig cfg{FamilyKind::RandomModulus, 10, 2, 0};
  std::map<int64_t, int64_t> counts;
  const int64_t trials = 6000;
  for (int64_t t = 0; t < trials; ++t) {
    CounterRng rng(99, static_cast<uint64_t>(t));
    counts[sample_param(cfg, rng).inner_modulus] += 1;
  }
  CHECK(counts.size() == 6);  // k in {5..10}
  const double expect = 1000.0;
  const double sigma = std::sqrt(trials * (1.0 / 6) * (5.0 / 6));
  for (const auto& [k, c] : counts)
    CHECK(std::abs(static_cast<double>(c) - expect) <= 4 * sigma);
}

TEST_CASE("bins always land in [0, beta)") {
  for (FamilyConfig cfg :
       {FamilyConfig{FamilyKind::BlockedInt, 37, 5, 0},
        FamilyConfig{FamilyKind::StridedInt, 36, 5, 0},
        FamilyConfig{FamilyKind::SmartBlocked, 36, 6, 0},
        FamilyConfig{FamilyKind::RandomModulus, 20, 4, 0},
        FamilyConfig{FamilyKind::RealBlocked, 16, 4, 128},
        FamilyConfig{FamilyKind::TwoBinMult, 13, 2, 0},
        FamilyConfig{FamilyKind::TwoBinAffine, 13, 2, 0}}) {
    const ParamSpace space(cfg);
    space.for_each([&](const HashParam& p) {
      for (int64_t x = 0; x < cfg.modulus; ++x) {
        const int64_t b = bin_of_unchecked(x, p, cfg);
        REQUIRE(b >= 0);
        REQUIRE(b < cfg.bins);
      }
    });
  }
}

TEST_CASE("strided hashing degenerates on n*[n] for m = (n+1)n, n <= 8") {
  for (int64_t n = 2; n <= 8; ++n) {
    const int64_t m = (n + 1) * n;
    FamilyConfig cfg{FamilyKind::StridedInt, m, n, 0};
    std::vector<int64_t> xs;
    for (int64_t i = 0; i < n; ++i) xs.push_back(i * n);
    const ItemSet X = ItemSet::from_values(xs);
    for (int64_t a = 1; a < m; ++a)
      REQUIRE(maxload(X, cfg, HashParam{a, 0, 0}) == n);
  }
}

TEST_CASE("blocked/strided pairing stays within a factor of two") {
  // The equivalence mechanism: blocked under a and strided under m_m(beta*a)
  // have maxloads within a factor of 2, exhaustively on a small grid.
  const std::vector<int64_t> interval = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  for (int64_t beta : {3, 4}) {
    for (int64_t m = 33; m <= 200; m += 7) {
      if (gcd64(m, beta) != 1) continue;
      const ItemSet X = ItemSet::from_values(interval);
      FamilyConfig blocked{FamilyKind::BlockedInt, m, beta, 0};
      FamilyConfig strided{FamilyKind::StridedInt, m, beta, 0};
      for (int64_t a = 1; a < m; ++a) {
        const int64_t mb = maxload(X, blocked, HashParam{a, 0, 0});
        const int64_t ms =
            maxload(X, strided, HashParam{mod_reduce(beta * a, m), 0, 0});
        REQUIRE(mb <= 2 * ms);
        REQUIRE(ms <= 2 * mb);
      }
    }
  }
}

TEST_CASE("real multiplier c/k equals SmartBlocked mod k (restrictQ mechanism)") {
  for (int64_t k = 1; k <= 24; ++k) {
    for (int64_t c : units(k)) {
      for (int64_t x = 0; x < 64; ++x) {
        REQUIRE(bin_real_rational(x, Rational(c, k), 4) ==
                bin_blocked_raw(x, c, k, 4));
      }
    }
  }
}

TEST_CASE("family config JSON round trip") {
  FamilyConfig cfg{FamilyKind::RealBlocked, 16, 4, 128};
  const Json j = to_json(cfg);
  CHECK(j.at("kind") == "real-blocked");
  CHECK(j.at("modulus") == 16);
  CHECK(j.at("bins") == 4);
  CHECK(j.at("real_denominator") == 128);
  const FamilyConfig back = family_config_from_json(j);
  CHECK(back.kind == cfg.kind);
  CHECK(back.modulus == cfg.modulus);
  CHECK(back.bins == cfg.bins);
  CHECK(back.real_denominator == cfg.real_denominator);
  CHECK_THROWS(family_config_from_json(Json{{"kind", "nope"}, {"modulus", 7}, {"bins", 2}}));
}

TEST_CASE("item set validation") {
  CHECK_THROWS_AS(ItemSet::from_values({1, 1, 2}), std::domain_error);
  CHECK_THROWS_AS(ItemSet::from_values({-1, 2}), std::domain_error);
  const ItemSet s = ItemSet::from_values({5, 1, 3});
  CHECK(s.elements() == std::vector<int64_t>{1, 3, 5});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
}
