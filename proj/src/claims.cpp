#include "linhash/claims.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "linhash/adversarial.hpp"
#include "linhash/effective_modulus.hpp"
#include "linhash/families.hpp"
#include "linhash/maxload.hpp"
#include "linhash/numtheory.hpp"
#include "linhash/twobin.hpp"

namespace linhash {

namespace {

using Json = nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

/// Builder that turns a sequence of named checks into a ClaimReport.
struct Checker {
  ClaimReport report;
  bool all_ok = true;

  explicit Checker(std::string id) { report.claim_id = std::move(id); }

  void require(bool ok) { all_ok = all_ok && ok; }
  void measure(const std::string& name, const Rational& v) {
    report.measured.emplace_back(name, v.str());
  }
  void measure(const std::string& name, int64_t v) {
    report.measured.emplace_back(name, std::to_string(v));
  }
  void measure(const std::string& name, double v) {
    report.measured.emplace_back(name, fmt_double(v));
  }
  void measure(const std::string& name, const std::string& v) {
    report.measured.emplace_back(name, v);
  }

  ClaimReport finish(std::string bound, std::string regime = "") {
    report.bound = std::move(bound);
    report.regime_note = std::move(regime);
    report.status = all_ok ? ClaimReport::Status::Pass : ClaimReport::Status::Fail;
    return std::move(report);
  }
};

uint64_t claim_seed(uint64_t seed, const std::string& id) {
  uint64_t h = seed;
  for (char c : id) h = splitmix64(h ^ static_cast<unsigned char>(c));
  return h;
}

/// mu <= base + coeff * sqrt(radicand), all exact.
bool le_plus_root(const Rational& mu, const Rational& base, int64_t coeff,
                  int64_t radicand) {
  if (mu <= base) return true;
  const Rational excess = mu - base;
  return excess * excess <= Rational(coeff * coeff) * Rational(radicand);
}

ItemSet random_subset(int64_t n, int64_t universe, uint64_t seed) {
  SetRecipe r;
  r.kind = RecipeKind::Random;
  r.seed = seed;
  return generate(r, n, universe);
}

// --- individual claims -----------------------------------------------------

ClaimReport claim_blockZsucks(const Json& p, uint64_t) {
  const int64_t n = p.at("n"), k = p.at("k");
  const int64_t m = n * k;
  Checker c("blockZsucks");
  FamilyConfig cfg{FamilyKind::StridedInt, m, n, 0};
  SetRecipe recipe;
  recipe.kind = RecipeKind::Strided;
  recipe.stride = n;
  const ItemSet X = generate(recipe, n, m);
  int64_t lo = n, hi = 0;
  for (int64_t a = 1; a < m; ++a) {
    const int64_t v = maxload(X, cfg, HashParam{a, 0, 0});
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  c.require(lo == n && hi == n);
  c.measure("n", n);
  c.measure("m", m);
  c.measure("min_maxload", lo);
  c.measure("max_maxload", hi);
  return c.finish("strided maxload on n*[n] equals n for every multiplier");
}

ClaimReport claim_blockZisok(const Json& p, uint64_t seed) {
  Checker c("blockZisok");
  const int64_t m_min = p.at("modulus_min"), m_max = p.at("modulus_max");
  const int64_t n = p.at("set_size");
  const int64_t n_seeds = p.at("random_seeds");
  int64_t pairs_checked = 0;
  for (int64_t beta : p.at("bins")) {
    for (int64_t m = m_min; m <= m_max; ++m) {
      if (gcd64(m, beta) != 1) continue;
      std::vector<ItemSet> sets;
      SetRecipe interval;
      sets.push_back(generate(interval, n, m));
      SetRecipe strided;
      strided.kind = RecipeKind::Strided;
      strided.stride = 2;
      sets.push_back(generate(strided, n, m));
      for (int64_t s = 0; s < n_seeds; ++s)
        sets.push_back(random_subset(n, m, claim_seed(seed, "blockZisok") + s));

      FamilyConfig blocked{FamilyKind::BlockedInt, m, beta, 0};
      FamilyConfig strided_cfg{FamilyKind::StridedInt, m, beta, 0};
      for (const ItemSet& X : sets) {
        for (int64_t a = 1; a < m; ++a) {
          const int64_t mb = maxload(X, blocked, HashParam{a, 0, 0});
          const int64_t ms =
              maxload(X, strided_cfg, HashParam{mod_reduce(beta * a, m), 0, 0});
          c.require(mb <= 2 * ms && ms <= 2 * mb);
          ++pairs_checked;
        }
        const Rational eb = exact_expected_maxload(X, blocked).mean;
        const Rational es = exact_expected_maxload(X, strided_cfg).mean;
        c.require(eb <= Rational(2) * es && es <= Rational(2) * eb);
      }
    }
  }
  c.measure("pairs_checked", pairs_checked);
  return c.finish(
      "blocked(a) and strided(m_m(bins*a)) maxloads within a factor of 2, "
      "per multiplier and in expectation, for modulus coprime to bins");
}

ClaimReport claim_prGd(const Json& p, uint64_t) {
  Checker c("prGd");
  const int64_t m_max = p.at("modulus_max");
  const int64_t spot_max = p.at("spot_check_max");
  const std::vector<int64_t> phi = totient_sieve(m_max);
  int64_t checked = 0;
  for (int64_t m = 2; m <= m_max; ++m) {
    for (int64_t d : divisors(m)) {
      const int64_t count = d == m ? 0 : phi[m / d];
      c.require(Rational(count, m - 1) <= Rational(1, d));
      ++checked;
      if (m <= spot_max) {
        int64_t brute = 0;
        for (int64_t a = 1; a < m; ++a) brute += gcd64(a, m) == d ? 1 : 0;
        c.require(brute == count);
      }
    }
  }
  c.measure("divisor_pairs_checked", checked);
  return c.finish("Pr[gcd(a, m) = d] <= 1/d for every divisor d of m");
}

ClaimReport claim_slh_conditional(const Json& p, uint64_t seed) {
  Checker c("slh-conditional");
  const int64_t m = p.at("modulus");
  const int64_t beta = p.at("bins");
  const int64_t d_max = p.at("divisor_max");
  const int64_t subset = p.at("subset_size");
  const uint64_t base = claim_seed(seed + p.at("seed_offset").get<int64_t>(), "slh");
  for (int64_t d : divisors(m)) {
    if (d >= d_max) continue;
    const int64_t block = m / d;
    CounterRng rng(base, static_cast<uint64_t>(d));
    const int64_t i = rng.below(d);
    const int64_t size = std::min<int64_t>(subset, block);
    // Random subset of the block I_{i,d} = i*block + [block].
    std::vector<int64_t> offsets = random_subset(size, block, base + 1000 + d)
                                       .elements();
    std::vector<int64_t> xs(offsets);
    for (auto& x : xs) x += i * block;
    const ItemSet X = ItemSet::from_values(xs);
    const ItemSet X0 = ItemSet::from_values(offsets);  // translated set

    std::vector<int64_t> blocked_loads;
    FamilyConfig cfg{FamilyKind::BlockedInt, m, beta, 0};
    for (int64_t a = 1; a < m; ++a) {
      if (gcd64(a, m) == d) blocked_loads.push_back(maxload(X, cfg, HashParam{a, 0, 0}));
    }
    std::vector<int64_t> smart_loads;
    FamilyConfig smart{FamilyKind::SmartBlocked, block, beta, 0};
    for (int64_t a : units(block)) {
      if (a == 0) continue;
      smart_loads.push_back(maxload(X0, smart, HashParam{a, 0, 0}));
    }
    std::sort(blocked_loads.begin(), blocked_loads.end());
    std::sort(smart_loads.begin(), smart_loads.end());
    c.require(blocked_loads == smart_loads);
    c.measure("divisor_" + std::to_string(d) + "_params",
              static_cast<int64_t>(blocked_loads.size()));
  }
  return c.finish(
      "maxload multiset over {a : gcd(a, m) = d} equals the SmartBlocked "
      "multiset with modulus m/d on the translated block subset");
}

ClaimReport claim_linked_never(const Json& p, uint64_t) {
  Checker c("linked-never");
  const int64_t m_max = p.at("modulus_max");
  int64_t checked = 0;
  for (int64_t beta : p.at("bins")) {
    for (int64_t m = beta + 1; m <= m_max; ++m) {
      const int64_t thr = (m + beta - 1) / beta;  // ceil(m/bins)
      const std::vector<int64_t> us = units(m);
      for (int64_t delta = 1; delta < m; ++delta) {
        if (gcd64(delta, m) <= thr) continue;
        for (int64_t a : us) {
          const int64_t s = mod_reduce(a * delta, m);
          // Collision of some pair at difference delta would need two
          // residues at circular distance s inside one block of width
          // <= ceil(m/bins).
          const bool can_collide = std::min(s, m - s) <= thr - 1;
          c.require(!can_collide);
          if (m <= 60) {  // literal cross-check on small moduli
            FamilyConfig cfg{FamilyKind::SmartBlocked, m, beta, 0};
            for (int64_t x = 0; x + delta < m; ++x) {
              c.require(bin_of(x, HashParam{a, 0, 0}, cfg) !=
                        bin_of(x + delta, HashParam{a, 0, 0}, cfg));
            }
          }
          ++checked;
        }
      }
    }
  }
  c.measure("linked_cases_checked", checked);
  return c.finish("pairs with gcd(x - y, m) > ceil(m/bins) never share a bin");
}

ClaimReport claim_farey_dist(const Json& p, uint64_t) {
  Checker c("farey-dist");
  const int64_t m_max = p.at("order_max");
  // The reference F_5 listing.
  const std::vector<std::pair<int64_t, int64_t>> f5 = {
      {0, 1}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2},
      {3, 5}, {2, 3}, {3, 4}, {4, 5}, {1, 1}};
  const std::vector<FareyFraction> got = farey_sequence(5);
  c.require(got.size() == f5.size());
  for (std::size_t i = 0; i < f5.size() && i < got.size(); ++i)
    c.require(got[i] == Rational(f5[i].first, f5[i].second));

  int64_t adjacent_pairs = 0;
  for (int64_t m = 1; m <= m_max; ++m) {
    int64_t pc = -1, pk = -1;
    bool ok = true;
    farey_walk(m, [&](int64_t cc, int64_t kk) {
      if (pk > 0) {
        // |c/k - c'/k'| = 1/(k k') is exactly cross-difference 1.
        ok = ok && (cc * pk - pc * kk == 1);
        ++adjacent_pairs;
      }
      pc = cc;
      pk = kk;
    });
    c.require(ok);
  }
  c.measure("adjacent_pairs", adjacent_pairs);
  return c.finish("adjacent Farey fractions differ by exactly 1/(k*k')");
}

ClaimReport claim_farey_neighbors(const Json& p, uint64_t) {
  Checker c("farey-neighbors");
  const int64_t m_max = p.at("order_max");
  for (int64_t m = 2; m <= m_max; ++m) {
    std::vector<int64_t> succ_dens;
    int64_t prev_den = 0;
    farey_walk(m, [&](int64_t, int64_t kk) {
      if (prev_den == m) succ_dens.push_back(kk);
      prev_den = kk;
    });
    std::sort(succ_dens.begin(), succ_dens.end());
    std::vector<int64_t> expected = units(m);  // denominators coprime to m
    c.require(succ_dens == expected);
  }
  c.measure("orders_checked", m_max - 1);
  return c.finish(
      "successors of m-fractions in F_m hit each denominator coprime to m "
      "exactly once and no other denominator");
}

ClaimReport claim_fdist_exact(const Json& p, uint64_t) {
  Checker c("fdist-exact");
  for (const auto& pair : p.at("pairs")) {
    const int64_t n = pair[0], u = pair[1];
    const int64_t nu = n * u;
    const FDistribution dist = f_distribution(n, u);
    int64_t root = 1;
    while ((root + 1) * (root + 1) <= nu) ++root;
    for (int64_t k = 1; k <= root; ++k) {
      const auto it = dist.measure_by_k.find(k);
      c.require(it != dist.measure_by_k.end() &&
                it->second == Rational(k == 1 ? 1 : totient(k), nu));
    }
    const Rational total = dist.total();
    c.require(total == Rational(1));
    c.measure("nu_" + std::to_string(nu) + "_total", total);
  }
  return c.finish(
      "Pr[F(a) = k] = phi(k)/(nu) for k <= floor(sqrt(nu)); measures sum to 1",
      "nu far below the analyzed n^7 scale");
}

ClaimReport claim_fdist_upper(const Json& p, uint64_t) {
  Checker c("fdist-upper");
  const int64_t bound_c = p.at("c");
  for (int64_t nu : p.at("nu")) {
    const FDistribution dist = f_distribution(2, nu / 2);
    const Rational mx = dist.max_measure();
    // mx <= c / sqrt(nu)  <=>  mx^2 * nu <= c^2.
    c.require(mx * mx * Rational(nu) <= Rational(bound_c * bound_c));
    c.require(dist.total() == Rational(1));
    c.measure("nu_" + std::to_string(nu) + "_max", mx);
  }
  return c.finish("max_k Pr[F(a) = k] <= 4/sqrt(nu)",
                  "constant 4 is an empirical fit; the bound is O(1/sqrt(nu))");
}

ClaimReport claim_restrictQ(const Json& p, uint64_t) {
  Checker c("restrictQ");
  const int64_t u = p.at("universe");
  const int64_t k_max = p.at("k_max");
  int64_t checked = 0;
  for (int64_t beta : p.at("bins")) {
    for (int64_t k = 1; k <= k_max; ++k) {
      for (int64_t cc : units(k)) {
        const Rational mult(cc, k);
        for (int64_t x = 0; x < u; ++x) {
          c.require(bin_real_rational(x, mult, beta) ==
                    bin_blocked_raw(x, cc, k, beta));
          ++checked;
        }
      }
    }
  }
  c.measure("evaluations", checked);
  return c.finish(
      "real blocked hashing at multiplier c/k places every x exactly as "
      "SmartBlocked with modulus k and multiplier c");
}

ClaimReport claim_approxepx(const Json& p, uint64_t) {
  Checker c("approxepx");
  const int64_t beta = p.at("bins");
  const int64_t u = p.at("universe");
  const int64_t grid = p.at("eps_grid");
  const int64_t nu = beta * u;
  int64_t checked = 0;
  for (int64_t k = 1; k <= nu; ++k) {
    for (int64_t cc : units(k)) {
      const Rational base(cc, k);
      for (int64_t j = 0; j < grid; ++j) {
        const Rational eps(j, nu * grid);
        const Rational shifted = base + eps;
        for (int64_t x = 0; x < u; ++x) {
          const int64_t b0 = bin_real_rational(x, base, beta);
          const int64_t b1 = bin_real_rational(x, shifted, beta);
          c.require(b1 == b0 || b1 == mod_reduce(b0 + 1, beta));
          ++checked;
        }
      }
    }
  }
  c.measure("evaluations", checked);
  return c.finish(
      "multiplier c/k + eps with 0 <= eps < 1/(nu) lands every item in the "
      "same or the cyclically next bin");
}

ClaimReport claim_nothing_collides(const Json& p, uint64_t seed) {
  Checker c("nothing-collides");
  const int64_t n = p.at("n");
  const int64_t trials = p.at("trials");
  const double sigma = p.at("sigma");
  const int64_t exponent = p.at("u_exponent");
  int64_t u = 1;
  for (int64_t i = 0; i < exponent; ++i) u *= n;
  const ItemSet X =
      random_subset(n, u, claim_seed(seed, "nothing-collides") +
                              p.at("set_seed").get<int64_t>());
  const double frac =
      residue_injectivity_check(X, n, u, trials, claim_seed(seed, "nc-trials"));
  const double target = 1.0 - 1.0 / static_cast<double>(n);
  const double stderr_bound =
      std::sqrt(target * (1 - target) / static_cast<double>(trials));
  c.require(frac >= target - sigma * stderr_bound);
  c.measure("u", u);
  c.measure("fraction_injective", frac);
  c.measure("target", target);
  return c.finish("all residues distinct mod F(a) with probability >= 1 - 1/n",
                  "u = n^6, the analyzed regime, but n = 16 is small");
}

ClaimReport claim_collide_1_3(const Json& p, uint64_t) {
  Checker c("collide-1-3");
  const int64_t exact_p = p.at("exact_p");
  FamilyConfig cfg{FamilyKind::TwoBinMult, exact_p, 2, 0};
  const Rational prob = pair_collision_prob(1, 3, cfg);
  c.require(prob == Rational(2, 3));
  c.measure("p7_prob", prob);
  const Rational lo(p.at("low")[0].get<int64_t>(), p.at("low")[1].get<int64_t>());
  const Rational hi(p.at("high")[0].get<int64_t>(), p.at("high")[1].get<int64_t>());
  for (int64_t pp : p.at("approx_p")) {
    FamilyConfig c2{FamilyKind::TwoBinMult, pp, 2, 0};
    const Rational pr = pair_collision_prob(1, 3, c2);
    c.require(pr >= lo && pr <= hi);
    c.measure("p" + std::to_string(pp) + "_prob", pr);
  }
  return c.finish("Pr[1 and 3 collide] = 2/3 at p = 7; within [0.6, 0.7] beyond");
}

ClaimReport claim_pigeons(const Json& p, uint64_t) {
  Checker c("pigeons");
  int64_t checked = 0;
  for (int64_t prime : p.at("primes")) {
    for (int64_t n : p.at("ns")) {
      for (int64_t x = 1; x < prime; ++x) {
        const PigeonRep rep = pigeon_rep(x, prime, n);
        c.require(rep.m >= 1 && rep.m < n);
        c.require(rep.k >= 1 && rep.k * n <= prime);  // k <= p/n
        c.require(pigeon_value(rep, prime) == x);
        ++checked;
      }
    }
  }
  c.measure("representations_checked", checked);
  return c.finish("x = m_p(sigma * m^{-1} * k) with m in [n], k in [ceil(p/n)]");
}

ClaimReport claim_epicbound(const Json& p, uint64_t) {
  Checker c("epicbound");
  const int64_t bound_c = p.at("c");
  auto max_ratio = [&](int64_t prime, bool hard) {
    const int64_t n =
        static_cast<int64_t>(std::ceil(std::cbrt(static_cast<double>(prime))));
    double worst = 0;
    for (int64_t x = 1; x < prime; ++x) {
      const Rational e = excess_overlap(x, prime);
      if (e.sign() <= 0) continue;
      const PigeonRep rep = pigeon_rep(x, prime, std::max<int64_t>(n, 2));
      const Rational rhs = epicbound_rhs(rep.m, rep.k, prime);
      if (hard) c.require(e <= Rational(bound_c) * rhs);
      worst = std::max(worst, (e / rhs).to_double());
    }
    return worst;
  };
  for (int64_t prime : p.at("assert_primes"))
    c.measure("p" + std::to_string(prime) + "_max_ratio", max_ratio(prime, true));
  const int64_t report_p = p.at("report_prime");
  c.measure("p" + std::to_string(report_p) + "_max_ratio_reported",
            max_ratio(report_p, false));
  return c.finish("e(x) <= 16 * (k + (m + p/(mk)) * gcd(k, m))",
                  "constant 16 is a registry fit; largest prime reported only");
}

ClaimReport claim_sum_excess(const Json& p, uint64_t) {
  Checker c("sum-excess");
  const int64_t prime = p.at("p");
  const int64_t n = p.at("n");
  const int64_t bound_c = p.at("c");
  SetRecipe interval;
  interval.start = 1;
  const ItemSet X = generate(interval, n, prime);
  const OverlapReport report = sum_excess(X, prime);
  // Registry form: sum e(x) <= c * p * (log2 n)^3 / n, exact for n a power of 2.
  int64_t log2n = 0;
  while ((int64_t{1} << (log2n + 1)) <= n) ++log2n;
  const Rational rhs =
      Rational(bound_c * prime) * Rational(log2n * log2n * log2n, n);
  c.require(report.total_excess <= rhs);
  c.measure("total_excess", report.total_excess);
  c.measure("bound_rhs", rhs);
  return c.finish("sum of e(x) over [1, n] <= 16 * p * (log2 n)^3 / n",
                  "slack form of the ~O(p) bound; p far below n^6");
}

ClaimReport claim_dontneedb(const Json& p, uint64_t seed) {
  Checker c("dontneedb");
  const int64_t prime = p.at("p");
  const int64_t n = p.at("n");
  const int64_t bound_c = p.at("c");
  FamilyConfig cfg{FamilyKind::TwoBinMult, prime, 2, 0};
  std::vector<std::pair<std::string, ItemSet>> sets;
  SetRecipe interval;
  sets.emplace_back("interval", generate(interval, n, prime));
  SetRecipe strided;
  strided.kind = RecipeKind::Strided;
  strided.stride = p.at("strided_stride");
  sets.emplace_back("strided", generate(strided, n, prime));
  for (int64_t s : p.at("random_seeds")) {
    sets.emplace_back("random" + std::to_string(s),
                      random_subset(n, prime, claim_seed(seed, "dontneedb") + s));
  }
  for (const auto& [name, X] : sets) {
    const Rational mean = exact_expected_maxload(X, cfg).mean;
    c.require(le_plus_root(mean, Rational(n, 2), bound_c, n));
    c.measure(name + "_mean", mean);
  }
  return c.finish("E[maxload] <= n/2 + 5*sqrt(n) for two-bin multiplicative hashing",
                  "constant 5 stands in for the ~O(sqrt(n)) factor");
}

ClaimReport claim_pairwise_2bin(const Json& p, uint64_t) {
  Checker c("pairwise-2bin");
  const int64_t prime = p.at("p");
  const int64_t n = p.at("n");
  FamilyConfig cfg{FamilyKind::TwoBinAffine, prime, 2, 0};
  std::vector<std::pair<std::string, ItemSet>> sets;
  SetRecipe interval;
  sets.emplace_back("interval", generate(interval, n, prime));
  SetRecipe arithmetic;
  arithmetic.kind = RecipeKind::Arithmetic;
  arithmetic.step = p.at("arithmetic_step");
  sets.emplace_back("arithmetic", generate(arithmetic, n, prime));
  SetRecipe strided;
  strided.kind = RecipeKind::Strided;
  strided.stride = p.at("strided_stride");
  sets.emplace_back("strided", generate(strided, n, prime));
  // Every pair collides with probability exactly (p-1)/(2p): the lower half
  // of [p] holds one more residue than the upper half, so the idealized 1/2
  // of the balanced-bins picture is approached from below.
  const Rational expected_c =
      Rational(n * (n - 1), 2) * Rational(prime - 1, 2 * prime);
  for (const auto& [name, X] : sets) {
    const CollisionStats stats = expected_collisions(X, cfg);
    c.require(stats.expected_collisions == expected_c);
    c.require(stats.expected_collisions <= Rational(n * (n - 1), 4));
    const Rational mean = exact_expected_maxload(X, cfg).mean;
    // mean <= n/2 + sqrt(n/2): square the excess against n/2.
    bool ok = mean <= Rational(n, 2);
    if (!ok) {
      const Rational ex = mean - Rational(n, 2);
      ok = ex * ex <= Rational(n, 2);
    }
    c.require(ok);
    c.measure(name + "_collisions", stats.expected_collisions);
    c.measure(name + "_mean", mean);
  }
  return c.finish(
      "E[C] = C(n,2)(p-1)/(2p) exactly (<= C(n,2)/2) and E[maxload] <= n/2 + "
      "sqrt(n/2)",
      "p = 101 far below the analyzed n^6 regime; the displayed C(n,2)/2 is "
      "the balanced-halves idealization, unattainable for odd p");
}

ClaimReport claim_nisnice(const Json& p, uint64_t seed) {
  Checker c("nisnice");
  const int64_t samples = p.at("samples");
  const int64_t mean_max = p.at("mean_max");
  const double growth_max = p.at("growth_max");
  std::map<int64_t, Rational> means;
  for (int64_t n : p.at("ns")) {
    FamilyConfig cfg{FamilyKind::RealBlocked, n, n, default_real_denominator(n, n)};
    std::vector<int64_t> xs(static_cast<std::size_t>(n));
    for (int64_t i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = i;
    const ItemSet X = ItemSet::from_values(xs);
    const MaxloadDistribution dist =
        mc_expected_maxload(X, cfg, samples, claim_seed(seed, "nisnice") + n);
    c.require(dist.mean <= Rational(mean_max));
    means[n] = dist.mean;
    c.measure("n" + std::to_string(n) + "_mean", dist.mean);
  }
  const Rational first = means.begin()->second;
  const Rational last = means.rbegin()->second;
  c.require(last.to_double() <= growth_max * first.to_double());
  return c.finish("MC mean maxload of real hashing on [n] stays <= 8 and grows "
                  "< 25% across n",
                  "u = n; the claim is Theta(1) for u >= n^6");
}

ClaimReport claim_proffak(const Json& p, uint64_t) {
  Checker c("proffak");
  for (int64_t n : p.at("ns")) {
    const auto measures = crowding_measures(n);
    const Rational bound(2, n);
    Rational total(0);
    for (const auto& [k, m] : measures) {
      c.require(m <= bound);
      total += m;
    }
    c.require(total == Rational(1));
    c.measure("n" + std::to_string(n) + "_total", total);
  }
  return c.finish("Pr[g(a) = k] <= 2/n for every k <= n; measures partition (0,1)");
}

ClaimReport claim_random_inputs(const Json& p, uint64_t seed) {
  Checker c("random-inputs");
  const int64_t n = p.at("n");
  const int64_t trials = p.at("trials");
  const int64_t bound_c = p.at("c");
  int64_t m = n * n * n;
  if (m % 2 == 0) ++m;
  while (is_prime(static_cast<uint64_t>(m))) m += 2;  // smallest odd composite
  FamilyConfig cfg{FamilyKind::SmartBlocked, m, n, 0};
  int64_t total = 0;
  for (int64_t t = 0; t < trials; ++t) {
    const uint64_t ts = claim_seed(seed, "random-inputs") + static_cast<uint64_t>(t);
    const ItemSet X = random_subset(n, m, ts);
    CounterRng rng(ts, 0xabcdef);
    const HashParam param = sample_param(cfg, rng);
    total += maxload(X, cfg, param);
  }
  const double mean = static_cast<double>(total) / static_cast<double>(trials);
  const double bound = static_cast<double>(bound_c) * std::log(static_cast<double>(n)) /
                       std::log(std::log(static_cast<double>(n)));
  c.require(mean <= bound);
  c.measure("m", m);
  c.measure("mean_maxload", mean);
  c.measure("bound", bound);
  return c.finish("mean maxload on random inputs <= 3 * ln n / ln ln n",
                  "m ~ n^3, below the analyzed m >= n^6 regime");
}

ClaimReport claim_close_pairs(const Json& p, uint64_t seed) {
  Checker c("close-pairs");
  const int64_t n = p.at("n");
  const int64_t bound_c = p.at("c");
  for (int64_t m : p.at("moduli")) {
    const ItemSet X = random_subset(
        n, m, claim_seed(seed, "close-pairs") + p.at("set_seed").get<int64_t>());
    for (int64_t alpha : p.at("alphas")) {
      BigInt total = 0;
      int64_t count = 0;
      for (int64_t a = 1; a < m; ++a) {
        if (gcd64(a, m) != 1) continue;
        total += close_pairs(X, m, a, alpha);
        ++count;
      }
      const Rational mean(total, big(count));
      const double bound = static_cast<double>(bound_c) *
                           static_cast<double>(n) / static_cast<double>(alpha) *
                           std::log(std::log(static_cast<double>(m)));
      c.require(mean.to_double() <= bound);
      c.measure("m" + std::to_string(m) + "_alpha" + std::to_string(alpha) +
                    "_mean",
                mean);
    }
  }
  return c.finish("mean close-pair count over units <= 4 * (n/alpha) * lnln m",
                  "constant 4 is a registry fit for the O(n/alpha loglog n) claim");
}

ClaimReport claim_zm13(const Json& p, uint64_t seed) {
  Checker c("zm13-consistency");
  const int64_t budget = p.at("search_budget");
  const int64_t bound_c = p.at("c");
  for (int64_t n : p.at("ns")) {
    const int64_t m = *prime_in_range(n * n * n, 2 * n * n * n);
    FamilyConfig cfg{FamilyKind::SmartBlocked, m, n, 0};
    SetRecipe interval;
    const ItemSet init = generate(interval, n, m);
    SearchOptions opts;
    opts.exact_eval_budget = 200'000;
    opts.mc_trials = 1024;
    const SearchResult result = local_search_worst(
        init, cfg, budget, claim_seed(seed, "zm13") + n, opts);
    // Final score re-measured exactly when affordable.
    Rational score = result.score;
    const auto exact_cost =
        static_cast<unsigned __int128>(param_space(cfg).size()) *
        static_cast<uint64_t>(n);
    if (exact_cost <= 50'000'000)
      score = exact_expected_maxload(result.best, cfg).mean;
    const double bound = static_cast<double>(bound_c) *
                         std::cbrt(static_cast<double>(n)) *
                         std::log2(static_cast<double>(n));
    c.require(score.to_double() <= bound);
    c.measure("n" + std::to_string(n) + "_score", score);
    c.measure("n" + std::to_string(n) + "_bound", bound);
  }
  return c.finish("searched worst-set maxload <= 10 * n^(1/3) * log2 n",
                  "upper-bound sanity check only; desk-scale search cannot "
                  "certify tightness");
}

using ClaimFn = ClaimReport (*)(const Json&, uint64_t);

struct ClaimEntry {
  const char* id;
  ClaimFn fn;
};

constexpr ClaimEntry kClaims[] = {
    {"blockZsucks", claim_blockZsucks},
    {"blockZisok", claim_blockZisok},
    {"prGd", claim_prGd},
    {"slh-conditional", claim_slh_conditional},
    {"linked-never", claim_linked_never},
    {"farey-dist", claim_farey_dist},
    {"farey-neighbors", claim_farey_neighbors},
    {"fdist-exact", claim_fdist_exact},
    {"fdist-upper", claim_fdist_upper},
    {"restrictQ", claim_restrictQ},
    {"approxepx", claim_approxepx},
    {"nothing-collides", claim_nothing_collides},
    {"collide-1-3", claim_collide_1_3},
    {"pigeons", claim_pigeons},
    {"epicbound", claim_epicbound},
    {"sum-excess", claim_sum_excess},
    {"dontneedb", claim_dontneedb},
    {"pairwise-2bin", claim_pairwise_2bin},
    {"nisnice", claim_nisnice},
    {"proffak", claim_proffak},
    {"random-inputs", claim_random_inputs},
    {"close-pairs", claim_close_pairs},
    {"zm13-consistency", claim_zm13},
};

}  // namespace

const char* claim_status_name(ClaimReport::Status status) {
  switch (status) {
    case ClaimReport::Status::Pass:
      return "pass";
    case ClaimReport::Status::Fail:
      return "fail";
    case ClaimReport::Status::Skipped:
      return "skipped";
  }
  return "unknown";
}

nlohmann::ordered_json ClaimReport::to_json() const {
  nlohmann::ordered_json measured_json = nlohmann::ordered_json::array();
  for (const auto& [name, value] : measured)
    measured_json.push_back({{"name", name}, {"value", value}});
  return nlohmann::ordered_json{{"schema", 1},
                                {"claim_id", claim_id},
                                {"status", claim_status_name(status)},
                                {"measured", measured_json},
                                {"bound", bound},
                                {"regime_note", regime_note}};
}

ClaimRegistry::ClaimRegistry()
    : ClaimRegistry(Json::parse(detail::embedded_claims_config(), nullptr, true,
                                /*ignore_comments=*/true)) {}

ClaimRegistry::ClaimRegistry(nlohmann::json config) : config_(std::move(config)) {
  for (const auto& entry : kClaims) ids_.emplace_back(entry.id);
}

ClaimRegistry ClaimRegistry::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open registry config: " + path);
  return ClaimRegistry(Json::parse(in, nullptr, true, /*ignore_comments=*/true));
}

bool ClaimRegistry::has(const std::string& id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

ClaimReport ClaimRegistry::verify(const std::string& id, uint64_t seed) const {
  for (const auto& entry : kClaims) {
    if (id == entry.id) {
      if (!config_.contains(id))
        throw std::runtime_error("registry config missing parameters for " + id);
      return entry.fn(config_.at(id), seed);
    }
  }
  throw std::domain_error("unknown claim id: " + id);
}

std::vector<ClaimReport> ClaimRegistry::verify_all(uint64_t seed) const {
  std::vector<ClaimReport> reports;
  reports.reserve(ids_.size());
  for (const auto& id : ids_) reports.push_back(verify(id, seed));
  return reports;
}

}  // namespace linhash
