#include "linhash/maxload.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace linhash {

namespace {

void check_items(const ItemSet& X, const FamilyConfig& cfg) {
  if (!X.empty() && X.max_element() >= cfg.modulus)
    throw std::domain_error("item set: element outside the universe");
}

int64_t max_run(std::vector<int64_t>& bins) {
  std::sort(bins.begin(), bins.end());
  int64_t best = 0, run = 0;
  for (std::size_t i = 0; i < bins.size(); ++i) {
    run = (i > 0 && bins[i] == bins[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

int64_t collision_pairs(std::vector<int64_t>& bins) {
  std::sort(bins.begin(), bins.end());
  int64_t total = 0, run = 0;
  for (std::size_t i = 0; i < bins.size(); ++i) {
    run = (i > 0 && bins[i] == bins[i - 1]) ? run + 1 : 1;
    total += run - 1;  // C(run,2) - C(run-1,2)
  }
  return total;
}

void fill_bins(const std::vector<int64_t>& xs, const FamilyConfig& cfg,
               const HashParam& param, std::vector<int64_t>& out) {
  out.clear();
  for (int64_t x : xs) out.push_back(bin_of_unchecked(x, param, cfg));
}

void check_budget(const ParamSpace& space, uint64_t per_param, uint64_t budget) {
  const auto evals = static_cast<unsigned __int128>(space.size()) * per_param;
  if (evals > budget)
    throw BudgetExceeded("sweep needs " + std::to_string(space.size()) + " x " +
                         std::to_string(per_param) +
                         " bin evaluations, over budget " + std::to_string(budget));
}

}  // namespace

Rational MaxloadDistribution::tail_ge(int64_t v) const {
  Rational p(0);
  for (auto it = probability.lower_bound(v); it != probability.end(); ++it)
    p += it->second;
  return p;
}

std::vector<int64_t> histogram(const ItemSet& X, const FamilyConfig& cfg,
                               const HashParam& param) {
  cfg.validate();
  validate_param(cfg, param);
  check_items(X, cfg);
  if (cfg.bins > (int64_t{1} << 24))
    throw std::domain_error("histogram: too many bins to materialize");
  std::vector<int64_t> counts(static_cast<std::size_t>(cfg.bins), 0);
  for (int64_t x : X.elements())
    counts[static_cast<std::size_t>(bin_of_unchecked(x, param, cfg))] += 1;
  return counts;
}

int64_t maxload(const ItemSet& X, const FamilyConfig& cfg, const HashParam& param) {
  cfg.validate();
  validate_param(cfg, param);
  check_items(X, cfg);
  std::vector<int64_t> bins;
  fill_bins(X.elements(), cfg, param, bins);
  return max_run(bins);
}

int64_t collision_count(const ItemSet& X, const FamilyConfig& cfg,
                        const HashParam& param) {
  cfg.validate();
  validate_param(cfg, param);
  check_items(X, cfg);
  std::vector<int64_t> bins;
  fill_bins(X.elements(), cfg, param, bins);
  return collision_pairs(bins);
}

MaxloadDistribution exact_expected_maxload(const ItemSet& X, const FamilyConfig& cfg,
                                           uint64_t budget) {
  const ParamSpace space(cfg);
  check_items(X, cfg);
  check_budget(space, static_cast<uint64_t>(std::max<int64_t>(X.size(), 1)), budget);

  MaxloadDistribution dist;
  dist.mode = SweepMode::Exact;
  dist.total = space.size();
  if (X.empty()) {
    dist.counts[0] = static_cast<int64_t>(space.size());
    dist.probability[0] = Rational(1);
    dist.mean = Rational(0);
    return dist;
  }

  std::vector<int64_t> bins;
  if (space.uniform()) {
    BigInt weighted_sum = 0;
    space.for_each([&](const HashParam& p) {
      fill_bins(X.elements(), cfg, p, bins);
      const int64_t v = max_run(bins);
      dist.counts[v] += 1;
      weighted_sum += v;
    });
    const Rational total(static_cast<int64_t>(space.size()));
    dist.mean = Rational(weighted_sum) / total;
    for (const auto& [v, c] : dist.counts)
      dist.probability[v] = Rational(c) / total;
  } else {
    // Two-stage RandomModulus distribution: P(k, a) = 1/K * 1/phi(k).
    std::map<int64_t, Rational> prob;
    std::vector<Rational> mean_terms;
    const int64_t m = cfg.modulus;
    const int64_t lo = (m + 1) / 2;
    const Rational stage(1, m - lo + 1);
    std::map<int64_t, int64_t> per_k;  // maxload value -> count, one k at a time
    int64_t current_k = -1;
    auto flush = [&](int64_t k) {
      if (current_k >= 0 && !per_k.empty()) {
        const Rational unit_weight = stage / Rational(totient(current_k));
        int64_t ksum = 0;
        for (const auto& [v, c] : per_k) {
          prob[v] += unit_weight * Rational(c);
          ksum += v * c;
        }
        mean_terms.push_back(unit_weight * Rational(ksum));
        per_k.clear();
      }
      current_k = k;
    };
    space.for_each([&](const HashParam& p) {
      if (p.inner_modulus != current_k) flush(p.inner_modulus);
      fill_bins(X.elements(), cfg, p, bins);
      const int64_t v = max_run(bins);
      dist.counts[v] += 1;
      per_k[v] += 1;
    });
    flush(-1);
    dist.mean = balanced_sum(mean_terms);
    dist.probability = std::move(prob);
  }
  return dist;
}

MaxloadDistribution mc_expected_maxload(const ItemSet& X, const FamilyConfig& cfg,
                                        int64_t trials, uint64_t seed) {
  cfg.validate();
  check_items(X, cfg);
  if (trials < 1) throw std::domain_error("mc_expected_maxload: trials must be >= 1");

  MaxloadDistribution dist;
  dist.mode = SweepMode::MonteCarlo;
  dist.total = static_cast<uint64_t>(trials);

  std::vector<int64_t> bins;
  BigInt sum = 0, sumsq = 0;
  for (int64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, static_cast<uint64_t>(t));
    const HashParam p = sample_param(cfg, rng);
    int64_t v = 0;
    if (!X.empty()) {
      fill_bins(X.elements(), cfg, p, bins);
      v = max_run(bins);
    }
    dist.counts[v] += 1;
    sum += v;
    sumsq += big(v) * big(v);
  }
  dist.mean = Rational(sum, big(trials));
  for (const auto& [v, c] : dist.counts)
    dist.probability[v] = Rational(c, trials);
  if (trials > 1) {
    const Rational var =
        (Rational(sumsq) - Rational(sum * sum, big(trials))) / Rational(trials - 1);
    dist.stderr_value = std::sqrt(var.to_double() / static_cast<double>(trials));
  }
  return dist;
}

Rational pair_collision_prob(int64_t x, int64_t y, const FamilyConfig& cfg,
                             uint64_t budget) {
  const ParamSpace space(cfg);
  if (x == y) throw std::domain_error("pair_collision_prob: elements must differ");
  if (x < 0 || y < 0 || x >= cfg.modulus || y >= cfg.modulus)
    throw std::domain_error("pair_collision_prob: element outside the universe");
  check_budget(space, 2, budget);

  if (space.uniform()) {
    int64_t hits = 0;
    space.for_each([&](const HashParam& p) {
      hits += bin_of_unchecked(x, p, cfg) == bin_of_unchecked(y, p, cfg) ? 1 : 0;
    });
    return Rational(hits, static_cast<int64_t>(space.size()));
  }
  std::vector<Rational> terms;
  space.for_each([&](const HashParam& p) {
    if (bin_of_unchecked(x, p, cfg) == bin_of_unchecked(y, p, cfg))
      terms.push_back(space.weight(p));
  });
  return balanced_sum(terms);
}

CollisionStats expected_collisions(const ItemSet& X, const FamilyConfig& cfg,
                                   bool with_pair_probabilities, uint64_t budget) {
  const ParamSpace space(cfg);
  check_items(X, cfg);
  const auto n = static_cast<uint64_t>(X.size());
  check_budget(space, std::max<uint64_t>(n, 1), budget);

  CollisionStats stats;
  stats.expected_collisions = Rational(0);
  if (n < 2) return stats;

  const auto& xs = X.elements();
  std::vector<int64_t> bins;
  std::map<std::pair<int64_t, int64_t>, int64_t> pair_hits;
  BigInt total_collisions = 0;
  std::vector<Rational> weighted;  // RandomModulus only

  space.for_each([&](const HashParam& p) {
    fill_bins(xs, cfg, p, bins);
    if (with_pair_probabilities || !space.uniform()) {
      int64_t c = 0;
      for (std::size_t i = 0; i < bins.size(); ++i) {
        for (std::size_t j = i + 1; j < bins.size(); ++j) {
          if (bins[i] == bins[j]) {
            ++c;
            if (with_pair_probabilities) pair_hits[{xs[i], xs[j]}] += 1;
          }
        }
      }
      if (space.uniform()) {
        total_collisions += c;
      } else if (c > 0) {
        weighted.push_back(space.weight(p) * Rational(c));
      }
    } else {
      total_collisions += collision_pairs(bins);
    }
  });

  if (space.uniform()) {
    stats.expected_collisions =
        Rational(total_collisions, big(static_cast<int64_t>(space.size())));
    for (const auto& [key, hits] : pair_hits)
      stats.pair_probabilities[key] =
          Rational(hits, static_cast<int64_t>(space.size()));
  } else {
    stats.expected_collisions = balanced_sum(weighted);
    // Weighted pair probabilities are rebuilt per pair on demand via
    // pair_collision_prob; the bulk map here is exact only for uniform spaces.
    if (with_pair_probabilities) {
      for (const auto& [key, hits] : pair_hits)
        stats.pair_probabilities[key] = pair_collision_prob(key.first, key.second, cfg, budget);
    }
  }
  return stats;
}

int64_t close_pairs(const ItemSet& X, int64_t m, int64_t a, int64_t alpha) {
  if (m < 1) throw std::domain_error("close_pairs: modulus must be positive");
  if (alpha < 1) throw std::domain_error("close_pairs: alpha must be >= 1");
  if (!X.empty() && X.max_element() >= m)
    throw std::domain_error("close_pairs: element outside the universe");
  const int64_t n = X.size();
  if (n < 2) return 0;
  const int64_t w = m / (n * alpha);
  const auto& xs = X.elements();
  int64_t count = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (signed_distance(a % m * ((xs[j] - xs[i]) % m), m) <= w) ++count;
    }
  }
  return count;
}

}  // namespace linhash
