#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "linhash/families.hpp"
#include "linhash/rational.hpp"

namespace linhash {

inline constexpr uint64_t kDefaultSweepBudget = 100'000'000;  // bin evaluations

enum class SweepMode { Exact, MonteCarlo };

/// Distribution of maxload over a parameter space (exact sweep) or over
/// sampled trials (Monte Carlo).
struct MaxloadDistribution {
  SweepMode mode = SweepMode::Exact;
  uint64_t total = 0;                 // parameter-space size, or trial count
  std::map<int64_t, int64_t> counts;  // maxload value -> #params / #trials
  /// Exact probability mass per value. Equals counts/total except under
  /// RandomModulus, whose two-stage draw is not uniform over parameters.
  std::map<int64_t, Rational> probability;
  Rational mean;               // exact expectation, or exact sample mean
  double stderr_value = 0.0;   // standard error of the mean; MC only

  int64_t min_value() const { return counts.empty() ? 0 : counts.begin()->first; }
  int64_t max_value() const { return counts.empty() ? 0 : counts.rbegin()->first; }
  Rational tail_ge(int64_t v) const;  // P[maxload >= v]
};

struct CollisionStats {
  Rational expected_collisions;
  /// (x, y) -> exact collision probability; filled on request only.
  std::map<std::pair<int64_t, int64_t>, Rational> pair_probabilities;
};

/// Bin counts under one parameter; counts sum to |X|.
std::vector<int64_t> histogram(const ItemSet& X, const FamilyConfig& cfg,
                               const HashParam& param);

/// Number of items in the fullest bin; 0 for the empty set.
int64_t maxload(const ItemSet& X, const FamilyConfig& cfg, const HashParam& param);

/// Number of unordered same-bin pairs: sum over bins of C(count, 2).
int64_t collision_count(const ItemSet& X, const FamilyConfig& cfg,
                        const HashParam& param);

/// Full sweep over the parameter space; exact rational mean. Throws
/// BudgetExceeded when |space| * |X| exceeds the bin-evaluation budget.
MaxloadDistribution exact_expected_maxload(const ItemSet& X, const FamilyConfig& cfg,
                                           uint64_t budget = kDefaultSweepBudget);

/// Seeded estimator; trial t is a pure function of (seed, t).
MaxloadDistribution mc_expected_maxload(const ItemSet& X, const FamilyConfig& cfg,
                                        int64_t trials, uint64_t seed);

/// Exact probability that x and y share a bin, over the parameter space.
Rational pair_collision_prob(int64_t x, int64_t y, const FamilyConfig& cfg,
                             uint64_t budget = kDefaultSweepBudget);

/// Exact expected number of same-bin pairs over the parameter space.
CollisionStats expected_collisions(const ItemSet& X, const FamilyConfig& cfg,
                                   bool with_pair_probabilities = false,
                                   uint64_t budget = kDefaultSweepBudget);

/// Number of unordered pairs x != y in X with s_m(a(x-y)) <= floor(m/(n*alpha)),
/// n = |X|. The multiplier-space diagnostic behind the close-pair counting.
int64_t close_pairs(const ItemSet& X, int64_t m, int64_t a, int64_t alpha);

}  // namespace linhash
