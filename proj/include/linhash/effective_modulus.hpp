#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "linhash/families.hpp"
#include "linhash/rational.hpp"

namespace linhash {

/// Sorted disjoint half-open rational intervals [lo, hi) inside [0, 1).
/// Touching intervals are merged, so the representation is canonical.
class IntervalSet {
 public:
  struct Interval {
    Rational lo, hi;
  };

  IntervalSet() = default;
  /// Sorts, drops empty intervals, merges overlapping/touching ones.
  static IntervalSet from_intervals(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return iv_; }
  bool empty() const { return iv_.empty(); }
  Rational measure() const;
  bool contains(const Rational& x) const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet subtract(const IntervalSet& other) const;
  bool disjoint_with(const IntervalSet& other) const;

 private:
  std::vector<Interval> iv_;  // sorted by lo, disjoint, non-touching
};

/// The set I(k) claimed by denominator k: union over units c of Z_k of the
/// windows [c/k, c/k + 1/(nu)) clipped to (0, 1). Windows are half-open so
/// they tile without double counting.
IntervalSet claimed_intervals(int64_t k, int64_t n, int64_t u);

/// Effective integer modulus F(a): the smallest k claiming a, i.e. the
/// smallest denominator of a reduced fraction in (a - 1/(nu), a]. Computed by
/// continued-fraction descent (smallest denominator in an interval).
int64_t effective_modulus_of(const Rational& a, int64_t n, int64_t u);

/// Smallest-denominator rational in an interval with configurable endpoint
/// strictness. Requires lo < hi, or lo == hi with both endpoints closed.
Rational simplest_in(const Rational& lo, bool lo_strict, const Rational& hi,
                     bool hi_strict);

/// Exact distribution of F over a uniform a in (0, 1): k -> measure of
/// {a : F(a) = k}. Measures sum to 1 exactly.
struct FDistribution {
  int64_t n = 0, u = 0;
  std::map<int64_t, Rational> measure_by_k;

  Rational total() const;
  Rational max_measure() const;
};

inline constexpr int64_t kDefaultFDistBudget = 100'000;  // max nu

/// Per-fraction window attribution aggregated denominator-by-denominator;
/// exact, O(nu log nu). Each k-fraction obtains the part of its window not
/// stolen by its Farey neighbors of smaller denominator.
FDistribution f_distribution(int64_t n, int64_t u,
                             int64_t budget_nu = kDefaultFDistBudget);

/// Same distribution computed by walking the full Farey sequence F_nu with
/// the next-term recurrence, attributing each window's un-stolen prefix as
/// the walk passes it. Slower; retained as an independent route.
FDistribution f_distribution_walk(int64_t n, int64_t u,
                                  int64_t budget_nu = 20'000);

/// Crowding index g(a): smallest k >= 1 with s_1(a k) < 1/n. At most n.
int64_t crowding_index(const Rational& a, int64_t n);

/// Exact measures of {a in (0,1) : g(a) = k} for k = 1..n.
std::map<int64_t, Rational> crowding_measures(int64_t n);

/// Monte Carlo estimate of Pr[all residues of X distinct mod F(a)] for a
/// drawn uniformly from a fine rational grid. Returns the observed fraction.
double residue_injectivity_check(const ItemSet& X, int64_t n, int64_t u,
                                 int64_t trials, uint64_t seed);

}  // namespace linhash
