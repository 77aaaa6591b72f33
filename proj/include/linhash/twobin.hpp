#pragma once

#include <cstdint>
#include <vector>

#include "linhash/families.hpp"
#include "linhash/rational.hpp"

namespace linhash {

/// Number of a in [1, ceil(p/2) - 1] with m_p(ax) < p/2, i.e. small
/// multipliers under which 1 and x share the lower bin.
int64_t overlap(int64_t x, int64_t p);

/// overlap(x, p) - p/4, exact.
Rational excess_overlap(int64_t x, int64_t p);

/// Pigeonhole representation x = m_p(sigma * m^{-1} * k) with m in [1, n-1]
/// and k in [1, ceil(p/n)].
struct PigeonRep {
  int sigma = 1;  // +1 or -1
  int64_t m = 0;
  int64_t k = 0;
};

PigeonRep pigeon_rep(int64_t x, int64_t p, int64_t n);

/// Reconstructs m_p(sigma * m^{-1} * k); inverse of pigeon_rep.
int64_t pigeon_value(const PigeonRep& rep, int64_t p);

/// The constant-free bound shape k + (m + p/(mk)) * gcd(k, m); the fitted
/// constant lives in the claim registry, not here.
Rational epicbound_rhs(int64_t m, int64_t k, int64_t p);

struct OverlapEntry {
  int64_t x = 0;
  int64_t overlap = 0;
  Rational excess;
  PigeonRep rep;
  Rational bound_rhs;
};

struct OverlapReport {
  std::vector<OverlapEntry> per_element;
  Rational total_excess;
  Rational total_bound_rhs;
};

/// Exact per-element overlaps and excesses over X, with pigeonhole
/// representations taken for n = |X|. Requires X inside [1, p-1].
OverlapReport sum_excess(const ItemSet& X, int64_t p);

/// Larger root of mu^2 - n mu + (n^2 - n)/2 - E[C] = 0, i.e. the Jensen
/// maxload bound n/2 + sqrt(E[C] - n(n-2)/4). The square root is rounded
/// outward to a rational, so the returned value is a valid upper bound.
/// A negative discriminant degenerates to n/2.
Rational jensen_maxload_bound(const Rational& expected_collisions, int64_t n);

}  // namespace linhash
