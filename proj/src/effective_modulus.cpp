#include "linhash/effective_modulus.hpp"

#include <algorithm>
#include <stdexcept>

#include "linhash/numtheory.hpp"
#include "linhash/rng.hpp"

namespace linhash {

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  std::erase_if(intervals, [](const Interval& iv) { return !(iv.lo < iv.hi); });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet s;
  for (auto& iv : intervals) {
    if (!s.iv_.empty() && iv.lo <= s.iv_.back().hi) {
      if (s.iv_.back().hi < iv.hi) s.iv_.back().hi = iv.hi;
    } else {
      s.iv_.push_back(std::move(iv));
    }
  }
  return s;
}

Rational IntervalSet::measure() const {
  std::vector<Rational> lens;
  lens.reserve(iv_.size());
  for (const auto& iv : iv_) lens.push_back(iv.hi - iv.lo);
  return balanced_sum(lens);
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(
      iv_.begin(), iv_.end(), x,
      [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == iv_.begin()) return false;
  --it;
  return x >= it->lo && x < it->hi;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = iv_;
  all.insert(all.end(), other.iv_.begin(), other.iv_.end());
  return from_intervals(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < iv_.size() && j < other.iv_.size()) {
    const Rational lo = std::max(iv_[i].lo, other.iv_[j].lo);
    const Rational hi = std::min(iv_[i].hi, other.iv_[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (iv_[i].hi < other.iv_[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return from_intervals(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& iv : iv_) {
    Rational lo = iv.lo;
    while (j < other.iv_.size() && other.iv_[j].hi <= lo) ++j;
    std::size_t jj = j;
    while (jj < other.iv_.size() && other.iv_[jj].lo < iv.hi) {
      if (lo < other.iv_[jj].lo) out.push_back({lo, other.iv_[jj].lo});
      if (lo < other.iv_[jj].hi) lo = other.iv_[jj].hi;
      ++jj;
    }
    if (lo < iv.hi) out.push_back({lo, iv.hi});
  }
  return from_intervals(std::move(out));
}

bool IntervalSet::disjoint_with(const IntervalSet& other) const {
  return intersect(other).empty();
}

IntervalSet claimed_intervals(int64_t k, int64_t n, int64_t u) {
  if (n < 1 || u < 1) throw std::domain_error("claimed_intervals: need n, u >= 1");
  const int64_t nu = n * u;
  if (k < 1 || k > nu)
    throw std::domain_error("claimed_intervals: k must be in [1, nu]");
  const Rational window(1, nu);
  std::vector<IntervalSet::Interval> ivs;
  for (int64_t c : units(k)) {
    Rational lo(c, k);
    Rational hi = lo + window;
    if (hi > Rational(1)) hi = Rational(1);
    ivs.push_back({std::move(lo), std::move(hi)});
  }
  return IntervalSet::from_intervals(std::move(ivs));
}

namespace {

Rational reciprocal(const Rational& r) { return Rational(r.den(), r.num()); }

}  // namespace

Rational simplest_in(const Rational& lo, bool lo_strict, const Rational& hi,
                     bool hi_strict) {
  if (lo.sign() < 0) throw std::domain_error("simplest_in: negative interval");
  if (hi < lo || (lo == hi && (lo_strict || hi_strict)))
    throw std::domain_error("simplest_in: empty interval");
  // Smallest admissible integer.
  const BigInt n = lo_strict ? lo.floor() + 1 : lo.ceil();
  const Rational nr(n);
  if (nr < hi || (nr == hi && !hi_strict)) return nr;
  const BigInt i = lo.floor();
  const Rational fl = lo - Rational(i);
  const Rational fh = hi - Rational(i);
  // fl > 0 or lo_strict here, so the sought fractional part is positive.
  if (fl.is_zero()) {
    // f in (0, fh]: the simplest is 1/q for the smallest admissible q.
    BigInt q = reciprocal(fh).ceil();
    if (hi_strict && Rational(BigInt(1), q) == fh) q += 1;
    return Rational(i) + Rational(BigInt(1), q);
  }
  // f in (fl, fh] maps to 1/f in [1/fh, 1/fl) with strictness swapped; the
  // simplest fraction is preserved under integer shift and reciprocal.
  const Rational r = simplest_in(reciprocal(fh), hi_strict, reciprocal(fl), lo_strict);
  return Rational(i) + reciprocal(r);
}

int64_t effective_modulus_of(const Rational& a, int64_t n, int64_t u) {
  if (n < 1 || u < 1) throw std::domain_error("effective_modulus_of: need n, u >= 1");
  if (a.sign() <= 0 || a >= Rational(1))
    throw std::domain_error("effective_modulus_of: multiplier must be in (0, 1)");
  const int64_t nu = n * u;
  const Rational window(1, nu);
  const Rational lo = a - window;
  if (lo.sign() < 0) return 1;  // 0/1 claims a
  const Rational best = simplest_in(lo, true, a, false);
  const int64_t k = to_i64(best.den());
  return k;
}

Rational FDistribution::total() const {
  std::vector<Rational> terms;
  terms.reserve(measure_by_k.size());
  for (const auto& [k, m] : measure_by_k) terms.push_back(m);
  return balanced_sum(terms);
}

Rational FDistribution::max_measure() const {
  Rational best(0);
  for (const auto& [k, m] : measure_by_k) {
    if (m > best) best = m;
  }
  return best;
}

namespace {

// Accumulates per-denominator obtained measures. A k-fraction's window
// [c/k, c/k + 1/nu) keeps the prefix not covered by the window of its
// F_k-predecessor and loses the suffix from its F_k-successor on. With
// predecessor gap 1/(k*w) and successor gap 1/(k*(k-w)), the obtained length
// depends only on (k, w).
class ObtainedAccumulator {
 public:
  explicit ObtainedAccumulator(int64_t nu) : nu_(nu) {}

  void add(int64_t k, int64_t w) {
    const bool pred_far = k * w <= nu_;          // predecessor window stops before c/k
    const bool succ_far = k * (k - w) <= nu_;    // successor beyond the window end
    if (pred_far && succ_far) {
      full_[k] += 1;
    } else if (pred_far) {
      terms_[k].emplace_back(1, k * (k - w));
    } else if (succ_far) {
      terms_[k].emplace_back(1, k * w);
    } else {
      const int64_t prod = w * (k - w);
      if (prod < nu_) terms_[k].emplace_back(nu_ - prod, prod * nu_);
    }
  }

  std::map<int64_t, Rational> finalize() {
    std::map<int64_t, Rational> out;
    out[1] = Rational(1, nu_);  // the clipped window of 0/1
    for (auto& [k, c] : full_) out[k] += Rational(c, nu_);
    for (auto& [k, v] : terms_) out[k] += balanced_sum(v);
    return out;
  }

 private:
  int64_t nu_;
  std::map<int64_t, int64_t> full_;
  std::map<int64_t, std::vector<Rational>> terms_;
};

int64_t checked_nu(int64_t n, int64_t u, int64_t budget_nu) {
  if (n < 1 || u < 1) throw std::domain_error("f_distribution: need n, u >= 1");
  const int64_t nu = n * u;
  if (nu > budget_nu)
    throw BudgetExceeded("f_distribution: nu = " + std::to_string(nu) +
                         " over budget " + std::to_string(budget_nu));
  return nu;
}

}  // namespace

FDistribution f_distribution(int64_t n, int64_t u, int64_t budget_nu) {
  const int64_t nu = checked_nu(n, u, budget_nu);
  FDistribution dist;
  dist.n = n;
  dist.u = u;
  ObtainedAccumulator acc(nu);
  const std::vector<int64_t> phi = totient_sieve(nu);
  for (int64_t k = 2; k <= nu; ++k) {
    if (k * k <= nu) {
      // Below sqrt(nu) no window is stolen: measure is exactly phi(k)/nu.
      dist.measure_by_k[k] = Rational(phi[k], nu);
      continue;
    }
    const int64_t t = nu / k;
    if (k <= 2 * t + 2) {
      for (int64_t w = 1; w < k; ++w) {
        if (gcd64(w, k) == 1) acc.add(k, w);
      }
    } else {
      for (int64_t w = 1; w <= t; ++w) {
        if (gcd64(w, k) == 1) acc.add(k, w);
      }
      for (int64_t w = k - t; w < k; ++w) {
        if (gcd64(w, k) == 1) acc.add(k, w);
      }
      // Middle region: both neighbors steal; nonzero residue only while
      // w(k-w) < nu, which holds near the edges only.
      for (int64_t w = t + 1; w <= (k - 1) / 2 && w * (k - w) < nu; ++w) {
        if (gcd64(w, k) == 1) {
          acc.add(k, w);
          acc.add(k, k - w);
        }
      }
    }
  }
  auto obtained = acc.finalize();
  for (auto& [k, v] : obtained) dist.measure_by_k[k] += v;
  return dist;
}

FDistribution f_distribution_walk(int64_t n, int64_t u, int64_t budget_nu) {
  const int64_t nu = checked_nu(n, u, budget_nu);
  FDistribution dist;
  dist.n = n;
  dist.u = u;
  ObtainedAccumulator acc(nu);
  // Walk F_nu keeping (prev, cur, next); the F_k neighbors of cur = c/k have
  // denominators congruent to the F_nu neighbors' denominators mod k.
  int64_t pa = 0, pb = 1;  // prev
  int64_t ca = 1, cb = nu; // cur
  while (!(ca == 1 && cb == 1)) {
    const int64_t step = (nu + pb) / cb;
    const int64_t na = step * ca - pa;
    const int64_t nb = step * cb - pb;
    if (cb > 1) {
      int64_t w = pb % cb;
      if (w == 0) w = cb;
      acc.add(cb, w);
    }
    pa = ca;
    pb = cb;
    ca = na;
    cb = nb;
  }
  dist.measure_by_k = acc.finalize();
  return dist;
}

int64_t crowding_index(const Rational& a, int64_t n) {
  if (n < 2) throw std::domain_error("crowding_index: need n >= 2");
  if (a.sign() <= 0 || a >= Rational(1))
    throw std::domain_error("crowding_index: multiplier must be in (0, 1)");
  const Rational bound(1, n);
  for (int64_t k = 1; k <= n; ++k) {
    if (signed_distance(a * Rational(k), 1) < bound) return k;
  }
  throw std::logic_error("crowding_index: pigeonhole bound violated");
}

std::map<int64_t, Rational> crowding_measures(int64_t n) {
  if (n < 2) throw std::domain_error("crowding_measures: need n >= 2");
  std::map<int64_t, Rational> out;
  IntervalSet covered;
  const Rational one(1);
  for (int64_t k = 1; k <= n; ++k) {
    std::vector<IntervalSet::Interval> ivs;
    const Rational radius(1, n * k);
    for (int64_t c = 0; c <= k; ++c) {
      Rational lo = Rational(c, k) - radius;
      Rational hi = Rational(c, k) + radius;
      if (lo.sign() < 0) lo = Rational(0);
      if (hi > one) hi = one;
      ivs.push_back({std::move(lo), std::move(hi)});
    }
    const IntervalSet level = IntervalSet::from_intervals(std::move(ivs));
    out[k] = level.subtract(covered).measure();
    covered = covered.unite(level);
  }
  return out;
}

double residue_injectivity_check(const ItemSet& X, int64_t n, int64_t u,
                                 int64_t trials, uint64_t seed) {
  if (n < 1 || u < 1) throw std::domain_error("residue_injectivity_check: need n, u >= 1");
  if (trials < 1) throw std::domain_error("residue_injectivity_check: trials >= 1");
  if (!X.empty() && X.max_element() >= u)
    throw std::domain_error("residue_injectivity_check: element outside [u]");
  const int64_t nu = n * u;
  const int64_t grid =
      nu > (int64_t{1} << 50) ? (int64_t{1} << 60) : nu * 1024;
  int64_t ok = 0;
  std::vector<int64_t> residues;
  for (int64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, static_cast<uint64_t>(t));
    const int64_t r = rng.in_range(1, grid - 1);
    const int64_t f = effective_modulus_of(Rational(r, grid), n, u);
    residues.clear();
    for (int64_t x : X.elements()) residues.push_back(mod_reduce(x, f));
    std::sort(residues.begin(), residues.end());
    ok += std::adjacent_find(residues.begin(), residues.end()) == residues.end() ? 1 : 0;
  }
  return static_cast<double>(ok) / static_cast<double>(trials);
}

}  // namespace linhash
