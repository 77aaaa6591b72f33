#include "linhash/twobin.hpp"

#include <algorithm>
#include <stdexcept>

#include "linhash/numtheory.hpp"

namespace linhash {

int64_t overlap(int64_t x, int64_t p) {
  if (p < 3 || !is_prime(static_cast<uint64_t>(p)))
    throw std::domain_error("overlap: p must be an odd prime");
  if (x < 1 || x >= p) throw std::domain_error("overlap: x must be in [1, p-1]");
  const int64_t half = (p + 1) / 2;  // ceil(p/2)
  int64_t count = 0;
  int64_t r = 0;
  for (int64_t a = 1; a < half; ++a) {
    r += x;
    if (r >= p) r -= p;
    if (2 * r < p) ++count;
  }
  return count;
}

Rational excess_overlap(int64_t x, int64_t p) {
  return Rational(overlap(x, p)) - Rational(p, 4);
}

int64_t pigeon_value(const PigeonRep& rep, int64_t p) {
  const int64_t inv = mod_inverse(rep.m, p);
  return mod_reduce(rep.sigma * inv % p * (rep.k % p), p);
}

PigeonRep pigeon_rep(int64_t x, int64_t p, int64_t n) {
  if (!is_prime(static_cast<uint64_t>(p)))
    throw std::domain_error("pigeon_rep: p must be prime");
  if (x < 1 || x >= p) throw std::domain_error("pigeon_rep: x must be in [1, p-1]");
  if (n < 2 || n >= p) throw std::domain_error("pigeon_rep: need 2 <= n < p");

  // The n points m_p(x*i), i in [0, n), leave some circular gap <= p/n.
  std::vector<std::pair<int64_t, int64_t>> pts;  // (value, index)
  pts.reserve(static_cast<std::size_t>(n));
  int64_t v = 0;
  for (int64_t i = 0; i < n; ++i) {
    pts.emplace_back(v, i);
    v += x;
    if (v >= p) v -= p;
  }
  std::sort(pts.begin(), pts.end());

  PigeonRep best;
  int64_t best_gap = -1;
  auto consider = [&](int64_t gap, int64_t hi_idx, int64_t lo_idx) {
    if (gap * n > p) return;  // need gap <= p/n
    const int64_t m = std::abs(hi_idx - lo_idx);
    const int sigma = hi_idx > lo_idx ? 1 : -1;
    if (best_gap < 0 || gap < best_gap || (gap == best_gap && m < best.m) ||
        (gap == best_gap && m == best.m && sigma > best.sigma)) {
      best_gap = gap;
      best = PigeonRep{sigma, m, gap};
    }
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    consider(pts[i + 1].first - pts[i].first, pts[i + 1].second, pts[i].second);
  }
  consider(pts.front().first + p - pts.back().first, pts.front().second,
           pts.back().second);
  if (best_gap < 0) throw std::logic_error("pigeon_rep: no qualifying pair");
  // k = 0 would need x*m == 0 mod p, impossible for prime p and m < n < p.
  if (best.k == 0) throw std::logic_error("pigeon_rep: degenerate k = 0");
  return best;
}

Rational epicbound_rhs(int64_t m, int64_t k, int64_t p) {
  if (m < 1) throw std::domain_error("epicbound_rhs: m must be >= 1");
  if (k < 1) throw std::domain_error("epicbound_rhs: k must be >= 1");
  return Rational(k) + (Rational(m) + Rational(p, m * k)) * Rational(gcd64(k, m));
}

OverlapReport sum_excess(const ItemSet& X, int64_t p) {
  if (X.empty()) throw std::domain_error("sum_excess: empty set");
  if (X.elements().front() < 1 || X.max_element() >= p)
    throw std::domain_error("sum_excess: set must lie in [1, p-1]");
  const int64_t n = X.size();
  OverlapReport report;
  std::vector<Rational> excesses, bounds;
  for (int64_t x : X.elements()) {
    OverlapEntry e;
    e.x = x;
    e.overlap = overlap(x, p);
    e.excess = Rational(e.overlap) - Rational(p, 4);
    e.rep = pigeon_rep(x, p, std::max<int64_t>(n, 2));
    e.bound_rhs = epicbound_rhs(e.rep.m, e.rep.k, p);
    excesses.push_back(e.excess);
    bounds.push_back(e.bound_rhs);
    report.per_element.push_back(std::move(e));
  }
  report.total_excess = balanced_sum(excesses);
  report.total_bound_rhs = balanced_sum(bounds);
  return report;
}

Rational jensen_maxload_bound(const Rational& expected_collisions, int64_t n) {
  if (n < 1) throw std::domain_error("jensen_maxload_bound: n must be >= 1");
  const Rational max_c(n * (n - 1), 2);
  if (expected_collisions.sign() < 0 || expected_collisions > max_c)
    throw std::domain_error("jensen_maxload_bound: E[C] outside [0, C(n,2)]");
  const Rational half_n(n, 2);
  const Rational disc = expected_collisions - Rational(n * (n - 2), 4);
  if (disc.sign() < 0) return half_n;
  // Outward-rounded square root: sqrt(p/q) <= (isqrt(pq) + 1)/q.
  const BigInt pq = disc.num() * disc.den();
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
  if (root * root != pq) root += 1;
  return half_n + Rational(root, disc.den());
}

}  // namespace linhash
