#include "linhash/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace linhash {

Rational balanced_sum(std::vector<Rational>& terms) {
  if (terms.empty()) return Rational(0);
  while (terms.size() > 1) {
    std::size_t out = 0;
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
      terms[out++] = terms[i] + terms[i + 1];
    }
    if (terms.size() % 2 == 1) terms[out++] = terms.back();
    terms.resize(out);
  }
  return terms.front();
}

int64_t mod_reduce(int64_t x, int64_t p) {
  if (p < 1) throw std::domain_error("mod_reduce: modulus must be positive");
  int64_t r = x % p;
  if (r < 0) r += p;
  return r;
}

Rational mod_reduce(const Rational& x, int64_t p) {
  if (p < 1) throw std::domain_error("mod_reduce: modulus must be positive");
  const Rational q = x / Rational(p);
  const BigInt whole = q.floor() * big(p);
  return x - Rational(whole);
}

int64_t signed_distance(int64_t x, int64_t p) {
  const int64_t r = mod_reduce(x, p);
  return r == 0 ? 0 : std::min(r, p - r);
}

Rational signed_distance(const Rational& x, int64_t p) {
  const Rational r = mod_reduce(x, p);
  const Rational s = Rational(p) - r;
  return r < s ? r : (r.is_zero() ? r : s);
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t mod_inverse(int64_t a, int64_t m) {
  if (m < 2) throw std::domain_error("mod_inverse: modulus must be >= 2");
  int64_t r0 = m, r1 = mod_reduce(a, m);
  int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw NotAUnit(a, m);
  return mod_reduce(t0, m);
}

int64_t totient(int64_t m) {
  if (m < 1) throw std::domain_error("totient: argument must be positive");
  int64_t result = m;
  int64_t n = m;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int64_t> totient_sieve(int64_t limit) {
  std::vector<int64_t> phi(static_cast<std::size_t>(limit) + 1);
  for (int64_t i = 0; i <= limit; ++i) phi[i] = i;
  for (int64_t p = 2; p <= limit; ++p) {
    if (phi[p] == p) {  // p prime
      for (int64_t j = p; j <= limit; j += p) phi[j] -= phi[j] / p;
    }
  }
  return phi;
}

int64_t divisor_count(int64_t m) {
  if (m < 1) throw std::domain_error("divisor_count: argument must be positive");
  int64_t count = 1;
  int64_t n = m;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      count *= e + 1;
    }
  }
  if (n > 1) count *= 2;
  return count;
}

std::vector<int64_t> divisors(int64_t m) {
  if (m < 1) throw std::domain_error("divisors: argument must be positive");
  std::vector<int64_t> small, large;
  for (int64_t d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

namespace {

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                     23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all n < 2^64 (Sinclair, 2011).
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                     23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::optional<int64_t> prime_in_range(int64_t lo, int64_t hi) {
  if (lo < 2 || hi < lo) throw std::domain_error("prime_in_range: need hi >= lo >= 2");
  for (int64_t n = lo; n <= hi; ++n) {
    if (is_prime(static_cast<uint64_t>(n))) return n;
  }
  return std::nullopt;
}

std::vector<int64_t> units(int64_t m) {
  if (m < 1) throw std::domain_error("units: modulus must be positive");
  if (m == 1) return {0};
  std::vector<int64_t> result;
  for (int64_t a = 1; a < m; ++a) {
    if (std::gcd(a, m) == 1) result.push_back(a);
  }
  return result;
}

std::vector<FareyFraction> farey_sequence(int64_t m) {
  std::vector<FareyFraction> seq;
  farey_walk(m, [&](int64_t c, int64_t k) { seq.emplace_back(c, k); });
  return seq;
}

FareyFraction farey_successor(const FareyFraction& f, int64_t m) {
  if (m < 1) throw std::domain_error("farey_successor: order must be >= 1");
  if (f.sign() < 0 || f > Rational(1))
    throw std::domain_error("farey_successor: fraction outside [0, 1]");
  if (f.den() > big(m)) throw std::domain_error("farey_successor: not in F_m");
  if (f == Rational(1)) throw NoSuccessor();
  const int64_t c = to_i64(f.num());
  const int64_t k = to_i64(f.den());
  // Successor x/y satisfies kx - cy = 1 with y in (m-k, m].
  int64_t y;
  if (k == 1) {
    y = m;
  } else {
    const int64_t w = mod_inverse(c, k);  // y == -w (mod k)
    y = m - mod_reduce(m + w, k);
  }
  const int64_t x = (1 + c * y) / k;
  return FareyFraction(x, y);
}

}  // namespace linhash
