#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linhash/rational.hpp"

namespace linhash {

struct NotAUnit : std::domain_error {
  NotAUnit(int64_t a, int64_t m)
      : std::domain_error("not a unit: gcd(" + std::to_string(a) + ", " +
                          std::to_string(m) + ") != 1") {}
};

struct NoSuccessor : std::domain_error {
  NoSuccessor() : std::domain_error("1/1 has no Farey successor") {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// The unique representative of x + pZ in [0, p). Defined for negative x.
int64_t mod_reduce(int64_t x, int64_t p);
Rational mod_reduce(const Rational& x, int64_t p);

/// Distance from x to the nearest multiple of p: min(m_p(x), m_p(-x)).
int64_t signed_distance(int64_t x, int64_t p);
Rational signed_distance(const Rational& x, int64_t p);

/// Multiplicative inverse of a modulo m, in [1, m). Throws NotAUnit when
/// gcd(a, m) != 1.
int64_t mod_inverse(int64_t a, int64_t m);

int64_t gcd64(int64_t a, int64_t b);

/// Euler phi. By convention totient(1) = 1.
int64_t totient(int64_t m);

/// phi[0..limit] table; phi[0] = 0.
std::vector<int64_t> totient_sieve(int64_t limit);

int64_t divisor_count(int64_t m);
std::vector<int64_t> divisors(int64_t m);  // ascending

/// Deterministic for all n < 2^64 (Miller-Rabin with a fixed witness set).
bool is_prime(uint64_t n);

/// Smallest prime in [lo, hi], or nullopt.
std::optional<int64_t> prime_in_range(int64_t lo, int64_t hi);

/// Residues in [0, m) coprime to m, ascending. units(1) = {0}.
std::vector<int64_t> units(int64_t m);

/// Visits every fraction of the Farey sequence F_m in ascending order as
/// (num, den), starting at 0/1 and ending at 1/1, via the standard
/// next-term recurrence.
template <typename Visit>
void farey_walk(int64_t m, Visit&& visit) {
  if (m < 1) throw std::domain_error("farey_walk: order must be >= 1");
  int64_t a = 0, b = 1, c = 1, d = m;
  visit(int64_t{0}, int64_t{1});
  while (c != 1 || d != 1) {
    visit(c, d);
    const int64_t k = (m + b) / d;
    const int64_t c2 = k * c - a;
    const int64_t d2 = k * d - b;
    a = c;
    b = d;
    c = c2;
    d = d2;
  }
  visit(int64_t{1}, int64_t{1});
}

std::vector<FareyFraction> farey_sequence(int64_t m);

/// The next element of F_m after f. Throws NoSuccessor for f = 1/1 and
/// domain_error when f is not in F_m.
FareyFraction farey_successor(const FareyFraction& f, int64_t m);

/// (a * b) mod m with a 128-bit intermediate.
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);

}  // namespace linhash
