#pragma once

#include <cstdint>
#include <stdexcept>

namespace linhash {

inline uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: the stream for (seed, counter) is a pure function
/// of those two values, so trial t of a Monte Carlo run can be reproduced or
/// partitioned without serial state.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t counter)
      : key_(splitmix64(seed ^ 0x6a09e667f3bcc909ULL) ^
             splitmix64(counter * 0x9e3779b97f4a7c15ULL)) {}

  uint64_t next_u64() { return splitmix64(key_ + 0xbf58476d1ce4e5b9ULL * ++sub_); }

  /// Uniform in [0, n); rejection sampling, unbiased.
  int64_t below(int64_t n) {
    if (n <= 0) throw std::domain_error("CounterRng::below: empty range");
    const uint64_t un = static_cast<uint64_t>(n);
    uint64_t mask = ~uint64_t{0};
    if ((un & (un - 1)) == 0) return static_cast<int64_t>(next_u64() & (un - 1));
    int bits = 0;
    while ((un >> bits) != 0) ++bits;
    mask = (bits == 64) ? ~uint64_t{0} : ((uint64_t{1} << bits) - 1);
    for (;;) {
      const uint64_t v = next_u64() & mask;
      if (v < un) return static_cast<int64_t>(v);
    }
  }

  /// Uniform in [lo, hi], inclusive.
  int64_t in_range(int64_t lo, int64_t hi) {
    if (hi < lo) throw std::domain_error("CounterRng::in_range: empty range");
    return lo + below(hi - lo + 1);
  }

 private:
  uint64_t key_;
  uint64_t sub_ = 0;
};

}  // namespace linhash
