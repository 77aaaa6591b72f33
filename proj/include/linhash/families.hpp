#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linhash/numtheory.hpp"
#include "linhash/rational.hpp"
#include "linhash/rng.hpp"

namespace linhash {

enum class FamilyKind {
  BlockedInt,     // bin = floor(m_m(ax) * beta / m), a in [1, m-1]
  StridedInt,     // bin = m_beta(m_m(ax)),           a in [1, m-1]
  SmartBlocked,   // blocked with a drawn from the units of Z_m
  RandomModulus,  // pick k in [ceil(m/2), m], then SmartBlocked mod k
  RealBlocked,    // blocked with rational multiplier a/N on the grid 1/N
  TwoBinMult,     // two bins, prime p, a in [1, p-1]
  TwoBinAffine,   // two bins, prime p, (a, b) in [1, p-1] x [0, p-1]
};

const char* family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

/// Default moduli cap; sweeps stay in fast fixed-width arithmetic below it.
inline constexpr int64_t kMaxModulus = int64_t{1} << 31;

struct FamilyConfig {
  FamilyKind kind = FamilyKind::BlockedInt;
  int64_t modulus = 0;           // m, p, or universe u depending on kind
  int64_t bins = 0;              // beta
  int64_t real_denominator = 0;  // N; RealBlocked only

  void validate() const;  // throws std::domain_error
};

/// Smallest power of two >= n * u * 2^10; grid resolution fine enough that
/// rounding a real multiplier to the grid moves every item by less than one
/// pre-bin (the 1/(nu) window argument).
int64_t default_real_denominator(int64_t bins, int64_t universe);

struct HashParam {
  int64_t a = 0;              // multiplier; RealBlocked: numerator of a/N
  int64_t b = 0;              // shift; TwoBinAffine only
  int64_t inner_modulus = 0;  // k; RandomModulus only

  friend bool operator==(const HashParam&, const HashParam&) = default;
};

/// Sorted duplicate-free set of universe elements.
class ItemSet {
 public:
  ItemSet() = default;
  /// Sorts, then rejects duplicates and negative elements.
  static ItemSet from_values(std::vector<int64_t> values);

  const std::vector<int64_t>& elements() const { return elements_; }
  int64_t size() const { return static_cast<int64_t>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  int64_t max_element() const { return elements_.empty() ? -1 : elements_.back(); }
  bool contains(int64_t x) const;

 private:
  std::vector<int64_t> elements_;
};

// Low-level bin maps, exact integer arithmetic throughout. bin_blocked_raw
// computes floor(m_m(ax) * beta / m), identical to floor(m_m(ax) / (m/beta)).
int64_t bin_blocked_raw(int64_t x, int64_t a, int64_t m, int64_t beta);
int64_t bin_strided_raw(int64_t x, int64_t a, int64_t m, int64_t beta);
int64_t bin_affine_raw(int64_t x, int64_t a, int64_t b, int64_t p);
int64_t bin_real_grid_raw(int64_t x, int64_t a_num, int64_t grid_den, int64_t beta);
/// Bin of x under an exact rational multiplier in (0, 1).
int64_t bin_real_rational(int64_t x, const Rational& multiplier, int64_t beta);

/// Throws std::domain_error when param violates the family's invariant.
void validate_param(const FamilyConfig& cfg, const HashParam& param);

/// Dispatching bin map; validates inputs.
int64_t bin_of(int64_t x, const HashParam& param, const FamilyConfig& cfg);
/// Same, no validation; for sweep loops that enumerate valid params.
int64_t bin_of_unchecked(int64_t x, const HashParam& param, const FamilyConfig& cfg);

/// Enumerable description of the parameter space of a family.
class ParamSpace {
 public:
  explicit ParamSpace(FamilyConfig cfg);

  uint64_t size() const { return size_; }

  /// Probability of drawing `param` under sample_param. Uniform for every
  /// family except RandomModulus, whose draw is two-stage (k, then a).
  Rational weight(const HashParam& param) const;
  bool uniform() const { return cfg_.kind != FamilyKind::RandomModulus; }

  /// Visits every parameter once, in a canonical deterministic order.
  template <typename F>
  void for_each(F&& f) const {
    const int64_t m = cfg_.modulus;
    switch (cfg_.kind) {
      case FamilyKind::BlockedInt:
      case FamilyKind::StridedInt:
      case FamilyKind::TwoBinMult:
        for (int64_t a = 1; a < m; ++a) f(HashParam{a, 0, 0});
        break;
      case FamilyKind::SmartBlocked:
        for (int64_t a = 1; a < m; ++a) {
          if (gcd64(a, m) == 1) f(HashParam{a, 0, 0});
        }
        break;
      case FamilyKind::TwoBinAffine:
        for (int64_t a = 1; a < m; ++a) {
          for (int64_t b = 0; b < m; ++b) f(HashParam{a, b, 0});
        }
        break;
      case FamilyKind::RealBlocked:
        for (int64_t a = 1; a < cfg_.real_denominator; ++a) f(HashParam{a, 0, 0});
        break;
      case FamilyKind::RandomModulus:
        for (int64_t k = (m + 1) / 2; k <= m; ++k) {
          if (k == 1) {
            f(HashParam{0, 0, 1});
            continue;
          }
          for (int64_t a = 1; a < k; ++a) {
            if (gcd64(a, k) == 1) f(HashParam{a, 0, k});
          }
        }
        break;
    }
  }

  const FamilyConfig& config() const { return cfg_; }

 private:
  FamilyConfig cfg_;
  uint64_t size_ = 0;
};

ParamSpace param_space(const FamilyConfig& cfg);

/// Uniform draw from the parameter space; RandomModulus draws k uniformly
/// from [ceil(m/2), m] and then a uniformly from the units of Z_k, which is
/// not uniform over (k, a) pairs.
HashParam sample_param(const FamilyConfig& cfg, CounterRng& rng);

}  // namespace linhash
