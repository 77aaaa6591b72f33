#include "linhash/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace linhash {

namespace {

constexpr const char* kKindNames[] = {
    "blocked-int",    "strided-int", "smart-blocked", "random-modulus",
    "real-blocked",   "twobin-mult", "twobin-affine",
};

}  // namespace

const char* family_kind_name(FamilyKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

FamilyKind family_kind_from_name(const std::string& name) {
  for (int i = 0; i < 7; ++i) {
    if (name == kKindNames[i]) return static_cast<FamilyKind>(i);
  }
  throw std::domain_error("unknown family kind: " + name);
}

void FamilyConfig::validate() const {
  if (modulus < 2) throw std::domain_error("config: modulus/universe must be >= 2");
  if (modulus > kMaxModulus)
    throw std::domain_error("config: modulus above 2^31 not supported");
  if (bins < 2) throw std::domain_error("config: bins must be >= 2");
  if (bins > modulus) throw std::domain_error("config: bins must be <= modulus");
  if (kind == FamilyKind::TwoBinMult || kind == FamilyKind::TwoBinAffine) {
    if (bins != 2) throw std::domain_error("config: two-bin family needs bins = 2");
    if (!is_prime(static_cast<uint64_t>(modulus)))
      throw std::domain_error("config: two-bin family needs a prime modulus");
  }
  if (kind == FamilyKind::RealBlocked) {
    if (real_denominator < bins * modulus)
      throw std::domain_error("config: real_denominator must be >= bins * universe");
    if (real_denominator > (int64_t{1} << 56))
      throw std::domain_error("config: real_denominator above 2^56 not supported");
  } else if (real_denominator != 0) {
    throw std::domain_error("config: real_denominator only applies to real-blocked");
  }
}

int64_t default_real_denominator(int64_t bins, int64_t universe) {
  const int64_t target = bins * universe * 1024;
  int64_t n = 1;
  while (n < target) n <<= 1;
  return n;
}

ItemSet ItemSet::from_values(std::vector<int64_t> values) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw std::domain_error("item set: negative element");
    if (i > 0 && values[i] == values[i - 1])
      throw std::domain_error("item set: duplicate element");
  }
  ItemSet s;
  s.elements_ = std::move(values);
  return s;
}

bool ItemSet::contains(int64_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

int64_t bin_blocked_raw(int64_t x, int64_t a, int64_t m, int64_t beta) {
  const int64_t r = (a % m) * (x % m) % m;
  return r * beta / m;
}

int64_t bin_strided_raw(int64_t x, int64_t a, int64_t m, int64_t beta) {
  return (a % m) * (x % m) % m % beta;
}

int64_t bin_affine_raw(int64_t x, int64_t a, int64_t b, int64_t p) {
  const int64_t r = ((a % p) * (x % p) + b) % p;
  return 2 * r / p;
}

int64_t bin_real_grid_raw(int64_t x, int64_t a_num, int64_t grid_den, int64_t beta) {
  const auto r =
      static_cast<unsigned __int128>(a_num) * static_cast<uint64_t>(x) %
      static_cast<uint64_t>(grid_den);
  return static_cast<int64_t>(r * static_cast<uint64_t>(beta) /
                              static_cast<uint64_t>(grid_den));
}

int64_t bin_real_rational(int64_t x, const Rational& multiplier, int64_t beta) {
  if (beta < 1) throw std::domain_error("bin_real_rational: bins must be >= 1");
  const Rational frac = mod_reduce(multiplier * Rational(x), 1);
  return to_i64((frac * Rational(beta)).floor());
}

void validate_param(const FamilyConfig& cfg, const HashParam& param) {
  const int64_t m = cfg.modulus;
  auto fail = [](const char* what) { throw std::domain_error(what); };
  switch (cfg.kind) {
    case FamilyKind::BlockedInt:
    case FamilyKind::StridedInt:
    case FamilyKind::TwoBinMult:
      if (param.a < 1 || param.a >= m) fail("param: multiplier out of [1, m-1]");
      if (param.b != 0 || param.inner_modulus != 0) fail("param: unexpected fields");
      break;
    case FamilyKind::SmartBlocked:
      if (param.a < 1 || param.a >= m) fail("param: multiplier out of [1, m-1]");
      if (gcd64(param.a, m) != 1) fail("param: multiplier not a unit");
      if (param.b != 0 || param.inner_modulus != 0) fail("param: unexpected fields");
      break;
    case FamilyKind::TwoBinAffine:
      if (param.a < 1 || param.a >= m) fail("param: multiplier out of [1, p-1]");
      if (param.b < 0 || param.b >= m) fail("param: shift out of [0, p-1]");
      if (param.inner_modulus != 0) fail("param: unexpected fields");
      break;
    case FamilyKind::RealBlocked:
      if (param.a < 1 || param.a >= cfg.real_denominator)
        fail("param: grid numerator out of [1, N-1]");
      if (param.b != 0 || param.inner_modulus != 0) fail("param: unexpected fields");
      break;
    case FamilyKind::RandomModulus: {
      const int64_t k = param.inner_modulus;
      if (k < (m + 1) / 2 || k > m) fail("param: inner modulus out of range");
      if (k == 1) {
        if (param.a != 0) fail("param: unit of Z_1 is 0");
      } else {
        if (param.a < 1 || param.a >= k) fail("param: multiplier out of [1, k-1]");
        if (gcd64(param.a, k) != 1) fail("param: multiplier not a unit of Z_k");
      }
      if (param.b != 0) fail("param: unexpected fields");
      break;
    }
  }
}

int64_t bin_of_unchecked(int64_t x, const HashParam& param, const FamilyConfig& cfg) {
  switch (cfg.kind) {
    case FamilyKind::BlockedInt:
    case FamilyKind::SmartBlocked:
      return bin_blocked_raw(x, param.a, cfg.modulus, cfg.bins);
    case FamilyKind::StridedInt:
      return bin_strided_raw(x, param.a, cfg.modulus, cfg.bins);
    case FamilyKind::TwoBinMult:
      return bin_affine_raw(x, param.a, 0, cfg.modulus);
    case FamilyKind::TwoBinAffine:
      return bin_affine_raw(x, param.a, param.b, cfg.modulus);
    case FamilyKind::RealBlocked:
      return bin_real_grid_raw(x, param.a, cfg.real_denominator, cfg.bins);
    case FamilyKind::RandomModulus:
      if (param.inner_modulus == 1) return 0;
      return bin_blocked_raw(x, param.a, param.inner_modulus, cfg.bins);
  }
  throw std::logic_error("bin_of: unreachable");
}

int64_t bin_of(int64_t x, const HashParam& param, const FamilyConfig& cfg) {
  cfg.validate();
  validate_param(cfg, param);
  if (x < 0 || x >= cfg.modulus)
    throw std::domain_error("bin_of: element outside the universe");
  return bin_of_unchecked(x, param, cfg);
}

ParamSpace::ParamSpace(FamilyConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  const int64_t m = cfg_.modulus;
  switch (cfg_.kind) {
    case FamilyKind::BlockedInt:
    case FamilyKind::StridedInt:
    case FamilyKind::TwoBinMult:
      size_ = static_cast<uint64_t>(m - 1);
      break;
    case FamilyKind::SmartBlocked:
      size_ = static_cast<uint64_t>(totient(m));
      break;
    case FamilyKind::TwoBinAffine:
      size_ = static_cast<uint64_t>(m) * static_cast<uint64_t>(m - 1);
      break;
    case FamilyKind::RealBlocked:
      size_ = static_cast<uint64_t>(cfg_.real_denominator - 1);
      break;
    case FamilyKind::RandomModulus: {
      uint64_t total = 0;
      for (int64_t k = (m + 1) / 2; k <= m; ++k)
        total += static_cast<uint64_t>(totient(k));
      size_ = total;
      break;
    }
  }
}

Rational ParamSpace::weight(const HashParam& param) const {
  validate_param(cfg_, param);
  if (uniform()) return Rational(1, static_cast<int64_t>(size_));
  const int64_t lo = (cfg_.modulus + 1) / 2;
  const int64_t stage_count = cfg_.modulus - lo + 1;
  return Rational(1, stage_count) * Rational(1, totient(param.inner_modulus));
}

ParamSpace param_space(const FamilyConfig& cfg) { return ParamSpace(cfg); }

HashParam sample_param(const FamilyConfig& cfg, CounterRng& rng) {
  cfg.validate();
  const int64_t m = cfg.modulus;
  switch (cfg.kind) {
    case FamilyKind::BlockedInt:
    case FamilyKind::StridedInt:
    case FamilyKind::TwoBinMult:
      return HashParam{rng.in_range(1, m - 1), 0, 0};
    case FamilyKind::SmartBlocked:
      for (;;) {
        const int64_t a = rng.in_range(1, m - 1);
        if (gcd64(a, m) == 1) return HashParam{a, 0, 0};
      }
    case FamilyKind::TwoBinAffine:
      return HashParam{rng.in_range(1, m - 1), rng.in_range(0, m - 1), 0};
    case FamilyKind::RealBlocked:
      return HashParam{rng.in_range(1, cfg.real_denominator - 1), 0, 0};
    case FamilyKind::RandomModulus: {
      const int64_t k = rng.in_range((m + 1) / 2, m);
      if (k == 1) return HashParam{0, 0, 1};
      for (;;) {
        const int64_t a = rng.in_range(1, k - 1);
        if (gcd64(a, k) == 1) return HashParam{a, 0, k};
      }
    }
  }
  throw std::logic_error("sample_param: unreachable");
}

}  // namespace linhash
